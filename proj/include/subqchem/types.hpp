#pragma once

#include <complex>
#include <cstdint>
#include <numbers>

#include <Eigen/Core>

namespace subqchem {

using Complex = std::complex<double>;
using Vec3i = Eigen::Vector3i;
using Vec3d = Eigen::Vector3d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kImaginary{0.0, 1.0};

}  // namespace subqchem
