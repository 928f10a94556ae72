#include "subqchem/lattice.hpp"

#include <cmath>
#include <stdexcept>

#include "subqchem/threading.hpp"

namespace subqchem {

SimulationCell::SimulationCell(int eta, double omega, int n_p,
                               std::vector<Nucleus> nuclei)
    : eta_(eta), omega_(omega), n_p_(n_p), nuclei_(std::move(nuclei)) {
  if (eta_ < 1) throw std::invalid_argument("SimulationCell: eta must be >= 1");
  if (!(omega_ > 0.0)) throw std::invalid_argument("SimulationCell: omega must be > 0");
  if (n_p_ < 2) throw std::invalid_argument("SimulationCell: n_p must be >= 2");
  if (n_p_ > 20) throw std::invalid_argument("SimulationCell: n_p too large");
  if (static_cast<int>(nuclei_.size()) > eta_) {
    throw std::invalid_argument("SimulationCell: more nuclei than electrons");
  }
  for (const Nucleus& nuc : nuclei_) {
    if (nuc.zeta < 1) throw std::invalid_argument("SimulationCell: zeta must be >= 1");
  }
}

int SimulationCell::total_charge() const {
  int z = 0;
  for (const Nucleus& nuc : nuclei_) z += nuc.zeta;
  return z;
}

double SimulationCell::cell_length() const { return std::cbrt(omega_); }

std::int64_t SimulationCell::num_orbitals() const {
  const std::int64_t side = 2 * g_half_width() + 1;
  return side * side * side;
}

Vec3d wavenumber(const Vec3i& p, double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("wavenumber: omega must be > 0");
  return (2.0 * kPi / std::cbrt(omega)) * p.cast<double>();
}

bool in_grid_g(const Vec3i& v, int n_p) {
  const int g = (1 << (n_p - 1)) - 1;
  return std::abs(v.x()) <= g && std::abs(v.y()) <= g && std::abs(v.z()) <= g;
}

bool in_grid_g0(const Vec3i& v, int n_p) {
  const int h = (1 << n_p) - 1;
  if (v.x() == 0 && v.y() == 0 && v.z() == 0) return false;
  return std::abs(v.x()) <= h && std::abs(v.y()) <= h && std::abs(v.z()) <= h;
}

namespace {

std::vector<Vec3i> enumerate_cube(int half_width, bool skip_origin) {
  std::vector<Vec3i> pts;
  const std::int64_t side = 2 * static_cast<std::int64_t>(half_width) + 1;
  pts.reserve(static_cast<std::size_t>(side * side * side));
  for (int x = -half_width; x <= half_width; ++x) {
    for (int y = -half_width; y <= half_width; ++y) {
      for (int z = -half_width; z <= half_width; ++z) {
        if (skip_origin && x == 0 && y == 0 && z == 0) continue;
        pts.emplace_back(x, y, z);
      }
    }
  }
  return pts;
}

}  // namespace

std::vector<Vec3i> grid_g(const SimulationCell& cell) {
  return enumerate_cube(cell.g_half_width(), false);
}

std::vector<Vec3i> grid_g0(const SimulationCell& cell) {
  return enumerate_cube(cell.g0_half_width(), true);
}

double inverse_square_lattice_sum(int half_width) {
  if (half_width < 1) throw std::invalid_argument("inverse_square_lattice_sum: half_width >= 1");
  const int h = half_width;
  // Octant reduction: enumerate 0 <= x <= y <= z <= h once, weighting each
  // sorted triple by its number of distinct permutations times 2^{#nonzero}
  // sign choices.
  auto row_sum = [h](std::int64_t x0, std::int64_t x1) {
    KahanSum acc;
    for (std::int64_t x = x0; x < x1; ++x) {
      for (std::int64_t y = x; y <= h; ++y) {
        const double base = static_cast<double>(x * x + y * y);
        // z == y term
        if (!(x == 0 && y == 0)) {
          const double perm = (x == y) ? 1.0 : 3.0;
          const int nz = (x > 0 ? 1 : 0) + (y > 0 ? 2 : 0);
          const double w = perm * static_cast<double>(1 << nz);
          acc.add(w / (base + static_cast<double>(y * y)));
        }
        // z > y terms: multiplicity constant along the row
        const double perm = (x == y) ? 3.0 : 6.0;
        const int nonzero = (x > 0) ? 3 : (y > 0 ? 2 : 1);
        const double w = perm * static_cast<double>(1 << nonzero);
        double row = 0.0;
        for (std::int64_t z = y + 1; z <= h; ++z) {
          row += 1.0 / (base + static_cast<double>(z * z));
        }
        acc.add(w * row);
      }
    }
    return acc.value();
  };
  return deterministic_chunked_sum(0, h + 1, 16, row_sum);
}

}  // namespace subqchem
