#pragma once

#include <cstdint>
#include <vector>

#include "subqchem/types.hpp"

namespace subqchem {

struct Nucleus {
  int zeta = 1;             // nuclear charge
  Vec3d r = Vec3d::Zero();  // position inside the cell, atomic units
};

/// Cubic periodic simulation cell: eta electrons in volume omega, orbitals
/// indexed by n_p bits per momentum component (sign-bit integer encoding).
///
/// The orbital grid G spans [-g, g]^3 with g = 2^{n_p-1}-1, so
/// N = |G| = (2^{n_p}-1)^3. The momentum-transfer grid G0 uses one extra bit
/// per component (n = n_p+1): it spans [-(2^{n_p}-1), 2^{n_p}-1]^3 minus the
/// origin, which covers every difference p - q of orbital indices.
class SimulationCell {
 public:
  SimulationCell(int eta, double omega, int n_p, std::vector<Nucleus> nuclei = {});

  int eta() const { return eta_; }
  double omega() const { return omega_; }
  int n_p() const { return n_p_; }
  const std::vector<Nucleus>& nuclei() const { return nuclei_; }
  int num_nuclei() const { return static_cast<int>(nuclei_.size()); }

  int total_charge() const;
  bool is_charge_neutral() const { return total_charge() == eta_; }

  double cell_length() const;  // omega^{1/3}

  int g_half_width() const { return (1 << (n_p_ - 1)) - 1; }
  int g0_half_width() const { return (1 << n_p_) - 1; }
  std::int64_t num_orbitals() const;  // N = (2^{n_p}-1)^3

 private:
  int eta_;
  double omega_;
  int n_p_;
  std::vector<Nucleus> nuclei_;
};

/// k_p = 2*pi*p / omega^{1/3}, componentwise.
Vec3d wavenumber(const Vec3i& p, double omega);

bool in_grid_g(const Vec3i& v, int n_p);
bool in_grid_g0(const Vec3i& v, int n_p);

/// All lattice indices of G (or G0), lexicographic in (x, y, z).
std::vector<Vec3i> grid_g(const SimulationCell& cell);
std::vector<Vec3i> grid_g0(const SimulationCell& cell);

/// Sum of 1/|nu|^2 over the integer cube [-half_width, half_width]^3 minus
/// the origin, by octant-reduced enumeration with compensated accumulation.
double inverse_square_lattice_sum(int half_width);

}  // namespace subqchem
