#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "subqchem/lattice.hpp"
#include "subqchem/operator_matrix.hpp"

namespace subqchem {

/// Computational basis of the eta-particle space: product states
/// |p_1 ... p_eta> with each p_j in G, ordered lexicographically
/// (register 1 most significant, components within a register by (x, y, z)).
class FirstQuantizedBasis {
 public:
  explicit FirstQuantizedBasis(SimulationCell cell);

  const SimulationCell& cell() const { return cell_; }
  std::int64_t num_orbitals() const { return n_orbitals_; }
  std::int64_t dim() const { return dim_; }

  /// Single-register index of a lattice vector in [0, N).
  std::int64_t orbital_index(const Vec3i& p) const;
  Vec3i orbital_of(std::int64_t idx) const;

  std::int64_t index_of(const std::vector<Vec3i>& momenta) const;
  std::vector<Vec3i> tuple_of(std::int64_t idx) const;

  /// Replaces register j of the encoded tuple, without full decode.
  std::int64_t replace_register(std::int64_t idx, int j, std::int64_t orbital) const;
  std::int64_t register_orbital(std::int64_t idx, int j) const;

 private:
  SimulationCell cell_;
  std::int64_t n_orbitals_;
  std::int64_t dim_;
  std::vector<std::int64_t> stride_;  // stride of register j in the flat index
};

/// Sum over registers of |k_p|^2 / 2, per basis state.
Eigen::VectorXd kinetic_diagonal(const FirstQuantizedBasis& basis);

/// Kinetic operator T (diagonal).
OperatorMatrix kinetic_matrix(const FirstQuantizedBasis& basis);

/// External (nuclear) potential U: off-diagonal in each register, element
/// -(4 pi / omega) sum_l zeta_l exp(i k_{q-p} . R_l) / |k_{p-q}|^2.
OperatorMatrix nuclear_potential_matrix(const FirstQuantizedBasis& basis);

/// Two-body Coulomb operator V over ordered register pairs i != j and
/// momentum transfers nu in G0 with both shifted momenta inside G.
OperatorMatrix electron_repulsion_matrix(const FirstQuantizedBasis& basis);

/// T + U + V.
OperatorMatrix hamiltonian_matrix(const FirstQuantizedBasis& basis);

/// P = (1/eta!) sum_pi sgn(pi) Pi(pi), by explicit permutation enumeration.
OperatorMatrix antisymmetric_projector(const FirstQuantizedBasis& basis);

/// Permutation operator swapping two registers (used for covariance checks).
OperatorMatrix register_swap(const FirstQuantizedBasis& basis, int a, int b);

/// Rounds each nuclear position to the nearest multiple of
/// 2^{-b_r} * omega^{1/3} per component (delta_R = 2^{-b_r}).
SimulationCell quantize_nuclei(const SimulationCell& cell, int b_r);

}  // namespace subqchem
