#pragma once

#include <vector>

#include <Eigen/Dense>

#include "subqchem/hamiltonian.hpp"
#include "subqchem/lattice.hpp"
#include "subqchem/operator_matrix.hpp"

namespace subqchem {

enum class TermKind {
  kNuclear,  // single-register shift with a nuclear phase (U contribution)
  kPair,     // paired opposite shifts on two registers (V contribution)
};

/// One weighted unitary w_s H_s of the potential decomposition
/// B = U + V = sum_s w_s H_s.
struct LcuTerm {
  TermKind kind = TermKind::kPair;
  Vec3i nu = Vec3i::Zero();  // momentum transfer, in G0
  int x = 0;                 // boundary-superposition branch, 0 or 1
  int ell = -1;              // nucleus index (nuclear terms)
  int i = -1;                // first register (pair terms; i == j allowed)
  int j = 0;                 // acted register (nuclear) / second register (pair)
  double weight = 0.0;
};

/// All terms (nu, ell, j, x) and (nu, i, j, x); count = |G0| * 2 * (L*eta + eta^2).
std::vector<LcuTerm> enumerate_terms(const SimulationCell& cell);

/// Applies H_s to a state vector. Shifts that leave G wrap around the G box
/// (keeping H_s a signed permutation, hence unitary); the x = 1 branch flips
/// the sign on wrapped transitions so that averaging over x cancels them.
Eigen::VectorXcd apply_term(const LcuTerm& term, const FirstQuantizedBasis& basis,
                            const Eigen::VectorXcd& state);

struct LambdaBreakdown {
  double total = 0.0;          // includes same-register pair terms
  double nuclear = 0.0;        // U branch
  double pair = 0.0;           // V branch, all (i, j)
  double identity_shift = 0.0; // c: mass of the i == j pair terms
  double total_offdiag_only() const { return total - identity_shift; }
};

/// lambda = sum_s w_s by exact summation over G0, with the per-branch split.
LambdaBreakdown lambda_breakdown(const SimulationCell& cell);
double lambda_total(const SimulationCell& cell);

/// sum_s w_s H_s as a dense matrix; equals U + V + c*I with c the identity
/// shift of the same-register pair terms.
OperatorMatrix reconstruct_potential(const SimulationCell& cell);

/// One amplitude class of the PREPARE state (the x branch is implicit: the
/// squared amplitude carries both x values of the class).
struct PrepareAmplitude {
  TermKind kind;
  Vec3i nu;
  int ell_or_i;  // nucleus index (nuclear) or register i (pair)
  int j;
  double amplitude;
};

/// Index-register amplitudes; squares sum to 1 over all classes.
std::vector<PrepareAmplitude> prepare_weights(const SimulationCell& cell);

/// diag(exp(-i tau sum_j |k_{p_j}|^2 / 2)).
OperatorMatrix kinetic_phase(const FirstQuantizedBasis& basis, double tau);

}  // namespace subqchem
