#include "subqchem/lcu.hpp"

#include <cmath>
#include <stdexcept>

namespace subqchem {

namespace {

// Componentwise wrap into [-g, g] modulo the G box side (2g+1).
Vec3i wrap_into_g(const Vec3i& v, int g) {
  const int side = 2 * g + 1;
  Vec3i w;
  for (int c = 0; c < 3; ++c) {
    int r = (v(c) + g) % side;
    if (r < 0) r += side;
    w(c) = r - g;
  }
  return w;
}

// Per-transfer shift tables: wrapped target orbital and out-of-G flag.
struct ShiftTable {
  std::vector<std::int64_t> target;
  std::vector<char> left_g;
};

ShiftTable make_shift_table(const FirstQuantizedBasis& basis, const Vec3i& shift) {
  const int n_p = basis.cell().n_p();
  const int g = basis.cell().g_half_width();
  const std::int64_t n = basis.num_orbitals();
  ShiftTable table;
  table.target.resize(static_cast<std::size_t>(n));
  table.left_g.resize(static_cast<std::size_t>(n));
  for (std::int64_t a = 0; a < n; ++a) {
    const Vec3i shifted = basis.orbital_of(a) + shift;
    const bool outside = !in_grid_g(shifted, n_p);
    table.target[static_cast<std::size_t>(a)] =
        basis.orbital_index(wrap_into_g(shifted, g));
    table.left_g[static_cast<std::size_t>(a)] = outside ? 1 : 0;
  }
  return table;
}

double pair_weight(const SimulationCell& cell, const Vec3i& nu) {
  return kPi / (cell.omega() * wavenumber(nu, cell.omega()).squaredNorm());
}

double nuclear_weight(const SimulationCell& cell, const Vec3i& nu, int zeta) {
  return 2.0 * kPi * zeta / (cell.omega() * wavenumber(nu, cell.omega()).squaredNorm());
}

// Nuclear-term phase. Eq.-of-motion convention: the matrix element of the
// potential carries exp(+i k_nu . R_ell) for a shift by -nu, matching the
// nuclear potential matrix builder; tested against it by reconstruction.
Complex nuclear_phase(const SimulationCell& cell, const Vec3i& nu, int ell) {
  const Vec3d k = wavenumber(nu, cell.omega());
  return -std::exp(kImaginary * k.dot(cell.nuclei()[static_cast<std::size_t>(ell)].r));
}

}  // namespace

std::vector<LcuTerm> enumerate_terms(const SimulationCell& cell) {
  const std::vector<Vec3i> transfers = grid_g0(cell);
  const int eta = cell.eta();
  const int n_nuclei = cell.num_nuclei();
  std::vector<LcuTerm> terms;
  terms.reserve(transfers.size() * 2 *
                static_cast<std::size_t>(n_nuclei * eta + eta * eta));
  for (const Vec3i& nu : transfers) {
    for (int ell = 0; ell < n_nuclei; ++ell) {
      const double w = nuclear_weight(cell, nu, cell.nuclei()[static_cast<std::size_t>(ell)].zeta);
      for (int j = 0; j < eta; ++j) {
        for (int x = 0; x < 2; ++x) {
          LcuTerm t;
          t.kind = TermKind::kNuclear;
          t.nu = nu;
          t.x = x;
          t.ell = ell;
          t.j = j;
          t.weight = w;
          terms.push_back(t);
        }
      }
    }
    const double w = pair_weight(cell, nu);
    for (int i = 0; i < eta; ++i) {
      for (int j = 0; j < eta; ++j) {
        for (int x = 0; x < 2; ++x) {
          LcuTerm t;
          t.kind = TermKind::kPair;
          t.nu = nu;
          t.x = x;
          t.i = i;
          t.j = j;
          t.weight = w;
          terms.push_back(t);
        }
      }
    }
  }
  return terms;
}

Eigen::VectorXcd apply_term(const LcuTerm& term, const FirstQuantizedBasis& basis,
                            const Eigen::VectorXcd& state) {
  if (state.size() != basis.dim()) {
    throw std::invalid_argument("apply_term: state dimension mismatch");
  }
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(state.size());

  if (term.kind == TermKind::kPair && term.i == term.j) {
    // Same-register pair: the shift by nu is undone by the shift by -nu, so
    // the action is the identity for both x branches.
    out = state;
    return out;
  }

  if (term.kind == TermKind::kNuclear) {
    const ShiftTable minus = make_shift_table(basis, -term.nu);
    const Complex phase = nuclear_phase(basis.cell(), term.nu, term.ell);
    for (std::int64_t src = 0; src < basis.dim(); ++src) {
      const std::int64_t q = basis.register_orbital(src, term.j);
      const std::int64_t dst =
          basis.replace_register(src, term.j, minus.target[static_cast<std::size_t>(q)]);
      const double sign =
          (term.x == 1 && minus.left_g[static_cast<std::size_t>(q)]) ? -1.0 : 1.0;
      out(dst) += sign * phase * state(src);
    }
    return out;
  }

  const ShiftTable plus = make_shift_table(basis, term.nu);
  const ShiftTable minus = make_shift_table(basis, -term.nu);
  for (std::int64_t src = 0; src < basis.dim(); ++src) {
    const std::int64_t p = basis.register_orbital(src, term.i);
    const std::int64_t q = basis.register_orbital(src, term.j);
    std::int64_t dst =
        basis.replace_register(src, term.i, plus.target[static_cast<std::size_t>(p)]);
    dst = basis.replace_register(dst, term.j, minus.target[static_cast<std::size_t>(q)]);
    const bool left = plus.left_g[static_cast<std::size_t>(p)] ||
                      minus.left_g[static_cast<std::size_t>(q)];
    const double sign = (term.x == 1 && left) ? -1.0 : 1.0;
    out(dst) += sign * state(src);
  }
  return out;
}

LambdaBreakdown lambda_breakdown(const SimulationCell& cell) {
  const double kernel_sum = inverse_square_lattice_sum(cell.g0_half_width());
  // sum_{nu in G0} 1 / (omega |k_nu|^2) = kernel_sum / (4 pi^2 omega^{1/3})
  const double base = kernel_sum / (4.0 * kPi * kPi * std::cbrt(cell.omega()));
  const double eta = cell.eta();
  LambdaBreakdown b;
  b.nuclear = 2.0 * eta * 2.0 * kPi * cell.total_charge() * base;
  b.pair = 2.0 * eta * eta * kPi * base;
  b.identity_shift = 2.0 * eta * kPi * base;
  b.total = b.nuclear + b.pair;
  return b;
}

double lambda_total(const SimulationCell& cell) { return lambda_breakdown(cell).total; }

OperatorMatrix reconstruct_potential(const SimulationCell& cell) {
  const FirstQuantizedBasis basis(cell);
  if (basis.dim() > OperatorMatrix::kDenseLimit) {
    throw std::invalid_argument("reconstruct_potential: dimension exceeds dense limit");
  }
  const std::vector<Vec3i> transfers = grid_g0(cell);
  const int eta = cell.eta();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(basis.dim(), basis.dim());

  for (const Vec3i& nu : transfers) {
    const ShiftTable plus = make_shift_table(basis, nu);
    const ShiftTable minus = make_shift_table(basis, -nu);

    for (int ell = 0; ell < cell.num_nuclei(); ++ell) {
      const double w =
          nuclear_weight(cell, nu, cell.nuclei()[static_cast<std::size_t>(ell)].zeta);
      const Complex phase = nuclear_phase(cell, nu, ell);
      for (int j = 0; j < eta; ++j) {
        for (std::int64_t src = 0; src < basis.dim(); ++src) {
          const std::int64_t q = basis.register_orbital(src, j);
          const std::int64_t dst =
              basis.replace_register(src, j, minus.target[static_cast<std::size_t>(q)]);
          // x = 0 and x = 1 contributions: 2w in range, w - w = 0 outside.
          if (!minus.left_g[static_cast<std::size_t>(q)]) {
            acc(dst, src) += 2.0 * w * phase;
          }
        }
      }
    }

    const double w = pair_weight(cell, nu);
    for (int i = 0; i < eta; ++i) {
      for (int j = 0; j < eta; ++j) {
        if (i == j) {
          // Identity action for both x branches.
          for (std::int64_t src = 0; src < basis.dim(); ++src) acc(src, src) += 2.0 * w;
          continue;
        }
        for (std::int64_t src = 0; src < basis.dim(); ++src) {
          const std::int64_t p = basis.register_orbital(src, i);
          const std::int64_t q = basis.register_orbital(src, j);
          if (plus.left_g[static_cast<std::size_t>(p)] ||
              minus.left_g[static_cast<std::size_t>(q)]) {
            continue;  // x average cancels wrapped transitions
          }
          std::int64_t dst =
              basis.replace_register(src, i, plus.target[static_cast<std::size_t>(p)]);
          dst = basis.replace_register(dst, j, minus.target[static_cast<std::size_t>(q)]);
          acc(dst, src) += 2.0 * w;
        }
      }
    }
  }
  return OperatorMatrix::from_dense(std::move(acc));
}

std::vector<PrepareAmplitude> prepare_weights(const SimulationCell& cell) {
  const double lambda = lambda_total(cell);
  const std::vector<Vec3i> transfers = grid_g0(cell);
  const int eta = cell.eta();
  std::vector<PrepareAmplitude> amps;
  amps.reserve(transfers.size() *
               static_cast<std::size_t>(cell.num_nuclei() * eta + eta * eta));
  for (const Vec3i& nu : transfers) {
    const double k_sq = wavenumber(nu, cell.omega()).squaredNorm();
    for (int ell = 0; ell < cell.num_nuclei(); ++ell) {
      const double zeta = cell.nuclei()[static_cast<std::size_t>(ell)].zeta;
      const double amp = std::sqrt(4.0 * kPi * zeta / (lambda * cell.omega() * k_sq));
      for (int j = 0; j < eta; ++j) {
        amps.push_back({TermKind::kNuclear, nu, ell, j, amp});
      }
    }
    const double amp = std::sqrt(2.0 * kPi / (lambda * cell.omega() * k_sq));
    for (int i = 0; i < eta; ++i) {
      for (int j = 0; j < eta; ++j) {
        amps.push_back({TermKind::kPair, nu, i, j, amp});
      }
    }
  }
  return amps;
}

OperatorMatrix kinetic_phase(const FirstQuantizedBasis& basis, double tau) {
  const Eigen::VectorXd diag = kinetic_diagonal(basis);
  std::vector<Eigen::Triplet<Complex>> entries;
  entries.reserve(static_cast<std::size_t>(basis.dim()));
  for (std::int64_t i = 0; i < basis.dim(); ++i) {
    entries.emplace_back(static_cast<int>(i), static_cast<int>(i),
                         std::exp(-kImaginary * tau * diag(i)));
  }
  return OperatorMatrix::from_triplets(basis.dim(), entries);
}

}  // namespace subqchem
