#include "subqchem/hamiltonian.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace subqchem {

namespace {

constexpr std::int64_t kMaxDim = 1'000'000;

int factorial(int n) {
  int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

FirstQuantizedBasis::FirstQuantizedBasis(SimulationCell cell) : cell_(std::move(cell)) {
  n_orbitals_ = cell_.num_orbitals();
  dim_ = 1;
  for (int j = 0; j < cell_.eta(); ++j) {
    if (dim_ > kMaxDim / n_orbitals_) {
      throw std::invalid_argument("FirstQuantizedBasis: N^eta exceeds the desk-scale cap");
    }
    dim_ *= n_orbitals_;
  }
  stride_.resize(static_cast<std::size_t>(cell_.eta()));
  std::int64_t s = 1;
  for (int j = cell_.eta() - 1; j >= 0; --j) {
    stride_[static_cast<std::size_t>(j)] = s;
    s *= n_orbitals_;
  }
}

std::int64_t FirstQuantizedBasis::orbital_index(const Vec3i& p) const {
  const int g = cell_.g_half_width();
  if (!in_grid_g(p, cell_.n_p())) throw std::out_of_range("orbital_index: p outside G");
  const std::int64_t side = 2 * g + 1;
  return (static_cast<std::int64_t>(p.x() + g) * side + (p.y() + g)) * side + (p.z() + g);
}

Vec3i FirstQuantizedBasis::orbital_of(std::int64_t idx) const {
  const int g = cell_.g_half_width();
  const std::int64_t side = 2 * g + 1;
  if (idx < 0 || idx >= n_orbitals_) throw std::out_of_range("orbital_of: index outside G");
  const int z = static_cast<int>(idx % side) - g;
  const int y = static_cast<int>((idx / side) % side) - g;
  const int x = static_cast<int>(idx / (side * side)) - g;
  return {x, y, z};
}

std::int64_t FirstQuantizedBasis::index_of(const std::vector<Vec3i>& momenta) const {
  if (static_cast<int>(momenta.size()) != cell_.eta()) {
    throw std::invalid_argument("index_of: tuple length != eta");
  }
  std::int64_t idx = 0;
  for (int j = 0; j < cell_.eta(); ++j) {
    idx += orbital_index(momenta[static_cast<std::size_t>(j)]) *
           stride_[static_cast<std::size_t>(j)];
  }
  return idx;
}

std::vector<Vec3i> FirstQuantizedBasis::tuple_of(std::int64_t idx) const {
  if (idx < 0 || idx >= dim_) throw std::out_of_range("tuple_of: index outside basis");
  std::vector<Vec3i> momenta(static_cast<std::size_t>(cell_.eta()));
  for (int j = 0; j < cell_.eta(); ++j) {
    momenta[static_cast<std::size_t>(j)] =
        orbital_of((idx / stride_[static_cast<std::size_t>(j)]) % n_orbitals_);
  }
  return momenta;
}

std::int64_t FirstQuantizedBasis::replace_register(std::int64_t idx, int j,
                                                   std::int64_t orbital) const {
  const std::int64_t s = stride_[static_cast<std::size_t>(j)];
  const std::int64_t old = (idx / s) % n_orbitals_;
  return idx + (orbital - old) * s;
}

std::int64_t FirstQuantizedBasis::register_orbital(std::int64_t idx, int j) const {
  return (idx / stride_[static_cast<std::size_t>(j)]) % n_orbitals_;
}

Eigen::VectorXd kinetic_diagonal(const FirstQuantizedBasis& basis) {
  const SimulationCell& cell = basis.cell();
  const std::int64_t n = basis.num_orbitals();
  Eigen::VectorXd orbital_energy(n);
  for (std::int64_t i = 0; i < n; ++i) {
    orbital_energy(i) = 0.5 * wavenumber(basis.orbital_of(i), cell.omega()).squaredNorm();
  }
  Eigen::VectorXd diag(basis.dim());
  for (std::int64_t idx = 0; idx < basis.dim(); ++idx) {
    double e = 0.0;
    for (int j = 0; j < cell.eta(); ++j) e += orbital_energy(basis.register_orbital(idx, j));
    diag(idx) = e;
  }
  return diag;
}

OperatorMatrix kinetic_matrix(const FirstQuantizedBasis& basis) {
  const Eigen::VectorXd diag = kinetic_diagonal(basis);
  std::vector<Eigen::Triplet<Complex>> entries;
  entries.reserve(static_cast<std::size_t>(basis.dim()));
  for (std::int64_t i = 0; i < basis.dim(); ++i) {
    entries.emplace_back(static_cast<int>(i), static_cast<int>(i), Complex{diag(i), 0.0});
  }
  return OperatorMatrix::from_triplets(basis.dim(), entries);
}

OperatorMatrix nuclear_potential_matrix(const FirstQuantizedBasis& basis) {
  const SimulationCell& cell = basis.cell();
  const std::int64_t n = basis.num_orbitals();

  // Single-register block u[p, q] = -(4 pi / omega) sum_l zeta_l
  //   exp(i k_{q-p} . R_l) / |k_{p-q}|^2, for p != q.
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(n, n);
  if (!cell.nuclei().empty()) {
    for (std::int64_t a = 0; a < n; ++a) {
      const Vec3i p = basis.orbital_of(a);
      for (std::int64_t b = 0; b < n; ++b) {
        if (a == b) continue;  // Coulomb kernel excludes zero transfer
        const Vec3i q = basis.orbital_of(b);
        const Vec3i diff = q - p;
        assert(in_grid_g0(diff, cell.n_p()));
        const Vec3d k = wavenumber(diff, cell.omega());
        Complex phase_sum = 0.0;
        for (const Nucleus& nuc : cell.nuclei()) {
          phase_sum += static_cast<double>(nuc.zeta) *
                       std::exp(kImaginary * k.dot(nuc.r));
        }
        u(a, b) = -(4.0 * kPi / cell.omega()) * phase_sum / k.squaredNorm();
      }
    }
  }

  std::vector<Eigen::Triplet<Complex>> entries;
  entries.reserve(static_cast<std::size_t>(basis.dim() * (n - 1) * cell.eta()));
  for (std::int64_t src = 0; src < basis.dim(); ++src) {
    for (int j = 0; j < cell.eta(); ++j) {
      const std::int64_t q_idx = basis.register_orbital(src, j);
      for (std::int64_t p_idx = 0; p_idx < n; ++p_idx) {
        if (p_idx == q_idx) continue;
        const std::int64_t dst = basis.replace_register(src, j, p_idx);
        entries.emplace_back(static_cast<int>(dst), static_cast<int>(src), u(p_idx, q_idx));
      }
    }
  }
  return OperatorMatrix::from_triplets(basis.dim(), entries);
}

OperatorMatrix electron_repulsion_matrix(const FirstQuantizedBasis& basis) {
  const SimulationCell& cell = basis.cell();
  std::vector<Eigen::Triplet<Complex>> entries;
  if (cell.eta() >= 2) {
    const std::vector<Vec3i> transfers = grid_g0(cell);
    std::vector<double> kernel(transfers.size());
    for (std::size_t t = 0; t < transfers.size(); ++t) {
      kernel[t] = (2.0 * kPi / cell.omega()) /
                  wavenumber(transfers[t], cell.omega()).squaredNorm();
    }
    for (std::int64_t src = 0; src < basis.dim(); ++src) {
      for (int i = 0; i < cell.eta(); ++i) {
        for (int j = 0; j < cell.eta(); ++j) {
          if (i == j) continue;
          const Vec3i p = basis.orbital_of(basis.register_orbital(src, i));
          const Vec3i q = basis.orbital_of(basis.register_orbital(src, j));
          for (std::size_t t = 0; t < transfers.size(); ++t) {
            const Vec3i nu = transfers[t];
            const Vec3i p_shift = p + nu;
            const Vec3i q_shift = q - nu;
            if (!in_grid_g(p_shift, cell.n_p()) || !in_grid_g(q_shift, cell.n_p())) continue;
            std::int64_t dst = basis.replace_register(src, i, basis.orbital_index(p_shift));
            dst = basis.replace_register(dst, j, basis.orbital_index(q_shift));
            entries.emplace_back(static_cast<int>(dst), static_cast<int>(src),
                                 Complex{kernel[t], 0.0});
          }
        }
      }
    }
  }
  return OperatorMatrix::from_triplets(basis.dim(), entries);
}

OperatorMatrix hamiltonian_matrix(const FirstQuantizedBasis& basis) {
  const OperatorMatrix t = kinetic_matrix(basis);
  const OperatorMatrix u = nuclear_potential_matrix(basis);
  const OperatorMatrix v = electron_repulsion_matrix(basis);
  if (basis.dim() <= OperatorMatrix::kDenseLimit) {
    return OperatorMatrix::from_dense(t.dense() + u.dense() + v.dense());
  }
  Eigen::SparseMatrix<Complex> sum = t.sparse() + u.sparse() + v.sparse();
  std::vector<Eigen::Triplet<Complex>> entries;
  entries.reserve(static_cast<std::size_t>(sum.nonZeros()));
  for (int k = 0; k < sum.outerSize(); ++k) {
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(sum, k); it; ++it) {
      entries.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()), it.value());
    }
  }
  return OperatorMatrix::from_triplets(basis.dim(), entries);
}

namespace {

// Applies the register permutation pi to a flat basis index: register j of
// the image holds what register pi(j) held in the source.
std::int64_t permute_index(const FirstQuantizedBasis& basis, std::int64_t idx,
                           const std::vector<int>& pi) {
  std::int64_t out = idx;
  for (int j = 0; j < static_cast<int>(pi.size()); ++j) {
    out = basis.replace_register(
        out, j, basis.register_orbital(idx, pi[static_cast<std::size_t>(j)]));
  }
  return out;
}

int permutation_sign(std::vector<int> pi) {
  int sign = 1;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    while (pi[i] != static_cast<int>(i)) {
      std::swap(pi[i], pi[static_cast<std::size_t>(pi[i])]);
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace

OperatorMatrix antisymmetric_projector(const FirstQuantizedBasis& basis) {
  const int eta = basis.cell().eta();
  if (eta > 3) throw std::invalid_argument("antisymmetric_projector: eta <= 3 at desk scale");
  const double norm = 1.0 / factorial(eta);

  std::vector<int> pi(static_cast<std::size_t>(eta));
  std::iota(pi.begin(), pi.end(), 0);
  std::vector<std::pair<std::vector<int>, int>> perms;
  do {
    perms.emplace_back(pi, permutation_sign(pi));
  } while (std::next_permutation(pi.begin(), pi.end()));

  std::vector<Eigen::Triplet<Complex>> entries;
  entries.reserve(static_cast<std::size_t>(basis.dim()) * perms.size());
  for (std::int64_t src = 0; src < basis.dim(); ++src) {
    for (const auto& [perm, sign] : perms) {
      entries.emplace_back(static_cast<int>(permute_index(basis, src, perm)),
                           static_cast<int>(src), Complex{sign * norm, 0.0});
    }
  }
  return OperatorMatrix::from_triplets(basis.dim(), entries);
}

OperatorMatrix register_swap(const FirstQuantizedBasis& basis, int a, int b) {
  const int eta = basis.cell().eta();
  if (a < 0 || b < 0 || a >= eta || b >= eta) {
    throw std::out_of_range("register_swap: register outside [0, eta)");
  }
  std::vector<int> pi(static_cast<std::size_t>(eta));
  std::iota(pi.begin(), pi.end(), 0);
  std::swap(pi[static_cast<std::size_t>(a)], pi[static_cast<std::size_t>(b)]);
  std::vector<Eigen::Triplet<Complex>> entries;
  entries.reserve(static_cast<std::size_t>(basis.dim()));
  for (std::int64_t src = 0; src < basis.dim(); ++src) {
    entries.emplace_back(static_cast<int>(permute_index(basis, src, pi)),
                         static_cast<int>(src), Complex{1.0, 0.0});
  }
  return OperatorMatrix::from_triplets(basis.dim(), entries);
}

SimulationCell quantize_nuclei(const SimulationCell& cell, int b_r) {
  if (b_r < 1) throw std::invalid_argument("quantize_nuclei: b_r must be >= 1");
  const double len = cell.cell_length();
  const double scale = std::ldexp(1.0, b_r);  // 2^{b_r}
  std::vector<Nucleus> rounded = cell.nuclei();
  for (Nucleus& nuc : rounded) {
    for (int c = 0; c < 3; ++c) {
      const double frac = nuc.r(c) / len;
      nuc.r(c) = std::round(frac * scale) / scale * len;
    }
  }
  return SimulationCell(cell.eta(), cell.omega(), cell.n_p(), std::move(rounded));
}

}  // namespace subqchem
