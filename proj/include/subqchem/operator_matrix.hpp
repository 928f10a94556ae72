#pragma once

#include <iosfwd>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "subqchem/types.hpp"

namespace subqchem {

/// Operator on the eta-particle Hilbert space. Dense storage up to
/// kDenseLimit rows, sparse triplets beyond.
class OperatorMatrix {
 public:
  static constexpr Eigen::Index kDenseLimit = 4096;

  OperatorMatrix() = default;

  static OperatorMatrix zero(Eigen::Index dim);
  static OperatorMatrix identity(Eigen::Index dim);
  static OperatorMatrix from_triplets(Eigen::Index dim,
                                      const std::vector<Eigen::Triplet<Complex>>& entries);
  static OperatorMatrix from_dense(Eigen::MatrixXcd m);

  Eigen::Index dim() const { return dim_; }
  bool is_dense() const { return dense_storage_; }

  const Eigen::MatrixXcd& dense() const;
  const Eigen::SparseMatrix<Complex>& sparse() const;
  Eigen::MatrixXcd to_dense() const;  // materializes sparse storage

  Complex coeff(Eigen::Index i, Eigen::Index j) const;
  Complex trace() const;

  /// max_ij |M_ij - conj(M_ji)|
  double hermiticity_error() const;
  double max_abs_diff(const OperatorMatrix& other) const;

  /// Triplet CSV (row, col, re, im) of the nonzero entries, row-major order.
  void write_triplet_csv(std::ostream& os) const;

 private:
  Eigen::Index dim_ = 0;
  bool dense_storage_ = true;
  Eigen::MatrixXcd dense_;
  Eigen::SparseMatrix<Complex> sparse_;
};

}  // namespace subqchem
