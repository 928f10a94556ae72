#include "subqchem/operator_matrix.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "subqchem/format.hpp"

namespace subqchem {

OperatorMatrix OperatorMatrix::zero(Eigen::Index dim) {
  OperatorMatrix m;
  m.dim_ = dim;
  m.dense_storage_ = dim <= kDenseLimit;
  if (m.dense_storage_) {
    m.dense_ = Eigen::MatrixXcd::Zero(dim, dim);
  } else {
    m.sparse_.resize(dim, dim);
  }
  return m;
}

OperatorMatrix OperatorMatrix::identity(Eigen::Index dim) {
  OperatorMatrix m = zero(dim);
  if (m.dense_storage_) {
    m.dense_ = Eigen::MatrixXcd::Identity(dim, dim);
  } else {
    m.sparse_.setIdentity();
  }
  return m;
}

OperatorMatrix OperatorMatrix::from_triplets(
    Eigen::Index dim, const std::vector<Eigen::Triplet<Complex>>& entries) {
  OperatorMatrix m = zero(dim);
  if (m.dense_storage_) {
    for (const auto& t : entries) m.dense_(t.row(), t.col()) += t.value();
  } else {
    m.sparse_.setFromTriplets(entries.begin(), entries.end());
    m.sparse_.makeCompressed();
  }
  return m;
}

OperatorMatrix OperatorMatrix::from_dense(Eigen::MatrixXcd mat) {
  if (mat.rows() != mat.cols()) throw std::invalid_argument("from_dense: square matrix required");
  OperatorMatrix m;
  m.dim_ = mat.rows();
  m.dense_storage_ = true;
  m.dense_ = std::move(mat);
  return m;
}

const Eigen::MatrixXcd& OperatorMatrix::dense() const {
  if (!dense_storage_) throw std::logic_error("OperatorMatrix: sparse storage, use to_dense()");
  return dense_;
}

const Eigen::SparseMatrix<Complex>& OperatorMatrix::sparse() const {
  if (dense_storage_) throw std::logic_error("OperatorMatrix: dense storage");
  return sparse_;
}

Eigen::MatrixXcd OperatorMatrix::to_dense() const {
  if (dense_storage_) return dense_;
  return Eigen::MatrixXcd(sparse_);
}

Complex OperatorMatrix::coeff(Eigen::Index i, Eigen::Index j) const {
  return dense_storage_ ? dense_(i, j) : sparse_.coeff(i, j);
}

Complex OperatorMatrix::trace() const {
  if (dense_storage_) return dense_.trace();
  Complex t = 0.0;
  for (Eigen::Index i = 0; i < dim_; ++i) t += sparse_.coeff(i, i);
  return t;
}

double OperatorMatrix::hermiticity_error() const {
  if (dense_storage_) {
    return (dense_ - dense_.adjoint()).cwiseAbs().maxCoeff();
  }
  const Eigen::SparseMatrix<Complex> diff =
      sparse_ - Eigen::SparseMatrix<Complex>(sparse_.adjoint());
  double max = 0.0;
  for (int k = 0; k < diff.outerSize(); ++k) {
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(diff, k); it; ++it) {
      max = std::max(max, std::abs(it.value()));
    }
  }
  return max;
}

double OperatorMatrix::max_abs_diff(const OperatorMatrix& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  if (dense_storage_ && other.dense_storage_) {
    if (dim_ == 0) return 0.0;
    return (dense_ - other.dense_).cwiseAbs().maxCoeff();
  }
  const Eigen::SparseMatrix<Complex> diff =
      (dense_storage_ ? Eigen::SparseMatrix<Complex>(dense_.sparseView()) : sparse_) -
      (other.dense_storage_ ? Eigen::SparseMatrix<Complex>(other.dense_.sparseView())
                            : other.sparse_);
  double max = 0.0;
  for (int k = 0; k < diff.outerSize(); ++k) {
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(diff, k); it; ++it) {
      max = std::max(max, std::abs(it.value()));
    }
  }
  return max;
}

void OperatorMatrix::write_triplet_csv(std::ostream& os) const {
  os << "row,col,re,im\n";
  if (dense_storage_) {
    for (Eigen::Index i = 0; i < dim_; ++i) {
      for (Eigen::Index j = 0; j < dim_; ++j) {
        const Complex v = dense_(i, j);
        if (v == Complex{0.0, 0.0}) continue;
        os << i << ',' << j << ',' << format_double(v.real()) << ','
           << format_double(v.imag()) << '\n';
      }
    }
    return;
  }
  // Row-major emission from column-major storage.
  std::vector<Eigen::Triplet<Complex>> entries;
  entries.reserve(static_cast<std::size_t>(sparse_.nonZeros()));
  for (int k = 0; k < sparse_.outerSize(); ++k) {
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(sparse_, k); it; ++it) {
      entries.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()), it.value());
    }
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.row() != b.row() ? a.row() < b.row() : a.col() < b.col();
  });
  for (const auto& t : entries) {
    os << t.row() << ',' << t.col() << ',' << format_double(t.value().real()) << ','
       << format_double(t.value().imag()) << '\n';
  }
}

}  // namespace subqchem
