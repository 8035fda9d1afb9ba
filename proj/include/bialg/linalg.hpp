#pragma once

#include <optional>
#include <vector>

#include "bialg/scalar.hpp"

namespace bialg {

/// Dense matrix over an exact ring (Rat or Scalar).
template <typename T>
class MatrixT {
 public:
  MatrixT() : rows_(0), cols_(0) {}
  MatrixT(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

  static MatrixT identity(int n) {
    MatrixT m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

  MatrixT transpose() const {
    MatrixT out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!(v == T(0))) return false;
    return true;
  }

  bool operator==(const MatrixT& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  std::vector<T> row(int i) const {
    return std::vector<T>(data_.begin() + std::size_t(i) * cols_,
                          data_.begin() + std::size_t(i + 1) * cols_);
  }

 private:
  int rows_, cols_;
  std::vector<T> data_;
};

template <typename T>
MatrixT<T> operator*(const MatrixT<T>& a, const MatrixT<T>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  MatrixT<T> out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == T(0)) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b(k, j) == T(0)) continue;
        out(i, j) += aik * b(k, j);
      }
    }
  return out;
}

template <typename T>
MatrixT<T> operator+(const MatrixT<T>& a, const MatrixT<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix sum shape mismatch");
  MatrixT<T> out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

template <typename T>
MatrixT<T> operator-(const MatrixT<T>& a, const MatrixT<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix difference shape mismatch");
  MatrixT<T> out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

using QMat = MatrixT<Rat>;
using SMat = MatrixT<Scalar>;
using QVec = std::vector<Rat>;

QMat to_rational(const SMat& m);  // throws if any entry is symbolic
SMat to_symbolic(const QMat& m);

/// Linear subspace of Q^n held by its canonical basis: rows in reduced
/// echelon form (strictly increasing pivot columns, unit pivots, zeros above
/// and below each pivot). Canonical form makes subspace equality a matrix
/// comparison.
struct Subspace {
  int ambient = 0;
  QMat basis;  // dim() x ambient

  int dim() const { return basis.rows(); }
  bool contains_vector(const QVec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const {
    return ambient == o.ambient && basis == o.basis;
  }
};

/// Incremental row reduction working fraction-free: rows are scaled to
/// integer vectors and eliminated with cross-multiplication, so no rational
/// arithmetic happens until the final normalization. Rows are stored sparse.
class EchelonAccumulator {
 public:
  explicit EchelonAccumulator(int ncols);

  /// Returns true when the row enlarged the span.
  bool insert(const QVec& row);
  bool insert_sparse(std::vector<std::pair<int, Rat>> row);

  int rank() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }
  const std::vector<int>& pivot_columns() const { return pivots_; }

  /// Canonical reduced echelon basis of the accumulated row space.
  Subspace subspace() const;

 private:
  using IntRow = std::vector<std::pair<int, Int>>;  // sorted by column
  int ncols_;
  std::vector<IntRow> rows_;   // pivot columns strictly increasing
  std::vector<int> pivots_;
};

Subspace row_space(const QMat& m);

/// Nullspace {x : M x = 0} as a canonical Subspace.
Subspace nullspace(const QMat& m);

Subspace intersect(const Subspace& a, const Subspace& b);

int rank(const QMat& m);

/// Inverse of a square nonsingular matrix; throws Error when singular.
QMat inverse(const QMat& m);

/// Solves M x = b; returns std::nullopt when inconsistent. When the system is
/// underdetermined an arbitrary solution (free variables zero) is returned.
std::optional<QVec> solve(const QMat& m, const QVec& b);

/// Signature (positives, negatives, zeros) of a symmetric matrix, computed by
/// exact congruent diagonalization.
struct Signature {
  int positive = 0, negative = 0, zero = 0;
};
Signature symmetric_signature(const QMat& m);

}  // namespace bialg
