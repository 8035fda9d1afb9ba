#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bialg/linalg.hpp"
#include "bialg/scalar.hpp"

namespace bialg {

class LieAlgebra;
using AlgebraRef = std::shared_ptr<const LieAlgebra>;

/// Optional splitting of the basis into an abelian ideal V and a subalgebra h
/// acting on it ([h,h] in h, [h,V] in V, [V,V] = 0).
struct Grading {
  std::vector<int> v;
  std::vector<int> h;
};

using SparseVec = std::vector<std::pair<int, Rat>>;

/// A finite-dimensional real Lie algebra presented by basis labels and
/// structure constants. Instances are immutable after construction and are
/// shared through AlgebraRef; all invariants (antisymmetry, Jacobi, grading
/// compatibility) are checked by the factories.
class LieAlgebra {
 public:
  /// c[i][j][k] gives [e_i, e_j] = sum_k c[i][j][k] e_k.
  static AlgebraRef build(std::vector<std::string> labels,
                          const std::vector<std::vector<std::vector<Rat>>>& c,
                          std::optional<Grading> grading = std::nullopt);

  /// Semidirect product V x| h from matrices rep[x] of the h-basis acting on
  /// V. The map must be a Lie algebra homomorphism h -> End(V); V comes first
  /// in the basis order and the result is graded.
  static AlgebraRef semidirect(const std::vector<QMat>& rep, const AlgebraRef& h,
                               int dim_v, std::vector<std::string> v_labels = {});

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  int label_index(const std::string& label) const;  // -1 when absent

  /// [e_i, e_j] as a sparse coordinate vector.
  SparseVec bracket_basis(int i, int j) const;

  bool graded() const { return grading_.has_value(); }
  const Grading& grading() const;
  bool in_v(int index) const;
  bool in_h(int index) const;

 private:
  LieAlgebra() = default;

  int dim_ = 0;
  std::vector<std::string> labels_;
  // Upper triangle only: table_[i][j - i - 1] holds [e_i, e_j] for i < j.
  std::vector<std::vector<SparseVec>> table_;
  std::optional<Grading> grading_;
  std::vector<int> block_;  // 0 = V, 1 = h, -1 = ungraded

  void validate_jacobi() const;
  void validate_grading() const;
};

/// Scalar product on the translation part: symmetric invertible matrix with a
/// prescribed signature.
class Metric {
 public:
  static Metric diagonal(int p, int q);  // diag(+1 x p, -1 x q)
  static Metric from_matrix(const QMat& g, int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  int dim() const { return mat_.rows(); }
  const QMat& matrix() const { return mat_; }
  const QMat& inverse_matrix() const { return inv_; }
  Rat apply(const QVec& x, const QVec& y) const;  // g(x, y)

 private:
  Metric(QMat g, QMat inv, int p, int q)
      : mat_(std::move(g)), inv_(std::move(inv)), p_(p), q_(q) {}
  QMat mat_, inv_;
  int p_, q_;
};

}  // namespace bialg
