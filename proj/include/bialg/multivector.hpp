#pragma once

#include <array>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bialg/lie_algebra.hpp"

namespace bialg {

constexpr int kMaxDegree = 3;

/// Strictly increasing index tuple of length k <= 3, the canonical basis
/// label of Lambda^k.
struct Tuple {
  std::array<int, 3> idx{-1, -1, -1};
  int k = 0;

  bool operator<(const Tuple& o) const {
    if (k != o.k) return k < o.k;
    return idx < o.idx;
  }
  bool operator==(const Tuple& o) const { return k == o.k && idx == o.idx; }
};

long binomial(int n, int k);
int lambda_dim(int n, int k);

/// Position of a strictly increasing tuple in the lexicographic enumeration
/// of all k-subsets of {0..n-1}.
int tuple_rank(int n, const Tuple& t);
Tuple tuple_unrank(int n, int k, int r);

/// Element of Lambda^k g (primal) or Lambda^k g* (dual) in the canonical
/// basis of strictly increasing tuples. Zero coefficients are never stored;
/// values are immutable in spirit and cheap to copy.
class MultiVector {
 public:
  MultiVector(AlgebraRef alg, int degree, bool dual = false);
  static MultiVector basis_element(AlgebraRef alg, std::span<const int> indices,
                                   bool dual = false);
  static MultiVector basis_element(AlgebraRef alg, std::initializer_list<int> indices,
                                   bool dual = false);

  const AlgebraRef& algebra() const { return alg_; }
  int degree() const { return degree_; }
  bool dual() const { return dual_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::map<Tuple, Scalar>& terms() const { return terms_; }

  /// Accumulates c * e_{indices} with sign normalization; duplicate indices
  /// contribute nothing.
  void add_term(std::span<const int> indices, const Scalar& c);
  void add_term(std::initializer_list<int> indices, const Scalar& c);

  Scalar coeff(std::initializer_list<int> indices) const;

  MultiVector operator-() const;
  MultiVector& operator+=(const MultiVector& o);
  MultiVector& operator-=(const MultiVector& o);
  MultiVector scaled(const Scalar& c) const;

  bool operator==(const MultiVector& o) const;
  bool operator!=(const MultiVector& o) const { return !(*this == o); }

  bool is_rational() const;
  MultiVector substitute(const std::map<std::string, Scalar>& bindings) const;
  std::set<std::string> variables() const;

  std::vector<Scalar> coordinates() const;
  QVec rational_coordinates() const;
  static MultiVector from_coordinates(AlgebraRef alg, int degree,
                                      std::span<const Scalar> coords, bool dual = false);
  static MultiVector from_rational_coordinates(AlgebraRef alg, int degree,
                                               const QVec& coords, bool dual = false);

  std::string str() const;  // uses the algebra's basis labels

 private:
  AlgebraRef alg_;
  int degree_;
  bool dual_;
  std::map<Tuple, Scalar> terms_;
};

MultiVector operator+(MultiVector a, const MultiVector& b);
MultiVector operator-(MultiVector a, const MultiVector& b);
MultiVector operator*(const Scalar& c, const MultiVector& v);

void require_same_algebra(const MultiVector& a, const MultiVector& b);

/// Exterior product; degrees add and must stay <= 3.
MultiVector wedge(const MultiVector& a, const MultiVector& b);

/// Left contraction of a dual multivector into a primal one. For a covector,
/// alpha _| (x ^ y) = <alpha,x> y - <alpha,y> x; higher dual degrees apply
/// their factors left to right, which makes <e^I, e_J> = delta_IJ.
MultiVector contract(const MultiVector& xi, const MultiVector& u);

/// Full pairing <xi, u> of equal degrees.
Scalar pairing(const MultiVector& xi, const MultiVector& u);

/// Lie bracket of two degree-1 primal elements.
MultiVector bracket(const MultiVector& x, const MultiVector& y);

/// Adjoint action of X extended to Lambda^k as a derivation.
MultiVector act(const MultiVector& x, const MultiVector& u);

/// Coadjoint action on a covector: <coact(X, a), Y> = -<a, [X, Y]>.
MultiVector coact(const MultiVector& x, const MultiVector& alpha);

/// Matrix of the derivation action of X on Lambda^k, k in {1,2,3}.
QMat action_matrix(const AlgebraRef& alg, const MultiVector& x, int k);
QMat action_matrix_basis(const AlgebraRef& alg, int basis_index, int k);

/// Pushforward Lambda^k(M) applied to a multivector (columns of M are the
/// images of the basis).
MultiVector apply_linear(const SMat& m, const MultiVector& u);
MultiVector apply_linear(const QMat& m, const MultiVector& u);

/// Graded blocks of Lambda^2 g = Lambda^2 V + V^h + Lambda^2 h.
struct GradedComponents2 {
  MultiVector a;  // Lambda^2 V
  MultiVector b;  // V ^ h
  MultiVector c;  // Lambda^2 h
};
GradedComponents2 split2(const MultiVector& r);

/// Graded blocks of Lambda^3 g.
struct GradedComponents3 {
  MultiVector vvv;  // Lambda^3 V
  MultiVector vvh;  // Lambda^2 V ^ h
  MultiVector vhh;  // V ^ Lambda^2 h
  MultiVector hhh;  // Lambda^3 h
};
GradedComponents3 split3(const MultiVector& w);

}  // namespace bialg
