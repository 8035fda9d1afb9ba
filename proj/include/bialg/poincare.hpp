#pragma once

#include "bialg/cohomology.hpp"
#include "bialg/multivector.hpp"

namespace bialg {

/// The inhomogeneous orthogonal algebra V x| o(p,q): translations e_0..e_{n-1}
/// first, then rotation generators Om_{jk} (j < k). For signature (1,3) the
/// sl(2,C)-style generators (H, JH, X+, JX+, X-, JX-), boosts L_i, rotations
/// M_i and light-cone vectors e_+/e_- are available by name, and printing
/// uses the light-cone frame.
class Inhomogeneous {
 public:
  AlgebraRef alg;
  Metric metric;
  int p = 0, q = 0;

  int dim_v() const { return p + q; }
  int omega_index(int j, int k) const;  // j < k

  MultiVector e(int j) const;
  /// Om_{e_j, e_k} for arbitrary j != k (sign handled); zero when j == k.
  MultiVector omega_gen(int j, int k) const;
  /// Metric lowering g(x) of a translation vector, as a covector.
  MultiVector lower(const MultiVector& x) const;

  bool has_named(const std::string& name) const;
  /// Degree-1 generators by name; also the bivectors "b_e0".."b_e3", "b_e+",
  /// "b_e-" and the canonical invariant "Omega".
  MultiVector named_element(const std::string& name) const;
  /// Dual basis covector of the printing frame (e.g. "X+*" pairing only X+).
  MultiVector named_covector(const std::string& name) const;

  const std::vector<std::string>& frame_names() const { return frame_names_; }
  /// Renders a multivector in the printing frame.
  std::string format(const MultiVector& u) const;

 private:
  friend Inhomogeneous make_inhomogeneous(int p, int q);
  Inhomogeneous(AlgebraRef a, Metric m, int p, int q)
      : alg(std::move(a)), metric(std::move(m)), p(p), q(q) {}

  std::map<std::string, MultiVector> named_;
  std::vector<std::string> frame_names_;
  QMat frame_mat_{0, 0};  // columns = frame vectors in storage coordinates
  QMat frame_inv_{0, 0};
};

/// Builds the algebra with the diagonal metric diag(+1 x p, -1 x q); the
/// bracket table is generated from the defining action of the Om generators
/// and validated (antisymmetry, Jacobi, grading, homomorphism).
Inhomogeneous make_inhomogeneous(int p, int q);

/// The canonical invariant trivector (unique g-invariant up to scale when
/// dim V > 3); construction verifies invariance under the full algebra.
MultiVector omega_invariant(const Inhomogeneous& a);

/// b_x in V^h, computed both as g^{jk} e_j ^ Om_{x,e_k} and as
/// (1/2) g(x) _| Omega; the two routes must agree.
MultiVector b_x(const Inhomogeneous& a, const MultiVector& x);

/// Intertwiners V -> V^h: F0(x) = b_x, F1 = (id (x) star) o F0 (p+q = 4).
MultiVector f0(const Inhomogeneous& a, const MultiVector& x);
MultiVector f1(const Inhomogeneous& a, const MultiVector& x);

/// Hodge star on the rotation block for p+q = 4, from the orientation
/// Vol = e_0 ^ e_1 ^ e_2 ^ e_3.
QMat hodge_star_matrix(const Inhomogeneous& a);
MultiVector hodge_star(const Inhomogeneous& a, const MultiVector& x_in_h);

/// The p+q = 3 special elements: the h-invariant mixed bivector s, the map
/// T : V -> Lambda^2 V (equal to -1/2 of the coboundary of s restricted to
/// V), and the composite V -> Lambda^2 h built from T and the bivector-to-
/// rotation isomorphism.
struct Special3 {
  MultiVector s;
  QMat t_map;  // dim Lambda^2 V x dim V, module coordinates
  QMat trud;   // dim Lambda^2 h x dim V
};
Special3 special3(const Inhomogeneous& a);

}  // namespace bialg
