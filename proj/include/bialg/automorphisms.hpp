#pragma once

#include <optional>

#include "bialg/poincare.hpp"
#include "bialg/schouten.hpp"

namespace bialg {

/// An exact automorphism move, held as its degree-1 matrix; the action on
/// Lambda^k is always the wedge power of that matrix.
class AutoMove {
 public:
  enum class Kind { Translate, NilpotentFlow, Dilation, DiagonalFlow, Rotation, Reflection };

  /// x -> x - [v, .] for a translation vector v (coefficients may be symbolic).
  static AutoMove translate(const Inhomogeneous& a, const MultiVector& v);
  /// exp(t ad_x) for nilpotent ad_x; t may be symbolic.
  static AutoMove nilpotent_flow(const Inhomogeneous& a, const MultiVector& x,
                                 const Scalar& t);
  /// (v, X) -> (lambda v, X); lambda nonzero, possibly symbolic.
  static AutoMove dilation(const Inhomogeneous& a, const Scalar& lambda);
  /// Scales each integer eigenspace of ad_x by mu^eigenvalue; requires ad_x
  /// diagonalizable over Q with integer eigenvalues and mu a positive rational.
  static AutoMove diagonal_flow(const Inhomogeneous& a, const MultiVector& x,
                                const Rat& mu);
  /// exp(theta ad_x) at the rational circle point (c, s); requires
  /// (ad_x)^3 = -ad_x and c^2 + s^2 = 1.
  static AutoMove rotation(const Inhomogeneous& a, const MultiVector& x, const Rat& c,
                           const Rat& s);
  /// e_index -> -e_index on V, extended to the rotation block.
  static AutoMove reflection(const Inhomogeneous& a, int v_index);

  Kind kind() const { return kind_; }
  const SMat& matrix() const { return mat_; }
  const AlgebraRef& algebra() const { return alg_; }
  AutoMove inverse() const;  // throws InvalidMove when not exactly invertible
  std::string description() const { return description_; }

 private:
  AutoMove(Kind kind, AlgebraRef alg, SMat mat, std::optional<SMat> inv,
           std::string description)
      : kind_(kind), alg_(std::move(alg)), mat_(std::move(mat)), inv_(std::move(inv)),
        description_(std::move(description)) {}

  Kind kind_;
  AlgebraRef alg_;
  SMat mat_;
  std::optional<SMat> inv_;
  std::string description_;
};

MultiVector apply(const AutoMove& move, const MultiVector& u);

/// [m.r, m.r] - m.[r, r]; identically zero for a genuine automorphism.
MultiVector gcybe_equivariance_residual(const AutoMove& move, const MultiVector& r);

struct NormalizeResult {
  MultiVector r;
  std::vector<std::string> steps;
  std::optional<std::string> obstruction;  // unreachable exact rotation, etc.
  std::string final_form;  // "b2" | "row2" | "row3-family" | "row4-family" | "unchanged"
};

/// Normalization pipeline for r with c-part proportional to JX+ ^ X+:
/// a translation kills the e+-components and balances the transverse pair, a
/// rational rotation (when exactly reachable) aligns it, and nilpotent flows
/// remove the translation remnants in the z+ != 0 branch.
NormalizeResult normalize_row2(const Inhomogeneous& a, const MultiVector& r);

}  // namespace bialg
