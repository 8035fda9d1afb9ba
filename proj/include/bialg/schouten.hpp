#pragma once

#include "bialg/multivector.hpp"

namespace bialg {

/// Bracket of two bivectors, extended bilinearly from the decomposable rule
/// [x^y, u^v] = [x,u]^y^v - [x,v]^y^u - [y,u]^x^v + [y,v]^x^u.
MultiVector schouten_bracket(const MultiVector& r, const MultiVector& s);

/// Linear map g -> Lambda^2 g; column i holds the image of e_i.
struct Cocycle {
  AlgebraRef alg;
  SMat mat;  // lambda_dim(n,2) x n

  MultiVector column(int i) const;
};

/// The coboundary of r: X -> X.r.
Cocycle coboundary(const MultiVector& r);

struct CocycleReport {
  bool ok = true;
  std::vector<std::pair<int, int>> failing_pairs;
};

/// Checks f([X,Y]) = X f(Y) - Y f(X) over all basis pairs.
CocycleReport is_cocycle(const Cocycle& f);

/// [alpha, beta]_r = r(alpha).beta - r(beta).alpha with r(alpha) = alpha _| r
/// and the coadjoint action on covectors.
MultiVector dual_bracket(const MultiVector& r, const MultiVector& alpha,
                         const MultiVector& beta);

struct GcybeVerdict {
  bool in_span = false;
  std::vector<Scalar> coords;  // coordinates in the supplied invariant basis
  MultiVector bracket;         // [r, r]
  MultiVector residual;        // [r,r] minus its projection on the span
};

/// Decides whether [r,r] lies in the span of the given (rational,
/// independent) invariant trivectors.
GcybeVerdict gcybe_check(const MultiVector& r,
                         const std::vector<MultiVector>& invariant_basis);

/// LHS - RHS of (1/2) <[r,r], a^b^g> = <[r(a),r(b)] - r([a,b]_r), g>;
/// vanishes identically when all sign conventions agree.
Scalar formula_check(const MultiVector& r, const MultiVector& alpha,
                     const MultiVector& beta, const MultiVector& gamma);

}  // namespace bialg
