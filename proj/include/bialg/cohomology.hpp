#pragma once

#include "bialg/multivector.hpp"

namespace bialg {

/// Closed enumeration of the coefficient modules the exact solvers accept.
struct ModuleSpec {
  enum class Kind { LambdaG, LambdaV, LambdaH, MixedVH, Trivial };
  Kind kind = Kind::LambdaG;
  int k = 1;  // exterior degree for the Lambda kinds

  static ModuleSpec lambda_g(int k) { return {Kind::LambdaG, k}; }
  static ModuleSpec lambda_v(int k) { return {Kind::LambdaV, k}; }
  static ModuleSpec lambda_h(int k) { return {Kind::LambdaH, k}; }
  static ModuleSpec mixed_vh() { return {Kind::MixedVH, 2}; }
  static ModuleSpec trivial() { return {Kind::Trivial, 0}; }

  /// Accepts "g", "V", "h", "L2g", "L3g", "L2V", "L2h", "L3h", "Vxh", "R", ...
  static ModuleSpec parse(const std::string& text);
  std::string str() const;
};

enum class Acting { G, H, V };
Acting parse_acting(const std::string& text);

/// A realized module is a coordinate subspace of Lambda^k g spanned by the
/// listed ambient basis tuples (Trivial has one coordinate and zero action).
struct RealizedModule {
  ModuleSpec spec;
  int k = 0;
  int dim = 0;
  int ambient_dim = 0;
  std::vector<int> ambient_index;          // module coordinate -> ambient rank
  std::vector<int> from_ambient;           // ambient rank -> module coordinate or -1
};
RealizedModule realize(const AlgebraRef& alg, const ModuleSpec& spec);

std::vector<int> acting_indices(const AlgebraRef& alg, Acting acting);

/// Coordinates of a multivector supported on the module; throws
/// UnsupportedModule when the value leaves the block.
QVec module_coordinates(const AlgebraRef& alg, const RealizedModule& mod,
                        const MultiVector& u);
MultiVector from_module_coordinates(const AlgebraRef& alg, const RealizedModule& mod,
                                    const QVec& coords);

/// Invariant vectors {u in E : X u = 0 for X in the acting subalgebra},
/// computed as an exact nullspace in module coordinates.
Subspace invariants(const AlgebraRef& alg, const ModuleSpec& spec, Acting acting);

/// Space of cocycles f : acting -> E with f([X,Y]) = X f(Y) - Y f(X);
/// unknowns are flattened as f_{i,m} -> i * dim(E) + m.
Subspace cocycle_space(const AlgebraRef& alg, const ModuleSpec& spec,
                       Acting acting = Acting::G);

/// Coboundaries {X -> X r : r in E} inside the same flattened space.
Subspace coboundary_space(const AlgebraRef& alg, const ModuleSpec& spec,
                          Acting acting = Acting::G);

/// dim Z - dim B, with the containment B <= Z verified.
int cohomology_dim(const AlgebraRef& alg, const ModuleSpec& spec,
                   Acting acting = Acting::G);

/// Solution space of T(Xu) = X T(u) for X in the h-block; maps E1 -> E2 are
/// flattened row-major (row p of E2, column q of E1 -> p * dim(E1) + q).
struct IntertwinerSpace {
  Subspace flat;
  int rows = 0, cols = 0;
  QMat matrix(int i) const;
};
IntertwinerSpace intertwiner_space(const AlgebraRef& alg, const ModuleSpec& e1,
                                   const ModuleSpec& e2);

/// Exact solution space, inside the mixed block V^h, of the linear cocycle
/// condition b([a,b]_c) = c(a) b(b) - c(b) b(a) over dual pairs of the
/// h-block, for a triangular c in Lambda^2 h.
Subspace solve_b_cocycle(const AlgebraRef& alg, const MultiVector& c);

}  // namespace bialg
