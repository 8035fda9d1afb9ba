#include "bialg/schouten.hpp"

namespace bialg {

MultiVector schouten_bracket(const MultiVector& r, const MultiVector& s) {
  require_same_algebra(r, s);
  if (r.degree() != 2 || s.degree() != 2 || r.dual() || s.dual())
    throw DimensionMismatch("schouten_bracket expects two primal bivectors");
  const AlgebraRef& alg = r.algebra();
  MultiVector out(alg, 3);
  auto emit = [&](int a, int b, int c2, int c3, const Scalar& coeff) {
    // [e_a, e_b] ^ e_c2 ^ e_c3
    for (const auto& [k, v] : alg->bracket_basis(a, b)) {
      int idx[3] = {k, c2, c3};
      out.add_term(std::span<const int>(idx, 3), coeff * Scalar(v));
    }
  };
  for (const auto& [tr, cr] : r.terms())
    for (const auto& [ts, cs] : s.terms()) {
      int x = tr.idx[0], y = tr.idx[1], u = ts.idx[0], v = ts.idx[1];
      Scalar c = cr * cs;
      emit(x, u, y, v, c);
      emit(x, v, y, u, -c);
      emit(y, u, x, v, -c);
      emit(y, v, x, u, c);
    }
  return out;
}

MultiVector Cocycle::column(int i) const {
  std::vector<Scalar> coords(mat.rows());
  for (int m = 0; m < mat.rows(); ++m) coords[m] = mat(m, i);
  return MultiVector::from_coordinates(alg, 2, coords);
}

Cocycle coboundary(const MultiVector& r) {
  const AlgebraRef& alg = r.algebra();
  if (r.degree() != 2 || r.dual())
    throw DimensionMismatch("coboundary expects a primal bivector");
  int n = alg->dim();
  Cocycle f{alg, SMat(lambda_dim(n, 2), n)};
  for (int i = 0; i < n; ++i) {
    MultiVector img = act(MultiVector::basis_element(alg, {i}), r);
    std::vector<Scalar> coords = img.coordinates();
    for (int m = 0; m < f.mat.rows(); ++m) f.mat(m, i) = coords[m];
  }
  return f;
}

CocycleReport is_cocycle(const Cocycle& f) {
  const AlgebraRef& alg = f.alg;
  int n = alg->dim();
  CocycleReport report;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      MultiVector residual(alg, 2);
      for (const auto& [k, c] : alg->bracket_basis(i, j))
        residual += f.column(k).scaled(Scalar(c));
      residual -= act(MultiVector::basis_element(alg, {i}), f.column(j));
      residual += act(MultiVector::basis_element(alg, {j}), f.column(i));
      if (!residual.is_zero()) {
        report.ok = false;
        report.failing_pairs.emplace_back(i, j);
      }
    }
  return report;
}

MultiVector dual_bracket(const MultiVector& r, const MultiVector& alpha,
                         const MultiVector& beta) {
  require_same_algebra(r, alpha);
  require_same_algebra(r, beta);
  if (!alpha.dual() || !beta.dual() || alpha.degree() != 1 || beta.degree() != 1)
    throw DimensionMismatch("dual_bracket expects two covectors");
  MultiVector ra = contract(alpha, r);
  MultiVector rb = contract(beta, r);
  return coact(ra, beta) - coact(rb, alpha);
}

GcybeVerdict gcybe_check(const MultiVector& r,
                         const std::vector<MultiVector>& invariant_basis) {
  MultiVector w = schouten_bracket(r, r);
  const AlgebraRef& alg = r.algebra();
  int d = lambda_dim(alg->dim(), 3);
  int m = static_cast<int>(invariant_basis.size());

  QMat basis(d, m);
  for (int j = 0; j < m; ++j) {
    require_same_algebra(r, invariant_basis[j]);
    QVec col = invariant_basis[j].rational_coordinates();
    for (int i = 0; i < d; ++i) basis(i, j) = col[i];
  }
  std::vector<Scalar> rhs = w.coordinates();

  // Gauss elimination on the (rational) basis columns; the same row
  // operations are carried on the (possibly symbolic) right-hand side.
  std::vector<int> pivot_row(m, -1);
  int current = 0;
  for (int j = 0; j < m; ++j) {
    int p = -1;
    for (int i = current; i < d; ++i)
      if (basis(i, j) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != current) {
      for (int jj = 0; jj < m; ++jj) std::swap(basis(p, jj), basis(current, jj));
      std::swap(rhs[p], rhs[current]);
    }
    for (int i = 0; i < d; ++i) {
      if (i == current || basis(i, j) == 0) continue;
      Rat f = basis(i, j) / basis(current, j);
      for (int jj = 0; jj < m; ++jj) basis(i, jj) -= f * basis(current, jj);
      rhs[i] -= Scalar(f) * rhs[current];
    }
    pivot_row[j] = current;
    ++current;
  }

  GcybeVerdict verdict{false, {}, w, w};
  verdict.coords.assign(m, Scalar(0));
  for (int j = 0; j < m; ++j)
    if (pivot_row[j] >= 0)
      verdict.coords[j] = rhs[pivot_row[j]].div_rat(basis(pivot_row[j], j));

  MultiVector proj(alg, 3);
  for (int j = 0; j < m; ++j) proj += invariant_basis[j].scaled(verdict.coords[j]);
  verdict.residual = w - proj;
  verdict.in_span = verdict.residual.is_zero();
  if (!verdict.in_span) verdict.coords.assign(m, Scalar(0));
  return verdict;
}

Scalar formula_check(const MultiVector& r, const MultiVector& alpha,
                     const MultiVector& beta, const MultiVector& gamma) {
  MultiVector rr = schouten_bracket(r, r);
  Scalar lhs = pairing(wedge(wedge(alpha, beta), gamma), rr).div_rat(Rat(2));
  MultiVector ra = contract(alpha, r);
  MultiVector rb = contract(beta, r);
  MultiVector lie = bracket(ra, rb);
  MultiVector nested = contract(dual_bracket(r, alpha, beta), r);
  Scalar rhs = pairing(gamma, lie - nested);
  return lhs - rhs;
}

}  // namespace bialg
