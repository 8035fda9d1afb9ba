#include "bialg/cohomology.hpp"

#include <algorithm>

#include "bialg/schouten.hpp"

namespace bialg {

ModuleSpec ModuleSpec::parse(const std::string& text) {
  if (text == "R" || text == "trivial") return trivial();
  if (text == "g" || text == "L1g") return lambda_g(1);
  if (text == "V" || text == "L1V") return lambda_v(1);
  if (text == "h" || text == "L1h") return lambda_h(1);
  if (text == "Vxh" || text == "V^h") return mixed_vh();
  if (text.size() == 3 && text[0] == 'L' && text[1] >= '1' && text[1] <= '3') {
    int k = text[1] - '0';
    if (text[2] == 'g') return lambda_g(k);
    if (text[2] == 'V') return lambda_v(k);
    if (text[2] == 'h') return lambda_h(k);
  }
  throw UnsupportedModule("unknown module spec '" + text + "'");
}

std::string ModuleSpec::str() const {
  switch (kind) {
    case Kind::Trivial:
      return "R";
    case Kind::MixedVH:
      return "Vxh";
    case Kind::LambdaG:
      return "L" + std::to_string(k) + "g";
    case Kind::LambdaV:
      return "L" + std::to_string(k) + "V";
    case Kind::LambdaH:
      return "L" + std::to_string(k) + "h";
  }
  return "?";
}

Acting parse_acting(const std::string& text) {
  if (text == "g") return Acting::G;
  if (text == "h") return Acting::H;
  if (text == "V") return Acting::V;
  throw UnsupportedModule("unknown acting subalgebra '" + text + "'");
}

RealizedModule realize(const AlgebraRef& alg, const ModuleSpec& spec) {
  RealizedModule mod;
  mod.spec = spec;
  if (spec.kind == ModuleSpec::Kind::Trivial) {
    mod.k = 0;
    mod.dim = 1;
    mod.ambient_dim = 1;
    mod.ambient_index = {0};
    mod.from_ambient = {0};
    return mod;
  }
  if (spec.k < 1 || spec.k > kMaxDegree)
    throw UnsupportedModule("module degree must be between 1 and 3");
  if (spec.kind != ModuleSpec::Kind::LambdaG && !alg->graded())
    throw NotGraded("graded-block module on an ungraded algebra");

  int n = alg->dim();
  mod.k = spec.k;
  mod.ambient_dim = lambda_dim(n, spec.k);
  mod.from_ambient.assign(mod.ambient_dim, -1);
  for (int r = 0; r < mod.ambient_dim; ++r) {
    Tuple t = tuple_unrank(n, spec.k, r);
    int nv = 0;
    for (int i = 0; i < t.k; ++i) nv += alg->in_v(t.idx[i]) ? 1 : 0;
    bool keep = false;
    switch (spec.kind) {
      case ModuleSpec::Kind::LambdaG:
        keep = true;
        break;
      case ModuleSpec::Kind::LambdaV:
        keep = nv == t.k;
        break;
      case ModuleSpec::Kind::LambdaH:
        keep = nv == 0;
        break;
      case ModuleSpec::Kind::MixedVH:
        keep = nv == 1 && t.k == 2;
        break;
      case ModuleSpec::Kind::Trivial:
        break;
    }
    if (keep) {
      mod.from_ambient[r] = static_cast<int>(mod.ambient_index.size());
      mod.ambient_index.push_back(r);
    }
  }
  mod.dim = static_cast<int>(mod.ambient_index.size());
  return mod;
}

std::vector<int> acting_indices(const AlgebraRef& alg, Acting acting) {
  std::vector<int> out;
  if (acting == Acting::G) {
    out.resize(alg->dim());
    for (int i = 0; i < alg->dim(); ++i) out[i] = i;
    return out;
  }
  const Grading& g = alg->grading();
  out = acting == Acting::H ? g.h : g.v;
  std::sort(out.begin(), out.end());
  return out;
}

QVec module_coordinates(const AlgebraRef& alg, const RealizedModule& mod,
                        const MultiVector& u) {
  if (mod.spec.kind == ModuleSpec::Kind::Trivial)
    throw UnsupportedModule("trivial module has no multivector coordinates");
  if (u.degree() != mod.k) throw DimensionMismatch("degree does not match module");
  QVec amb = u.rational_coordinates();
  QVec out(mod.dim, Rat(0));
  for (int r = 0; r < mod.ambient_dim; ++r) {
    if (amb[r] == 0) continue;
    if (mod.from_ambient[r] < 0)
      throw UnsupportedModule("multivector has a component outside the module block");
    out[mod.from_ambient[r]] = amb[r];
  }
  return out;
}

MultiVector from_module_coordinates(const AlgebraRef& alg, const RealizedModule& mod,
                                    const QVec& coords) {
  if (static_cast<int>(coords.size()) != mod.dim)
    throw DimensionMismatch("coordinate length does not match module dimension");
  QVec amb(mod.ambient_dim, Rat(0));
  for (int m = 0; m < mod.dim; ++m) amb[mod.ambient_index[m]] = coords[m];
  return MultiVector::from_rational_coordinates(alg, mod.k, amb);
}

namespace {

struct ActionTable {
  // Ambient action matrix of each acting basis element on Lambda^k.
  std::vector<QMat> mats;
  std::vector<int> indices;           // acting basis, ascending
  std::vector<int> position;          // global index -> slot in `indices`, or -1
};

ActionTable build_actions(const AlgebraRef& alg, const RealizedModule& mod,
                          Acting acting) {
  ActionTable table;
  table.indices = acting_indices(alg, acting);
  table.position.assign(alg->dim(), -1);
  for (std::size_t s = 0; s < table.indices.size(); ++s)
    table.position[table.indices[s]] = static_cast<int>(s);
  if (mod.spec.kind == ModuleSpec::Kind::Trivial) {
    table.mats.assign(table.indices.size(), QMat(1, 1));
    return table;
  }
  table.mats.reserve(table.indices.size());
  for (int x : table.indices) table.mats.push_back(action_matrix_basis(alg, x, mod.k));
  return table;
}

// Rows of the constraint system for invariant vectors.
Subspace nullspace_rows(int ncols,
                        const std::vector<std::vector<std::pair<int, Rat>>>& rows) {
  EchelonAccumulator acc(ncols);
  for (const auto& r : rows) acc.insert_sparse(r);
  Subspace rs = acc.subspace();
  const std::vector<int>& piv = acc.pivot_columns();
  std::vector<bool> is_pivot(ncols, false);
  for (int p : piv) is_pivot[p] = true;
  EchelonAccumulator out(ncols);
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::pair<int, Rat>> x;
    x.emplace_back(f, Rat(1));
    for (int i = 0; i < rs.dim(); ++i)
      if (rs.basis(i, f) != 0) x.emplace_back(piv[i], -rs.basis(i, f));
    out.insert_sparse(std::move(x));
  }
  return out.subspace();
}

void require_closed(const AlgebraRef& alg, const RealizedModule& mod,
                    const ActionTable& table) {
  if (mod.spec.kind == ModuleSpec::Kind::Trivial) return;
  for (const QMat& a : table.mats)
    for (int col = 0; col < mod.dim; ++col)
      for (int amb = 0; amb < mod.ambient_dim; ++amb)
        if (mod.from_ambient[amb] < 0 && a(amb, mod.ambient_index[col]) != 0)
          throw UnsupportedModule("module block is not preserved by the acting algebra");
}

}  // namespace

Subspace invariants(const AlgebraRef& alg, const ModuleSpec& spec, Acting acting) {
  RealizedModule mod = realize(alg, spec);
  if (spec.kind == ModuleSpec::Kind::Trivial)
    return Subspace{1, QMat::identity(1)};
  ActionTable table = build_actions(alg, mod, acting);
  std::vector<std::vector<std::pair<int, Rat>>> rows;
  for (const QMat& a : table.mats)
    for (int amb = 0; amb < mod.ambient_dim; ++amb) {
      std::vector<std::pair<int, Rat>> row;
      for (int col = 0; col < mod.dim; ++col) {
        const Rat& v = a(amb, mod.ambient_index[col]);
        if (v != 0) row.emplace_back(col, v);
      }
      if (!row.empty()) rows.push_back(std::move(row));
    }
  return nullspace_rows(mod.dim, rows);
}

Subspace cocycle_space(const AlgebraRef& alg, const ModuleSpec& spec, Acting acting) {
  RealizedModule mod = realize(alg, spec);
  ActionTable table = build_actions(alg, mod, acting);
  int na = static_cast<int>(table.indices.size());
  int unknowns = na * mod.dim;
  auto slot = [&](int a, int m) { return a * mod.dim + m; };

  std::vector<std::vector<std::pair<int, Rat>>> rows;
  for (int ia = 0; ia < na; ++ia)
    for (int ja = ia + 1; ja < na; ++ja) {
      int xi = table.indices[ia], xj = table.indices[ja];
      SparseVec br = alg->bracket_basis(xi, xj);
      for (const auto& [k, c] : br)
        if (table.position[k] < 0)
          throw UnsupportedModule("acting set is not closed under the bracket");
      for (int amb = 0; amb < mod.ambient_dim; ++amb) {
        std::vector<std::pair<int, Rat>> row;
        int m = mod.from_ambient[amb];
        if (m >= 0)
          for (const auto& [k, c] : br) row.emplace_back(slot(table.position[k], m), c);
        if (mod.spec.kind != ModuleSpec::Kind::Trivial) {
          const QMat& ai = table.mats[ia];
          const QMat& aj = table.mats[ja];
          for (int col = 0; col < mod.dim; ++col) {
            const Rat& vi = ai(amb, mod.ambient_index[col]);
            if (vi != 0) row.emplace_back(slot(ja, col), -vi);
            const Rat& vj = aj(amb, mod.ambient_index[col]);
            if (vj != 0) row.emplace_back(slot(ia, col), vj);
          }
        }
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  return nullspace_rows(unknowns, rows);
}

Subspace coboundary_space(const AlgebraRef& alg, const ModuleSpec& spec, Acting acting) {
  RealizedModule mod = realize(alg, spec);
  ActionTable table = build_actions(alg, mod, acting);
  require_closed(alg, mod, table);
  int na = static_cast<int>(table.indices.size());
  auto slot = [&](int a, int m) { return a * mod.dim + m; };

  EchelonAccumulator acc(na * mod.dim);
  for (int r = 0; r < mod.dim; ++r) {
    std::vector<std::pair<int, Rat>> row;
    for (int ia = 0; ia < na; ++ia) {
      if (mod.spec.kind == ModuleSpec::Kind::Trivial) continue;  // zero action
      const QMat& a = table.mats[ia];
      for (int amb = 0; amb < mod.ambient_dim; ++amb) {
        const Rat& v = a(amb, mod.ambient_index[r]);
        if (v != 0) row.emplace_back(slot(ia, mod.from_ambient[amb]), v);
      }
    }
    if (!row.empty()) acc.insert_sparse(std::move(row));
  }
  return acc.subspace();
}

int cohomology_dim(const AlgebraRef& alg, const ModuleSpec& spec, Acting acting) {
  Subspace z = cocycle_space(alg, spec, acting);
  Subspace b = coboundary_space(alg, spec, acting);
  if (!z.contains(b))
    throw Error("internal check failed: coboundaries are not cocycles");
  return z.dim() - b.dim();
}

QMat IntertwinerSpace::matrix(int i) const {
  QMat m(rows, cols);
  for (int p = 0; p < rows; ++p)
    for (int q = 0; q < cols; ++q) m(p, q) = flat.basis(i, p * cols + q);
  return m;
}

IntertwinerSpace intertwiner_space(const AlgebraRef& alg, const ModuleSpec& e1,
                                   const ModuleSpec& e2) {
  RealizedModule m1 = realize(alg, e1), m2 = realize(alg, e2);
  ActionTable t1 = build_actions(alg, m1, Acting::H);
  ActionTable t2 = build_actions(alg, m2, Acting::H);
  require_closed(alg, m1, t1);
  require_closed(alg, m2, t2);
  int d1 = m1.dim, d2 = m2.dim;
  auto slot = [&](int p, int q) { return p * d1 + q; };

  std::vector<std::vector<std::pair<int, Rat>>> rows;
  for (std::size_t x = 0; x < t1.indices.size(); ++x) {
    // restricted module action matrices
    auto a1 = [&](int i, int j) {
      return m1.spec.kind == ModuleSpec::Kind::Trivial
                 ? Rat(0)
                 : t1.mats[x](m1.ambient_index[i], m1.ambient_index[j]);
    };
    auto a2 = [&](int i, int j) {
      return m2.spec.kind == ModuleSpec::Kind::Trivial
                 ? Rat(0)
                 : t2.mats[x](m2.ambient_index[i], m2.ambient_index[j]);
    };
    for (int p = 0; p < d2; ++p)
      for (int q = 0; q < d1; ++q) {
        std::vector<std::pair<int, Rat>> row;
        for (int pp = 0; pp < d2; ++pp) {
          Rat v = a2(p, pp);
          if (v != 0) row.emplace_back(slot(pp, q), v);
        }
        for (int qq = 0; qq < d1; ++qq) {
          Rat v = a1(qq, q);
          if (v != 0) row.emplace_back(slot(p, qq), -v);
        }
        if (!row.empty()) rows.push_back(std::move(row));
      }
  }
  IntertwinerSpace out;
  out.rows = d2;
  out.cols = d1;
  out.flat = nullspace_rows(d2 * d1, rows);
  return out;
}

Subspace solve_b_cocycle(const AlgebraRef& alg, const MultiVector& c) {
  if (!c.is_rational())
    throw UnsupportedModule("solve_b_cocycle needs a rational instantiation of c");
  GradedComponents2 parts = split2(c);
  if (!parts.a.is_zero() || !parts.b.is_zero())
    throw UnsupportedModule("c must lie in the Lambda^2 h block");
  if (!schouten_bracket(c, c).is_zero())
    throw NotTriangular("[c,c] != 0: c is not a triangular element");

  RealizedModule mixed = realize(alg, ModuleSpec::mixed_vh());
  const Grading& grading = alg->grading();
  std::vector<int> hs = grading.h;
  std::sort(hs.begin(), hs.end());

  // Per mixed coordinate: the V index and h index of its tuple.
  std::vector<int> col_v(mixed.dim), col_h(mixed.dim);
  for (int m = 0; m < mixed.dim; ++m) {
    Tuple t = tuple_unrank(alg->dim(), 2, mixed.ambient_index[m]);
    col_v[m] = alg->in_v(t.idx[0]) ? t.idx[0] : t.idx[1];
    col_h[m] = alg->in_h(t.idx[0]) ? t.idx[0] : t.idx[1];
  }

  std::vector<std::vector<std::pair<int, Rat>>> rows;
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      MultiVector alpha = MultiVector::basis_element(alg, {hs[i]}, true);
      MultiVector beta = MultiVector::basis_element(alg, {hs[j]}, true);
      MultiVector xi = dual_bracket(c, alpha, beta);
      QMat ma = action_matrix(alg, contract(alpha, c), 1);
      QMat mb = action_matrix(alg, contract(beta, c), 1);
      // b(xi) - c(alpha) b(beta) + c(beta) b(alpha) = 0, with
      // b(Y*) = -sum_v b_{(v,Y)} e_v.
      for (int v : grading.v) {
        std::vector<std::pair<int, Rat>> row;
        for (int m = 0; m < mixed.dim; ++m) {
          Rat coeff = 0;
          if (col_v[m] == v) {
            Scalar x = xi.coeff({col_h[m]});
            if (!x.is_zero()) coeff -= x.rational();
          }
          if (col_h[m] == hs[j]) coeff += ma(v, col_v[m]);
          if (col_h[m] == hs[i]) coeff -= mb(v, col_v[m]);
          if (coeff != 0) row.emplace_back(m, coeff);
        }
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  return nullspace_rows(mixed.dim, rows);
}

}  // namespace bialg
