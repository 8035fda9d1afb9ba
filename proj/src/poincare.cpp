#include "bialg/poincare.hpp"

#include <sstream>

namespace bialg {

int Inhomogeneous::omega_index(int j, int k) const {
  int n = dim_v();
  if (j < 0 || k < 0 || j >= n || k >= n || j >= k)
    throw DimensionMismatch("omega_index expects 0 <= j < k < dim V");
  Tuple t;
  t.k = 2;
  t.idx = {j, k, -1};
  return n + tuple_rank(n, t);
}

MultiVector Inhomogeneous::e(int j) const {
  if (j < 0 || j >= dim_v()) throw DimensionMismatch("translation index out of range");
  return MultiVector::basis_element(alg, {j});
}

MultiVector Inhomogeneous::omega_gen(int j, int k) const {
  MultiVector out(alg, 1);
  if (j == k) return out;
  if (j < k) {
    out.add_term({omega_index(j, k)}, Scalar(1));
  } else {
    out.add_term({omega_index(k, j)}, Scalar(-1));
  }
  return out;
}

MultiVector Inhomogeneous::lower(const MultiVector& x) const {
  if (x.degree() != 1 || x.dual())
    throw DimensionMismatch("lower expects a primal vector");
  MultiVector out(alg, 1, true);
  const QMat& g = metric.matrix();
  for (const auto& [t, c] : x.terms()) {
    int l = t.idx[0];
    if (!alg->in_v(l)) throw NotTranslation("metric lowering needs a translation vector");
    for (int j = 0; j < dim_v(); ++j)
      if (g(j, l) != 0) out.add_term({j}, c * Scalar(g(j, l)));
  }
  return out;
}

bool Inhomogeneous::has_named(const std::string& name) const {
  return named_.count(name) > 0 || alg->label_index(name) >= 0;
}

MultiVector Inhomogeneous::named_element(const std::string& name) const {
  auto it = named_.find(name);
  if (it != named_.end()) return it->second;
  int idx = alg->label_index(name);
  if (idx >= 0) return MultiVector::basis_element(alg, {idx});
  throw UnknownEntry("no element named '" + name + "'");
}

MultiVector Inhomogeneous::named_covector(const std::string& name) const {
  // Row of the inverse frame matrix belonging to the named frame vector.
  for (std::size_t i = 0; i < frame_names_.size(); ++i) {
    if (frame_names_[i] != name) continue;
    MultiVector out(alg, 1, true);
    for (int j = 0; j < alg->dim(); ++j)
      if (frame_inv_(static_cast<int>(i), j) != 0)
        out.add_term({j}, Scalar(frame_inv_(static_cast<int>(i), j)));
    return out;
  }
  throw UnknownEntry("no frame covector named '" + name + "'");
}

std::string Inhomogeneous::format(const MultiVector& u) const {
  MultiVector in_frame = apply_linear(frame_inv_, u);
  if (in_frame.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : in_frame.terms()) {
    std::string cs = c.str();
    bool leading_minus = cs.size() > 1 && cs[0] == '-' && c.terms().size() == 1;
    if (!first) os << (leading_minus ? " - " : " + ");
    if (first && leading_minus) os << '-';
    if (leading_minus) cs = cs.substr(1);
    bool needs_parens = c.terms().size() > 1;
    bool is_unit = !needs_parens && cs == "1";
    if (u.degree() == 0) {
      os << (needs_parens ? "(" + cs + ")" : cs);
    } else {
      if (needs_parens)
        os << '(' << cs << ")*";
      else if (!is_unit)
        os << cs << '*';
      for (int i = 0; i < t.k; ++i) {
        if (i) os << '^';
        os << frame_names_[t.idx[i]];
      }
    }
    first = false;
  }
  return os.str();
}

Inhomogeneous make_inhomogeneous(int p, int q) {
  if (p < 0 || q < 0 || p + q < 2) throw BadSignature("need p, q >= 0 and p + q >= 2");
  int n = p + q;
  int dh = n * (n - 1) / 2;
  Metric metric = Metric::diagonal(p, q);
  const QMat& g = metric.matrix();

  // Rotation block: [Om_ab, Om_cd] = g_bc Om_ad - g_ac Om_bd - g_bd Om_ac + g_ad Om_bc.
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(dh);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  auto pair_rank = [&](int a, int b) {  // a < b
    Tuple t;
    t.k = 2;
    t.idx = {a, b, -1};
    return tuple_rank(n, t);
  };
  std::vector c(dh, std::vector(dh, std::vector<Rat>(dh)));
  auto add_omega = [&](std::vector<Rat>& row, int a, int b, const Rat& coeff) {
    if (a == b || coeff == 0) return;
    if (a < b)
      row[pair_rank(a, b)] += coeff;
    else
      row[pair_rank(b, a)] -= coeff;
  };
  for (int i = 0; i < dh; ++i)
    for (int j = 0; j < dh; ++j) {
      if (i == j) continue;
      auto [a, b] = pairs[i];
      auto [cc, d] = pairs[j];
      add_omega(c[i][j], a, d, g(b, cc));
      add_omega(c[i][j], b, d, -g(a, cc));
      add_omega(c[i][j], a, cc, -g(b, d));
      add_omega(c[i][j], b, cc, g(a, d));
    }
  std::vector<std::string> h_labels(dh);
  for (int i = 0; i < dh; ++i)
    h_labels[i] = "Om" + std::to_string(pairs[i].first) + std::to_string(pairs[i].second);
  AlgebraRef h = LieAlgebra::build(h_labels, c);

  // Om_{jk} acts on V by e_l -> g_kl e_j - g_jl e_k.
  std::vector<QMat> rep(dh, QMat(n, n));
  for (int i = 0; i < dh; ++i) {
    auto [j, k] = pairs[i];
    for (int l = 0; l < n; ++l) {
      if (g(k, l) != 0) rep[i](j, l) += g(k, l);
      if (g(j, l) != 0) rep[i](k, l) -= g(j, l);
    }
  }
  std::vector<std::string> v_labels(n);
  for (int j = 0; j < n; ++j) v_labels[j] = "e" + std::to_string(j);
  AlgebraRef alg = LieAlgebra::semidirect(rep, h, n, v_labels);

  Inhomogeneous out(alg, metric, p, q);

  if (p == 1 && q == 3) {
    auto om = [&](int j, int k) { return out.omega_gen(j, k); };
    std::map<std::string, MultiVector>& named = out.named_;
    named.emplace("e+", out.e(0) + out.e(3));
    named.emplace("e-", out.e(0) - out.e(3));
    named.emplace("H", om(3, 0));
    named.emplace("JH", om(2, 1));
    named.emplace("X+", om(1, 0) + om(1, 3));
    named.emplace("JX+", om(0, 2) + om(3, 2));
    named.emplace("X-", om(1, 0) + om(3, 1));
    named.emplace("JX-", om(2, 0) + om(3, 2));
    for (int i = 1; i <= 3; ++i)
      named.emplace("L" + std::to_string(i), om(i, 0));
    named.emplace("M1", om(2, 3));
    named.emplace("M2", om(3, 1));
    named.emplace("M3", om(1, 2));
    out.frame_names_ = {"e+", "e-", "e1", "e2", "H", "JH", "X+", "JX+", "X-", "JX-"};
  } else {
    out.frame_names_ = alg->labels();
  }

  int dim = alg->dim();
  out.frame_mat_ = QMat(dim, dim);
  for (int col = 0; col < dim; ++col) {
    MultiVector v = out.named_element(out.frame_names_[col]);
    QVec coords = v.rational_coordinates();
    for (int row = 0; row < dim; ++row) out.frame_mat_(row, col) = coords[row];
  }
  out.frame_inv_ = inverse(out.frame_mat_);

  // The invariant trivector first: the contraction route of b_x needs it.
  out.named_.emplace("Omega", omega_invariant(out));
  std::vector<std::pair<std::string, MultiVector>> vecs;
  for (int j = 0; j < n; ++j) vecs.emplace_back("e" + std::to_string(j), out.e(j));
  if (p == 1 && q == 3) {
    vecs.emplace_back("e+", out.named_element("e+"));
    vecs.emplace_back("e-", out.named_element("e-"));
  }
  for (const auto& [name, v] : vecs) out.named_.emplace("b_" + name, b_x(out, v));
  return out;
}

MultiVector omega_invariant(const Inhomogeneous& a) {
  int n = a.dim_v();
  const QMat& ginv = a.metric.inverse_matrix();
  MultiVector out(a.alg, 3);
  // sum over ordered pairs (j,k): g^{jj} g^{kk} e_j ^ e_k ^ Om_{jk}
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      Rat coeff = 2 * ginv(j, j) * ginv(k, k);
      out.add_term({j, k, a.omega_index(j, k)}, Scalar(coeff));
    }
  for (int x = 0; x < a.alg->dim(); ++x) {
    if (!act(MultiVector::basis_element(a.alg, {x}), out).is_zero())
      throw Error("internal check failed: invariant trivector is not invariant");
  }
  return out;
}

MultiVector b_x(const Inhomogeneous& a, const MultiVector& x) {
  if (x.degree() != 1 || x.dual()) throw NotTranslation("b_x expects a vector in V");
  for (const auto& [t, c] : x.terms())
    if (!a.alg->in_v(t.idx[0])) throw NotTranslation("b_x expects a vector in V");
  if (!x.is_rational()) throw NotTranslation("b_x expects rational coordinates");

  int n = a.dim_v();
  const QMat& ginv = a.metric.inverse_matrix();
  MultiVector direct(a.alg, 2);
  for (int j = 0; j < n; ++j) {
    // g^{jj} e_j ^ Om_{x, e_j}
    MultiVector om_x_j(a.alg, 1);
    for (const auto& [t, c] : x.terms()) om_x_j += a.omega_gen(t.idx[0], j).scaled(c);
    direct += wedge(a.e(j), om_x_j).scaled(Scalar(ginv(j, j)));
  }
  MultiVector via_contraction =
      contract(a.lower(x), a.named_element("Omega")).scaled(Scalar(frac(1, 2)));
  if (!(direct == via_contraction))
    throw Error("internal check failed: the two b_x routes disagree");
  return direct;
}

MultiVector f0(const Inhomogeneous& a, const MultiVector& x) { return b_x(a, x); }

namespace {

// (e^j ^ e^k) _| (e_0 ^ e_1 ^ e_2 ^ e_3): complement pair with the sign of
// removing j first, then k.
void vol4_contract(int j, int k, int& c, int& d, int& sign) {
  int tuple[4] = {0, 1, 2, 3};
  bool present[4] = {true, true, true, true};
  sign = 1;
  for (int target : {j, k}) {
    int pos = 0;
    for (int i = 0; i < 4; ++i) {
      if (!present[i]) continue;
      if (tuple[i] == target) break;
      ++pos;
    }
    if (pos % 2 == 1) sign = -sign;
    present[target] = false;
  }
  c = d = -1;
  for (int i = 0; i < 4; ++i)
    if (present[i]) (c < 0 ? c : d) = i;
}

}  // namespace

QMat hodge_star_matrix(const Inhomogeneous& a) {
  if (a.dim_v() != 4) throw WrongDimension("the star operator needs p + q = 4");
  const QMat& g = a.metric.matrix();
  int dh = 6;
  QMat star(dh, dh);
  for (int j = 0; j < 4; ++j)
    for (int k = j + 1; k < 4; ++k) {
      int cc, d, sign;
      vol4_contract(j, k, cc, d, sign);
      Rat coeff = g(j, j) * g(k, k) * sign;
      star(a.omega_index(cc, d) - 4, a.omega_index(j, k) - 4) = coeff;
    }
  return star;
}

MultiVector hodge_star(const Inhomogeneous& a, const MultiVector& x_in_h) {
  if (x_in_h.degree() != 1 || x_in_h.dual())
    throw DimensionMismatch("star expects a degree-1 element of the rotation block");
  QMat star = hodge_star_matrix(a);
  int n = a.dim_v();
  MultiVector out(a.alg, 1);
  for (const auto& [t, c] : x_in_h.terms()) {
    if (!a.alg->in_h(t.idx[0]))
      throw WrongDimension("star is defined on the rotation block only");
    for (int row = 0; row < star.rows(); ++row)
      if (star(row, t.idx[0] - n) != 0)
        out.add_term({n + row}, c * Scalar(star(row, t.idx[0] - n)));
  }
  return out;
}

MultiVector f1(const Inhomogeneous& a, const MultiVector& x) {
  MultiVector base = f0(a, x);
  MultiVector out(a.alg, 2);
  int n = a.dim_v();
  QMat star = hodge_star_matrix(a);
  for (const auto& [t, c] : base.terms()) {
    int v = t.idx[0], h = t.idx[1];  // V index first in the mixed block
    for (int row = 0; row < star.rows(); ++row)
      if (star(row, h - n) != 0) out.add_term({v, n + row}, c * Scalar(star(row, h - n)));
  }
  return out;
}

Special3 special3(const Inhomogeneous& a) {
  if (a.dim_v() != 3) throw WrongDimension("these elements need p + q = 3");
  Special3 out{MultiVector(a.alg, 2), QMat(), QMat()};

  // s = eps^{jkl} e_j ^ Om_{kl}, summed over ordered pairs k < l (this
  // normalization makes T = -1/2 ds hold on the nose)
  int perms[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (auto& p : perms) out.s += wedge(a.e(p[0]), a.omega_gen(p[1], p[2]));

  MultiVector vol(a.alg, 3);
  vol.add_term({0, 1, 2}, Scalar(1));
  RealizedModule l2v = realize(a.alg, ModuleSpec::lambda_v(2));
  RealizedModule l2h = realize(a.alg, ModuleSpec::lambda_h(2));

  out.t_map = QMat(l2v.dim, 3);
  std::vector<MultiVector> t_images;
  for (int j = 0; j < 3; ++j) {
    MultiVector img = contract(a.lower(a.e(j)), vol);
    t_images.push_back(img);
    QVec coords = module_coordinates(a.alg, l2v, img);
    for (int m = 0; m < l2v.dim; ++m) out.t_map(m, j) = coords[m];
  }

  // x -> Lambda^2(Om o T)(T(x)) where Om maps e_a ^ e_b to Om_{ab}.
  auto om_of_bivector = [&](const MultiVector& w) {
    MultiVector res(a.alg, 1);
    for (const auto& [t, c] : w.terms()) res += a.omega_gen(t.idx[0], t.idx[1]).scaled(c);
    return res;
  };
  // T(e_j) = sum c_ab e_a ^ e_b maps further to sum c_ab Om(T e_a) ^ Om(T e_b).
  out.trud = QMat(l2h.dim, 3);
  for (int j = 0; j < 3; ++j) {
    MultiVector acc(a.alg, 2);
    for (const auto& [t, c] : t_images[j].terms()) {
      MultiVector omta = om_of_bivector(t_images[t.idx[0]]);
      MultiVector omtb = om_of_bivector(t_images[t.idx[1]]);
      acc += wedge(omta, omtb).scaled(c);
    }
    QVec coords = module_coordinates(a.alg, l2h, acc);
    for (int m = 0; m < l2h.dim; ++m) out.trud(m, j) = coords[m];
  }
  return out;
}

}  // namespace bialg
