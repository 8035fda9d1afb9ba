#include "bialg/multivector.hpp"

#include <algorithm>
#include <sstream>

namespace bialg {

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

int lambda_dim(int n, int k) { return static_cast<int>(binomial(n, k)); }

int tuple_rank(int n, const Tuple& t) {
  // Count tuples lexicographically smaller.
  long r = 0;
  int prev = -1;
  for (int pos = 0; pos < t.k; ++pos) {
    for (int v = prev + 1; v < t.idx[pos]; ++v) r += binomial(n - 1 - v, t.k - pos - 1);
    prev = t.idx[pos];
  }
  return static_cast<int>(r);
}

Tuple tuple_unrank(int n, int k, int r) {
  Tuple t;
  t.k = k;
  int prev = -1;
  long rem = r;
  for (int pos = 0; pos < k; ++pos) {
    for (int v = prev + 1; v < n; ++v) {
      long block = binomial(n - 1 - v, k - pos - 1);
      if (rem < block) {
        t.idx[pos] = v;
        prev = v;
        break;
      }
      rem -= block;
    }
  }
  return t;
}

namespace {

// Sorts indices into a strictly increasing tuple; returns 0 on repeats,
// otherwise the permutation sign. Every sign convention in the library is
// routed through here.
int normalize_tuple(std::span<const int> indices, Tuple& out) {
  int k = static_cast<int>(indices.size());
  std::array<int, 3> a{-1, -1, -1};
  for (int i = 0; i < k; ++i) a[i] = indices[i];
  int sign = 1;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k - i - 1; ++j)
      if (a[j] > a[j + 1]) {
        std::swap(a[j], a[j + 1]);
        sign = -sign;
      }
  for (int i = 0; i + 1 < k; ++i)
    if (a[i] == a[i + 1]) return 0;
  out.k = k;
  out.idx = a;
  return sign;
}

}  // namespace

MultiVector::MultiVector(AlgebraRef alg, int degree, bool dual)
    : alg_(std::move(alg)), degree_(degree), dual_(dual) {
  if (degree < 0 || degree > kMaxDegree)
    throw UnsupportedDegree("degree " + std::to_string(degree) + " out of range 0..3");
}

MultiVector MultiVector::basis_element(AlgebraRef alg, std::span<const int> indices,
                                       bool dual) {
  MultiVector v(std::move(alg), static_cast<int>(indices.size()), dual);
  v.add_term(indices, Scalar(1));
  return v;
}

MultiVector MultiVector::basis_element(AlgebraRef alg, std::initializer_list<int> indices,
                                       bool dual) {
  std::vector<int> v(indices);
  return basis_element(std::move(alg), std::span<const int>(v), dual);
}

void MultiVector::add_term(std::span<const int> indices, const Scalar& c) {
  if (static_cast<int>(indices.size()) != degree_)
    throw DimensionMismatch("term degree does not match multivector degree");
  if (c.is_zero()) return;
  for (int i : indices)
    if (i < 0 || i >= alg_->dim()) throw DimensionMismatch("basis index out of range");
  Tuple t;
  int sign = normalize_tuple(indices, t);
  if (sign == 0) return;
  Scalar add = sign > 0 ? c : -c;
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    terms_.emplace(t, add);
  } else {
    it->second += add;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiVector::add_term(std::initializer_list<int> indices, const Scalar& c) {
  std::vector<int> v(indices);
  add_term(std::span<const int>(v), c);
}

Scalar MultiVector::coeff(std::initializer_list<int> indices) const {
  std::vector<int> v(indices);
  Tuple t;
  int sign = normalize_tuple(std::span<const int>(v), t);
  if (sign == 0) return Scalar(0);
  auto it = terms_.find(t);
  if (it == terms_.end()) return Scalar(0);
  return sign > 0 ? it->second : -it->second;
}

MultiVector MultiVector::operator-() const {
  MultiVector out(*this);
  for (auto& [t, c] : out.terms_) c = -c;
  return out;
}

MultiVector& MultiVector::operator+=(const MultiVector& o) {
  require_same_algebra(*this, o);
  if (degree_ != o.degree_ || dual_ != o.dual_)
    throw DimensionMismatch("cannot add multivectors of different degree or variance");
  for (const auto& [t, c] : o.terms_) {
    auto it = terms_.find(t);
    if (it == terms_.end()) {
      terms_.emplace(t, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

MultiVector& MultiVector::operator-=(const MultiVector& o) { return *this += -o; }

MultiVector MultiVector::scaled(const Scalar& c) const {
  MultiVector out(alg_, degree_, dual_);
  if (c.is_zero()) return out;
  for (const auto& [t, v] : terms_) {
    Scalar cv = c * v;
    if (!cv.is_zero()) out.terms_.emplace(t, cv);
  }
  return out;
}

bool MultiVector::operator==(const MultiVector& o) const {
  return degree_ == o.degree_ && dual_ == o.dual_ && terms_ == o.terms_;
}

bool MultiVector::is_rational() const {
  for (const auto& [t, c] : terms_)
    if (!c.is_rational()) return false;
  return true;
}

MultiVector MultiVector::substitute(const std::map<std::string, Scalar>& bindings) const {
  MultiVector out(alg_, degree_, dual_);
  for (const auto& [t, c] : terms_) {
    Scalar s = c.substitute(bindings);
    if (!s.is_zero()) out.terms_.emplace(t, s);
  }
  return out;
}

std::set<std::string> MultiVector::variables() const {
  std::set<std::string> vars;
  for (const auto& [t, c] : terms_)
    for (const auto& v : c.variables()) vars.insert(v);
  return vars;
}

std::vector<Scalar> MultiVector::coordinates() const {
  std::vector<Scalar> out(lambda_dim(alg_->dim(), degree_));
  for (const auto& [t, c] : terms_) out[tuple_rank(alg_->dim(), t)] = c;
  return out;
}

QVec MultiVector::rational_coordinates() const {
  QVec out(lambda_dim(alg_->dim(), degree_), Rat(0));
  for (const auto& [t, c] : terms_) out[tuple_rank(alg_->dim(), t)] = c.rational();
  return out;
}

MultiVector MultiVector::from_coordinates(AlgebraRef alg, int degree,
                                          std::span<const Scalar> coords, bool dual) {
  MultiVector out(alg, degree, dual);
  int n = alg->dim();
  if (static_cast<int>(coords.size()) != lambda_dim(n, degree))
    throw DimensionMismatch("coordinate vector has the wrong length");
  for (int r = 0; r < static_cast<int>(coords.size()); ++r) {
    if (coords[r].is_zero()) continue;
    Tuple t = tuple_unrank(n, degree, r);
    out.terms_.emplace(t, coords[r]);
  }
  return out;
}

MultiVector MultiVector::from_rational_coordinates(AlgebraRef alg, int degree,
                                                   const QVec& coords, bool dual) {
  std::vector<Scalar> s(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) s[i] = Scalar(coords[i]);
  return from_coordinates(std::move(alg), degree, s, dual);
}

std::string MultiVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    std::string cs = c.str();
    bool leading_minus = cs.size() > 1 && cs[0] == '-' && c.terms().size() == 1;
    if (!first) os << (leading_minus ? " - " : " + ");
    if (first && leading_minus) os << '-';
    if (leading_minus) cs = cs.substr(1);
    bool needs_parens = c.terms().size() > 1;
    bool is_unit = !needs_parens && cs == "1";
    if (degree_ == 0) {
      os << (needs_parens ? "(" + cs + ")" : cs);
    } else {
      if (needs_parens)
        os << '(' << cs << ")*";
      else if (!is_unit)
        os << cs << '*';
      for (int i = 0; i < t.k; ++i) {
        if (i) os << '^';
        os << alg_->labels()[t.idx[i]] << (dual_ ? "*" : "");
      }
    }
    first = false;
  }
  return os.str();
}

MultiVector operator+(MultiVector a, const MultiVector& b) {
  a += b;
  return a;
}

MultiVector operator-(MultiVector a, const MultiVector& b) {
  a -= b;
  return a;
}

MultiVector operator*(const Scalar& c, const MultiVector& v) { return v.scaled(c); }

void require_same_algebra(const MultiVector& a, const MultiVector& b) {
  if (a.algebra() != b.algebra())
    throw AlgebraMismatch("multivectors belong to different algebras");
}

MultiVector wedge(const MultiVector& a, const MultiVector& b) {
  require_same_algebra(a, b);
  if (a.dual() != b.dual()) throw AlgebraMismatch("cannot wedge primal with dual");
  int k = a.degree() + b.degree();
  if (k > kMaxDegree)
    throw DegreeOverflow("wedge degree " + std::to_string(k) + " exceeds 3");
  MultiVector out(a.algebra(), k, a.dual());
  for (const auto& [ta, ca] : a.terms())
    for (const auto& [tb, cb] : b.terms()) {
      std::array<int, 3> joined{};
      for (int i = 0; i < ta.k; ++i) joined[i] = ta.idx[i];
      for (int i = 0; i < tb.k; ++i) joined[ta.k + i] = tb.idx[i];
      out.add_term(std::span<const int>(joined.data(), k), ca * cb);
    }
  return out;
}

namespace {

// Single contraction by the dual basis covector e^a.
MultiVector contract_one(int a, const MultiVector& u) {
  MultiVector out(u.algebra(), u.degree() - 1, false);
  for (const auto& [t, c] : u.terms()) {
    for (int pos = 0; pos < t.k; ++pos) {
      if (t.idx[pos] != a) continue;
      std::array<int, 3> rest{};
      int m = 0;
      for (int i = 0; i < t.k; ++i)
        if (i != pos) rest[m++] = t.idx[i];
      Scalar coeff = (pos % 2 == 0) ? c : -c;
      out.add_term(std::span<const int>(rest.data(), m), coeff);
    }
  }
  return out;
}

}  // namespace

MultiVector contract(const MultiVector& xi, const MultiVector& u) {
  require_same_algebra(xi, u);
  if (!xi.dual() || u.dual())
    throw AlgebraMismatch("contraction expects a dual argument acting on a primal one");
  if (xi.degree() > u.degree())
    throw DegreeUnderflow("contraction degree exceeds target degree");
  MultiVector out(u.algebra(), u.degree() - xi.degree(), false);
  for (const auto& [txi, cxi] : xi.terms()) {
    MultiVector cur = u;
    for (int i = 0; i < txi.k; ++i) cur = contract_one(txi.idx[i], cur);
    out += cur.scaled(cxi);
  }
  return out;
}

Scalar pairing(const MultiVector& xi, const MultiVector& u) {
  require_same_algebra(xi, u);
  if (xi.degree() != u.degree())
    throw DimensionMismatch("pairing requires equal degrees");
  if (!xi.dual() || u.dual()) throw AlgebraMismatch("pairing expects <dual, primal>");
  Scalar out;
  for (const auto& [t, c] : xi.terms()) {
    auto it = u.terms().find(t);
    if (it != u.terms().end()) out += c * it->second;
  }
  return out;
}

MultiVector bracket(const MultiVector& x, const MultiVector& y) {
  require_same_algebra(x, y);
  if (x.degree() != 1 || y.degree() != 1 || x.dual() || y.dual())
    throw DimensionMismatch("bracket expects two primal degree-1 elements");
  MultiVector out(x.algebra(), 1, false);
  for (const auto& [tx, cx] : x.terms())
    for (const auto& [ty, cy] : y.terms())
      for (const auto& [k, c] : x.algebra()->bracket_basis(tx.idx[0], ty.idx[0])) {
        int ind[1] = {k};
        out.add_term(std::span<const int>(ind, 1), cx * cy * Scalar(c));
      }
  return out;
}

MultiVector act(const MultiVector& x, const MultiVector& u) {
  require_same_algebra(x, u);
  if (x.degree() != 1 || x.dual() || u.dual())
    throw DimensionMismatch("act expects a primal degree-1 actor on a primal multivector");
  MultiVector out(u.algebra(), u.degree(), false);
  for (const auto& [tx, cx] : x.terms())
    for (const auto& [tu, cu] : u.terms())
      for (int slot = 0; slot < tu.k; ++slot)
        for (const auto& [k, c] : u.algebra()->bracket_basis(tx.idx[0], tu.idx[slot])) {
          std::array<int, 3> repl = tu.idx;
          repl[slot] = k;
          out.add_term(std::span<const int>(repl.data(), tu.k), cx * cu * Scalar(c));
        }
  return out;
}

MultiVector coact(const MultiVector& x, const MultiVector& alpha) {
  require_same_algebra(x, alpha);
  if (x.degree() != 1 || x.dual() || !alpha.dual() || alpha.degree() != 1)
    throw DimensionMismatch("coact expects a primal vector and a covector");
  const AlgebraRef& alg = x.algebra();
  MultiVector out(alg, 1, true);
  // (X . alpha)(e_k) = -alpha([X, e_k])
  for (const auto& [tx, cx] : x.terms())
    for (int k = 0; k < alg->dim(); ++k)
      for (const auto& [l, c] : alg->bracket_basis(tx.idx[0], k)) {
        Scalar al = alpha.coeff({l});
        if (al.is_zero()) continue;
        int ind[1] = {k};
        out.add_term(std::span<const int>(ind, 1), -(cx * Scalar(c) * al));
      }
  return out;
}

QMat action_matrix(const AlgebraRef& alg, const MultiVector& x, int k) {
  if (k < 1 || k > kMaxDegree)
    throw UnsupportedDegree("action matrix degree must be 1, 2 or 3");
  if (x.algebra() != alg) throw AlgebraMismatch("actor belongs to another algebra");
  int n = alg->dim();
  int d = lambda_dim(n, k);
  QMat m(d, d);
  for (int col = 0; col < d; ++col) {
    Tuple t = tuple_unrank(n, k, col);
    MultiVector basis(alg, k);
    basis.add_term(std::span<const int>(t.idx.data(), k), Scalar(1));
    MultiVector img = act(x, basis);
    for (const auto& [tt, c] : img.terms()) m(tuple_rank(n, tt), col) = c.rational();
  }
  return m;
}

QMat action_matrix_basis(const AlgebraRef& alg, int basis_index, int k) {
  int ind[1] = {basis_index};
  return action_matrix(alg, MultiVector::basis_element(alg, std::span<const int>(ind, 1)),
                       k);
}

namespace {

template <typename M>
MultiVector apply_linear_impl(const M& m, const MultiVector& u) {
  const AlgebraRef& alg = u.algebra();
  int n = alg->dim();
  if (m.rows() != n || m.cols() != n)
    throw DimensionMismatch("pushforward matrix must be dim x dim");
  if (u.dual()) throw AlgebraMismatch("pushforward acts on primal multivectors");
  MultiVector out(alg, u.degree(), false);
  for (const auto& [t, c] : u.terms()) {
    // wedge of the image columns
    std::vector<std::pair<Tuple, Scalar>> partial{{Tuple{}, c}};
    for (int slot = 0; slot < t.k; ++slot) {
      std::vector<std::pair<Tuple, Scalar>> next;
      for (const auto& [pt, pc] : partial)
        for (int row = 0; row < n; ++row) {
          Scalar entry = Scalar(m(row, t.idx[slot]));
          if (entry.is_zero()) continue;
          Tuple grown = pt;
          grown.idx[grown.k] = row;
          grown.k += 1;
          next.emplace_back(grown, pc * entry);
        }
      partial = std::move(next);
    }
    for (const auto& [pt, pc] : partial)
      out.add_term(std::span<const int>(pt.idx.data(), pt.k), pc);
  }
  return out;
}

}  // namespace

MultiVector apply_linear(const SMat& m, const MultiVector& u) {
  return apply_linear_impl(m, u);
}

MultiVector apply_linear(const QMat& m, const MultiVector& u) {
  return apply_linear_impl(m, u);
}

GradedComponents2 split2(const MultiVector& r) {
  const AlgebraRef& alg = r.algebra();
  if (!alg->graded()) throw NotGraded("split2 needs a graded algebra");
  if (r.degree() != 2 || r.dual())
    throw DimensionMismatch("split2 expects a primal bivector");
  GradedComponents2 out{MultiVector(alg, 2), MultiVector(alg, 2), MultiVector(alg, 2)};
  for (const auto& [t, c] : r.terms()) {
    int nv = (alg->in_v(t.idx[0]) ? 1 : 0) + (alg->in_v(t.idx[1]) ? 1 : 0);
    MultiVector& dest = nv == 2 ? out.a : (nv == 1 ? out.b : out.c);
    dest.add_term(std::span<const int>(t.idx.data(), 2), c);
  }
  return out;
}

GradedComponents3 split3(const MultiVector& w) {
  const AlgebraRef& alg = w.algebra();
  if (!alg->graded()) throw NotGraded("split3 needs a graded algebra");
  if (w.degree() != 3 || w.dual())
    throw DimensionMismatch("split3 expects a primal trivector");
  GradedComponents3 out{MultiVector(alg, 3), MultiVector(alg, 3), MultiVector(alg, 3),
                        MultiVector(alg, 3)};
  for (const auto& [t, c] : w.terms()) {
    int nv = 0;
    for (int i = 0; i < 3; ++i) nv += alg->in_v(t.idx[i]) ? 1 : 0;
    MultiVector& dest =
        nv == 3 ? out.vvv : (nv == 2 ? out.vvh : (nv == 1 ? out.vhh : out.hhh));
    dest.add_term(std::span<const int>(t.idx.data(), 3), c);
  }
  return out;
}

}  // namespace bialg
