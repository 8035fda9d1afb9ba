#include "bialg/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bialg {

namespace {

SparseVec sparsify(const std::vector<Rat>& dense) {
  SparseVec out;
  for (int k = 0; k < static_cast<int>(dense.size()); ++k)
    if (dense[k] != 0) out.emplace_back(k, dense[k]);
  return out;
}

void axpy(std::map<int, Rat>& acc, const Rat& f, const SparseVec& v) {
  if (f == 0) return;
  for (const auto& [k, c] : v) {
    acc[k] += f * c;
    if (acc[k] == 0) acc.erase(k);
  }
}

}  // namespace

AlgebraRef LieAlgebra::build(std::vector<std::string> labels,
                             const std::vector<std::vector<std::vector<Rat>>>& c,
                             std::optional<Grading> grading) {
  int n = static_cast<int>(labels.size());
  if (static_cast<int>(c.size()) != n)
    throw DimensionMismatch("structure constant tensor does not match label count");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(c[i].size()) != n)
      throw DimensionMismatch("structure constant tensor is not square");
    for (int j = 0; j < n; ++j)
      if (static_cast<int>(c[i][j].size()) != n)
        throw DimensionMismatch("structure constant tensor is not cubic");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (c[i][j][k] != -c[j][i][k]) throw AntisymmetryViolation(i, j, k);

  auto alg = std::shared_ptr<LieAlgebra>(new LieAlgebra());
  alg->dim_ = n;
  alg->labels_ = std::move(labels);
  alg->table_.resize(n);
  for (int i = 0; i < n; ++i) {
    alg->table_[i].resize(n - i - 1);
    for (int j = i + 1; j < n; ++j) alg->table_[i][j - i - 1] = sparsify(c[i][j]);
  }
  alg->grading_ = std::move(grading);
  alg->block_.assign(n, -1);
  if (alg->grading_) {
    for (int idx : alg->grading_->v) alg->block_[idx] = 0;
    for (int idx : alg->grading_->h) alg->block_[idx] = 1;
    for (int i = 0; i < n; ++i)
      if (alg->block_[i] < 0)
        throw GradingViolation("basis index " + std::to_string(i) +
                               " belongs to neither block");
  }
  alg->validate_jacobi();
  if (alg->grading_) alg->validate_grading();
  return alg;
}

void LieAlgebra::validate_jacobi() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) {
        std::map<int, Rat> acc;
        // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
        for (const auto& [l, cl] : bracket_basis(i, j)) axpy(acc, cl, bracket_basis(l, k));
        for (const auto& [l, cl] : bracket_basis(j, k)) axpy(acc, cl, bracket_basis(l, i));
        for (const auto& [l, cl] : bracket_basis(k, i)) axpy(acc, cl, bracket_basis(l, j));
        if (!acc.empty()) {
          std::ostringstream os;
          for (const auto& [l, cl] : acc) os << " +" << cl << "*e" << l;
          throw JacobiViolation(i, j, k, os.str());
        }
      }
}

void LieAlgebra::validate_grading() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      bool vi = in_v(i), vj = in_v(j);
      for (const auto& [k, c] : bracket_basis(i, j)) {
        if (vi && vj)
          throw GradingViolation("[V,V] must vanish; offending pair (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
        if (vi != vj && !in_v(k))
          throw GradingViolation("[h,V] leaves V at pair (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
        if (!vi && !vj && !in_h(k))
          throw GradingViolation("[h,h] leaves h at pair (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
      }
    }
}

AlgebraRef LieAlgebra::semidirect(const std::vector<QMat>& rep, const AlgebraRef& h,
                                  int dim_v, std::vector<std::string> v_labels) {
  int dh = h->dim();
  if (static_cast<int>(rep.size()) != dh)
    throw DimensionMismatch("one action matrix per h-basis element required");
  for (const QMat& m : rep)
    if (m.rows() != dim_v || m.cols() != dim_v)
      throw DimensionMismatch("action matrices must be dim_v x dim_v");

  // Homomorphism check: rep([X,Y]) = [rep(X), rep(Y)].
  for (int x = 0; x < dh; ++x)
    for (int y = x + 1; y < dh; ++y) {
      QMat lhs(dim_v, dim_v);
      for (const auto& [k, c] : h->bracket_basis(x, y))
        for (int a = 0; a < dim_v; ++a)
          for (int b = 0; b < dim_v; ++b) lhs(a, b) += c * rep[k](a, b);
      QMat rhs = rep[x] * rep[y] - rep[y] * rep[x];
      if (!(lhs == rhs)) {
        QMat diff = lhs - rhs;
        std::ostringstream os;
        for (int a = 0; a < dim_v; ++a)
          for (int b = 0; b < dim_v; ++b)
            if (diff(a, b) != 0) os << " (" << a << "," << b << ")=" << diff(a, b);
        throw NotARepresentation(x, y, "residual" + os.str());
      }
    }

  int n = dim_v + dh;
  std::vector<std::string> labels(n);
  for (int i = 0; i < dim_v; ++i)
    labels[i] = i < static_cast<int>(v_labels.size()) ? v_labels[i]
                                                      : "v" + std::to_string(i);
  for (int x = 0; x < dh; ++x) labels[dim_v + x] = h->labels()[x];

  std::vector c(n, std::vector(n, std::vector<Rat>(n)));
  for (int x = 0; x < dh; ++x)
    for (int y = x + 1; y < dh; ++y)
      for (const auto& [k, v] : h->bracket_basis(x, y)) {
        c[dim_v + x][dim_v + y][dim_v + k] = v;
        c[dim_v + y][dim_v + x][dim_v + k] = -v;
      }
  for (int x = 0; x < dh; ++x)
    for (int a = 0; a < dim_v; ++a)
      for (int b = 0; b < dim_v; ++b) {
        if (rep[x](b, a) == 0) continue;
        c[dim_v + x][a][b] = rep[x](b, a);  // [X, e_a] = rep(X) e_a
        c[a][dim_v + x][b] = -rep[x](b, a);
      }

  Grading g;
  for (int i = 0; i < dim_v; ++i) g.v.push_back(i);
  for (int x = 0; x < dh; ++x) g.h.push_back(dim_v + x);
  return build(std::move(labels), c, g);
}

int LieAlgebra::label_index(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

SparseVec LieAlgebra::bracket_basis(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
    throw DimensionMismatch("basis index out of range");
  if (i == j) return {};
  if (i < j) return table_[i][j - i - 1];
  SparseVec out = table_[j][i - j - 1];
  for (auto& [k, c] : out) c = -c;
  return out;
}

const Grading& LieAlgebra::grading() const {
  if (!grading_) throw NotGraded("algebra carries no grading");
  return *grading_;
}

bool LieAlgebra::in_v(int index) const { return block_[index] == 0; }
bool LieAlgebra::in_h(int index) const { return block_[index] == 1; }

Metric Metric::diagonal(int p, int q) {
  int n = p + q;
  QMat g(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = i < p ? Rat(1) : Rat(-1);
  return Metric(g, g, p, q);
}

Metric Metric::from_matrix(const QMat& g, int p, int q) {
  if (g.rows() != g.cols()) throw BadSignature("metric matrix must be square");
  if (!(g == g.transpose())) throw BadSignature("metric matrix must be symmetric");
  Signature sig = symmetric_signature(g);
  if (sig.zero != 0) throw BadSignature("metric matrix is degenerate");
  if (sig.positive != p || sig.negative != q)
    throw BadSignature("metric signature is (" + std::to_string(sig.positive) + "," +
                       std::to_string(sig.negative) + "), expected (" +
                       std::to_string(p) + "," + std::to_string(q) + ")");
  return Metric(g, inverse(g), p, q);
}

Rat Metric::apply(const QVec& x, const QVec& y) const {
  int n = dim();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw DimensionMismatch("metric argument dimension mismatch");
  Rat out = 0;
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) out += x[i] * mat_(i, j) * y[j];
  }
  return out;
}

}  // namespace bialg
