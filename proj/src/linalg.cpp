#include "bialg/linalg.hpp"

#include <algorithm>

namespace bialg {

QMat to_rational(const SMat& m) {
  QMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).rational();
  return out;
}

SMat to_symbolic(const QMat& m) {
  SMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = Scalar(m(i, j));
  return out;
}

bool Subspace::contains_vector(const QVec& v) const {
  if (static_cast<int>(v.size()) != ambient)
    throw DimensionMismatch("vector size does not match ambient dimension");
  QVec r = v;
  for (int i = 0; i < basis.rows(); ++i) {
    int p = -1;
    for (int j = 0; j < ambient; ++j)
      if (basis(i, j) != 0) {
        p = j;
        break;
      }
    if (p < 0) continue;
    if (r[p] != 0) {
      Rat f = r[p];  // pivot entries are 1
      for (int j = p; j < ambient; ++j) r[j] -= f * basis(i, j);
    }
  }
  for (const Rat& x : r)
    if (x != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient != other.ambient) return false;
  for (int i = 0; i < other.basis.rows(); ++i)
    if (!contains_vector(other.basis.row(i))) return false;
  return true;
}

EchelonAccumulator::EchelonAccumulator(int ncols) : ncols_(ncols) {}

namespace {

void normalize_content(std::vector<std::pair<int, Int>>& row) {
  if (row.empty()) return;
  Int g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  bool flip = row.front().second < 0;
  if (g == 1 && !flip) return;
  if (flip) g = -g;
  for (auto& [c, v] : row) v /= g;
}

// r <- pv * r - rv * p, merging sorted sparse rows.
void eliminate(std::vector<std::pair<int, Int>>& r, const Int& rv,
               const std::vector<std::pair<int, Int>>& p, const Int& pv) {
  std::vector<std::pair<int, Int>> out;
  out.reserve(r.size() + p.size());
  auto ir = r.begin();
  auto ip = p.begin();
  while (ir != r.end() || ip != p.end()) {
    if (ip == p.end() || (ir != r.end() && ir->first < ip->first)) {
      out.emplace_back(ir->first, pv * ir->second);
      ++ir;
    } else if (ir == r.end() || ip->first < ir->first) {
      out.emplace_back(ip->first, -rv * ip->second);
      ++ip;
    } else {
      Int v = pv * ir->second - rv * ip->second;
      if (v != 0) out.emplace_back(ir->first, std::move(v));
      ++ir, ++ip;
    }
  }
  r = std::move(out);
}

}  // namespace

bool EchelonAccumulator::insert_sparse(std::vector<std::pair<int, Rat>> row) {
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  // Merge duplicates, drop zeros, clear denominators.
  Int den = 1;
  {
    std::vector<std::pair<int, Rat>> merged;
    for (auto& [c, v] : row) {
      if (c < 0 || c >= ncols_) throw DimensionMismatch("column index out of range");
      if (!merged.empty() && merged.back().first == c)
        merged.back().second += v;
      else
        merged.emplace_back(c, v);
    }
    row.clear();
    for (auto& [c, v] : merged)
      if (v != 0) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
        row.emplace_back(c, v);
      }
  }
  IntRow r;
  r.reserve(row.size());
  for (const auto& [c, v] : row) {
    Rat scaled = v * Rat(den);
    r.emplace_back(c, scaled.get_num());
  }
  normalize_content(r);

  for (std::size_t i = 0; i < rows_.size() && !r.empty(); ++i) {
    int p = pivots_[i];
    if (r.front().first > p) continue;
    if (r.front().first < p) break;  // new pivot column to the left of row i
    eliminate(r, r.front().second, rows_[i], rows_[i].front().second);
    normalize_content(r);
  }
  if (r.empty()) return false;

  int piv = r.front().first;
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  std::size_t at = pos - pivots_.begin();
  pivots_.insert(pivots_.begin() + at, piv);
  rows_.insert(rows_.begin() + at, std::move(r));
  return true;
}

bool EchelonAccumulator::insert(const QVec& row) {
  std::vector<std::pair<int, Rat>> sparse;
  for (int j = 0; j < static_cast<int>(row.size()); ++j)
    if (row[j] != 0) sparse.emplace_back(j, row[j]);
  if (static_cast<int>(row.size()) != ncols_)
    throw DimensionMismatch("row length does not match accumulator width");
  return insert_sparse(std::move(sparse));
}

Subspace EchelonAccumulator::subspace() const {
  int r = rank();
  QMat m(r, ncols_);
  for (int i = 0; i < r; ++i)
    for (const auto& [c, v] : rows_[i]) m(i, c) = Rat(v);
  // Back-elimination and pivot normalization give the canonical form.
  for (int i = r - 1; i >= 0; --i) {
    int p = pivots_[i];
    Rat pv = m(i, p);
    for (int j = p; j < ncols_; ++j) m(i, j) /= pv;
    for (int k = 0; k < i; ++k) {
      Rat f = m(k, p);
      if (f == 0) continue;
      for (int j = p; j < ncols_; ++j) m(k, j) -= f * m(i, j);
    }
  }
  return Subspace{ncols_, std::move(m)};
}

Subspace row_space(const QMat& m) {
  EchelonAccumulator acc(m.cols());
  for (int i = 0; i < m.rows(); ++i) acc.insert(m.row(i));
  return acc.subspace();
}

Subspace nullspace(const QMat& m) {
  EchelonAccumulator acc(m.cols());
  for (int i = 0; i < m.rows(); ++i) acc.insert(m.row(i));
  Subspace r = acc.subspace();
  const std::vector<int>& piv = acc.pivot_columns();
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : piv) is_pivot[p] = true;

  EchelonAccumulator out(m.cols());
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::pair<int, Rat>> x;
    x.emplace_back(f, Rat(1));
    for (int i = 0; i < r.dim(); ++i)
      if (r.basis(i, f) != 0) x.emplace_back(piv[i], -r.basis(i, f));
    out.insert_sparse(std::move(x));
  }
  return out.subspace();
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw DimensionMismatch("ambient dimensions differ");
  // x lies in a row space exactly when it annihilates the nullspace of the
  // basis matrix, so the intersection is cut out by both sets of constraints.
  Subspace ka = nullspace(a.basis), kb = nullspace(b.basis);
  QMat constraints(ka.dim() + kb.dim(), a.ambient);
  for (int i = 0; i < ka.dim(); ++i)
    for (int j = 0; j < a.ambient; ++j) constraints(i, j) = ka.basis(i, j);
  for (int i = 0; i < kb.dim(); ++i)
    for (int j = 0; j < a.ambient; ++j) constraints(ka.dim() + i, j) = kb.basis(i, j);
  return nullspace(constraints);
}

int rank(const QMat& m) {
  EchelonAccumulator acc(m.cols());
  for (int i = 0; i < m.rows(); ++i) acc.insert(m.row(i));
  return acc.rank();
}

QMat inverse(const QMat& m) {
  if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
  int n = m.rows();
  EchelonAccumulator acc(2 * n);
  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<int, Rat>> row;
    for (int j = 0; j < n; ++j)
      if (m(i, j) != 0) row.emplace_back(j, m(i, j));
    row.emplace_back(n + i, Rat(1));
    acc.insert_sparse(std::move(row));
  }
  Subspace s = acc.subspace();
  for (int i = 0; i < n; ++i)
    if (i >= s.dim() || acc.pivot_columns()[i] != i) throw Error("matrix is singular");
  QMat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = s.basis(i, n + j);
  return out;
}

std::optional<QVec> solve(const QMat& m, const QVec& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw DimensionMismatch("right-hand side length mismatch");
  int n = m.cols();
  EchelonAccumulator acc(n + 1);
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<std::pair<int, Rat>> row;
    for (int j = 0; j < n; ++j)
      if (m(i, j) != 0) row.emplace_back(j, m(i, j));
    if (b[i] != 0) row.emplace_back(n, b[i]);
    acc.insert_sparse(std::move(row));
  }
  Subspace s = acc.subspace();
  QVec x(n, Rat(0));
  for (int i = 0; i < s.dim(); ++i) {
    int p = acc.pivot_columns()[i];
    if (p == n) return std::nullopt;  // pivot in the augmented column
    x[p] = s.basis(i, n);
  }
  return x;
}

Signature symmetric_signature(const QMat& sym) {
  if (sym.rows() != sym.cols()) throw Error("signature of a non-square matrix");
  int n = sym.rows();
  QMat m = sym;
  Signature sig;
  for (int k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      int swap = -1, mix = -1;
      for (int l = k + 1; l < n; ++l) {
        if (m(l, l) != 0 && swap < 0) swap = l;
        if (m(k, l) != 0 && mix < 0) mix = l;
      }
      if (swap >= 0) {
        for (int j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
        for (int i = 0; i < n; ++i) std::swap(m(i, k), m(i, swap));
      } else if (mix >= 0) {
        for (int j = 0; j < n; ++j) m(k, j) += m(mix, j);
        for (int i = 0; i < n; ++i) m(i, k) += m(i, mix);
      } else {
        ++sig.zero;
        continue;
      }
    }
    Rat d = m(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rat f = m(i, k) / d;
      for (int j = 0; j < n; ++j) m(i, j) -= f * m(k, j);
      for (int j = 0; j < n; ++j) m(j, i) -= f * m(j, k);
    }
    if (d > 0)
      ++sig.positive;
    else
      ++sig.negative;
  }
  return sig;
}

}  // namespace bialg
