#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bialg/linalg.hpp"

using namespace bialg;

namespace {

QMat from_rows(const std::vector<std::vector<int>>& rows) {
  QMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = Rat(rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("reduced echelon form is canonical") {
  QMat m = from_rows({{2, 4, 6}, {1, 2, 4}, {0, 0, 2}});
  Subspace s = row_space(m);
  CHECK(s.dim() == 2);
  CHECK(s.basis(0, 0) == 1);
  CHECK(s.basis(0, 1) == 2);
  CHECK(s.basis(0, 2) == 0);
  CHECK(s.basis(1, 0) == 0);
  CHECK(s.basis(1, 1) == 0);
  CHECK(s.basis(1, 2) == 1);

  // same space from permuted generators gives bitwise the same basis
  QMat m2 = from_rows({{0, 0, 1}, {1, 2, 3}});
  CHECK(row_space(m2) == s);
}

TEST_CASE("nullspace times matrix vanishes and dimensions add up") {
  QMat m = from_rows({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}});
  Subspace ns = nullspace(m);
  CHECK(rank(m) + ns.dim() == 4);
  for (int i = 0; i < ns.dim(); ++i)
    for (int r = 0; r < m.rows(); ++r) {
      Rat acc = 0;
      for (int c = 0; c < 4; ++c) acc += m(r, c) * ns.basis(i, c);
      CHECK(acc == 0);
    }
}

TEST_CASE("randomized: rank + nullity and containment invariants") {
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 25; ++trial) {
    int rows = 3 + static_cast<int>(rng() % 5), cols = 3 + static_cast<int>(rng() % 5);
    QMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = Rat(d(rng));
    Subspace rs = row_space(m), ns = nullspace(m);
    CHECK(rs.dim() + ns.dim() == cols);
    for (int i = 0; i < rows; ++i) CHECK(rs.contains_vector(m.row(i)));
  }
}

TEST_CASE("solve and inverse") {
  QMat m = from_rows({{2, 1}, {1, 1}});
  QMat inv = inverse(m);
  CHECK(m * inv == QMat::identity(2));

  auto x = solve(m, {Rat(3), Rat(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);

  QMat sing = from_rows({{1, 2}, {2, 4}});
  CHECK_THROWS_AS(inverse(sing), Error);
  CHECK(!solve(sing, {Rat(1), Rat(0)}).has_value());
}

TEST_CASE("subspace intersection") {
  // span{(1,0,0),(0,1,0)} and span{(0,1,0),(0,0,1)} meet in span{(0,1,0)}
  Subspace a = row_space(from_rows({{1, 0, 0}, {0, 1, 0}}));
  Subspace b = row_space(from_rows({{0, 1, 0}, {0, 0, 1}}));
  Subspace i = intersect(a, b);
  CHECK(i.dim() == 1);
  CHECK(i.basis(0, 0) == 0);
  CHECK(i.basis(0, 1) == 1);
  CHECK(i.basis(0, 2) == 0);
}

TEST_CASE("symmetric signature by congruent diagonalization") {
  QMat g = from_rows({{0, 1}, {1, 0}});  // hyperbolic plane: (1,1)
  Signature s = symmetric_signature(g);
  CHECK(s.positive == 1);
  CHECK(s.negative == 1);
  CHECK(s.zero == 0);

  QMat lorentz(4, 4);
  for (int i = 0; i < 4; ++i) lorentz(i, i) = i == 0 ? Rat(1) : Rat(-1);
  Signature l = symmetric_signature(lorentz);
  CHECK(l.positive == 1);
  CHECK(l.negative == 3);
}
