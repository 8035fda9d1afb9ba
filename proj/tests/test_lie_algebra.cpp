#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bialg/json_io.hpp"
#include "bialg/multivector.hpp"
#include "bialg/poincare.hpp"

using namespace bialg;

namespace {

std::vector<std::vector<std::vector<Rat>>> zero_tensor(int n) {
  return std::vector(n, std::vector(n, std::vector<Rat>(n)));
}

// [H,X+] = X+, [H,X-] = -X-, [X+,X-] = 2H
AlgebraRef sl2() {
  auto c = zero_tensor(3);
  c[0][1][1] = 1;
  c[1][0][1] = -1;
  c[0][2][2] = -1;
  c[2][0][2] = 1;
  c[1][2][0] = 2;
  c[2][1][0] = -2;
  return LieAlgebra::build({"H", "X+", "X-"}, c);
}

}  // namespace

TEST_CASE("sl2 structure constants pass validation") {
  AlgebraRef g = sl2();
  CHECK(g->dim() == 3);
  // brute-force Jacobi oracle over all triples, independent of the built-in check
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        MultiVector ei = MultiVector::basis_element(g, {i});
        MultiVector ej = MultiVector::basis_element(g, {j});
        MultiVector ek = MultiVector::basis_element(g, {k});
        MultiVector jac = bracket(bracket(ei, ej), ek) + bracket(bracket(ej, ek), ei) +
                          bracket(bracket(ek, ei), ej);
        CHECK(jac.is_zero());
      }
}

TEST_CASE("antisymmetry violation is reported with indices") {
  auto c = zero_tensor(3);
  c[0][1][2] = 1;
  c[1][0][2] = 1;  // same sign: broken
  CHECK_THROWS_AS(LieAlgebra::build({"a", "b", "c"}, c), AntisymmetryViolation);
}

TEST_CASE("jacobi violation is detected") {
  auto c = zero_tensor(3);
  // [e0,e1] = e2 and [e1,e2] = e1 leave a residual -e2 in the cyclic sum
  c[0][1][2] = 1;
  c[1][0][2] = -1;
  c[1][2][1] = 1;
  c[2][1][1] = -1;
  CHECK_THROWS_AS(LieAlgebra::build({"a", "b", "c"}, c), JacobiViolation);
}

TEST_CASE("abelian algebra with full-V grading") {
  auto c = zero_tensor(4);
  Grading g{{0, 1, 2, 3}, {}};
  AlgebraRef a = LieAlgebra::build({"v0", "v1", "v2", "v3"}, c, g);
  CHECK(a->graded());
  CHECK(a->bracket_basis(0, 1).empty());
}

TEST_CASE("grading violations are rejected") {
  auto c = zero_tensor(2);
  c[0][1][0] = 1;  // [V,V] != 0
  c[1][0][0] = -1;
  CHECK_THROWS_AS(LieAlgebra::build({"v0", "v1"}, c, Grading{{0, 1}, {}}),
                  GradingViolation);
}

TEST_CASE("bracket matches a 2x2 matrix commutator oracle") {
  // sl(2) as real matrices: H = diag(1/2,-1/2), X+ = E12, X- = E21. The
  // commutator table computed by hand from those matrices is exactly the
  // structure constants used in sl2().
  AlgebraRef g = sl2();
  MultiVector h = MultiVector::basis_element(g, {0});
  MultiVector xp = MultiVector::basis_element(g, {1});
  MultiVector xm = MultiVector::basis_element(g, {2});
  CHECK(bracket(h, xp) == xp);
  CHECK(bracket(h, xm) == -xm);
  CHECK(bracket(xp, xm) == h.scaled(Scalar(2)));
  CHECK(bracket(xp, xp).is_zero());  // antisymmetry on equal arguments

  MultiVector mixed = h.scaled(Scalar::parse("a")) + xp.scaled(Scalar(Rat(1, 2)));
  CHECK(bracket(mixed, mixed).is_zero());
}

TEST_CASE("semidirect product builds the 10-dim inhomogeneous algebra") {
  Inhomogeneous a = make_inhomogeneous(1, 3);
  CHECK(a.alg->dim() == 10);
  CHECK(a.alg->graded());
  // translations commute
  CHECK(bracket(a.e(0), a.e(2)).is_zero());
  // restriction to the rotation block reproduces the o(1,3) table:
  // [Om_{jk}, Om_{kl}] closes back into the Om span with metric coefficients
  MultiVector lhs = bracket(a.omega_gen(0, 1), a.omega_gen(1, 2));
  CHECK(lhs == a.omega_gen(0, 2).scaled(Scalar(-1)));
}

TEST_CASE("semidirect rejects non-representations") {
  AlgebraRef h = sl2();
  std::vector<QMat> rep(3, QMat(2, 2));
  rep[0](0, 0) = 1;  // arbitrary junk: not a homomorphism
  rep[1](0, 1) = 1;
  rep[2](1, 0) = 1;
  CHECK_THROWS_AS(LieAlgebra::semidirect(rep, h, 2), NotARepresentation);
}

TEST_CASE("semidirect with trivial h gives an abelian algebra") {
  auto c = zero_tensor(0);
  AlgebraRef h = LieAlgebra::build({}, c);
  AlgebraRef a = LieAlgebra::semidirect({}, h, 3);
  CHECK(a->dim() == 3);
  CHECK(a->bracket_basis(0, 2).empty());
}

TEST_CASE("action matrices form a representation on every degree") {
  Inhomogeneous a = make_inhomogeneous(1, 2);
  for (int k = 1; k <= 3; ++k) {
    for (int x = 0; x < a.alg->dim(); ++x)
      for (int y = x + 1; y < a.alg->dim(); ++y) {
        QMat ax = action_matrix_basis(a.alg, x, k);
        QMat ay = action_matrix_basis(a.alg, y, k);
        QMat commutator = ax * ay - ay * ax;
        MultiVector br(a.alg, 1);
        for (const auto& [l, c] : a.alg->bracket_basis(x, y))
          br += MultiVector::basis_element(a.alg, {l}).scaled(Scalar(c));
        CHECK(action_matrix(a.alg, br, k) == commutator);
      }
  }
}

TEST_CASE("action matrix special cases") {
  Inhomogeneous a = make_inhomogeneous(1, 3);
  // H acts on the light-cone vectors with eigenvalues +1 / -1
  MultiVector h = a.named_element("H");
  CHECK(act(h, a.named_element("e+")) == a.named_element("e+"));
  CHECK(act(h, a.named_element("e-")) == -a.named_element("e-"));
  CHECK(action_matrix(a.alg, MultiVector(a.alg, 1), 2).is_zero());
  CHECK_THROWS_AS(action_matrix_basis(a.alg, 0, 4), UnsupportedDegree);
}

TEST_CASE("metric type validates signature and inverse") {
  Metric m = Metric::diagonal(1, 3);
  CHECK(m.matrix() * m.inverse_matrix() == QMat::identity(4));
  QMat hyper(2, 2);
  hyper(0, 1) = hyper(1, 0) = 1;
  Metric off = Metric::from_matrix(hyper, 1, 1);
  CHECK(off.p() == 1);
  CHECK_THROWS_AS(Metric::from_matrix(hyper, 2, 0), BadSignature);
  QVec x{Rat(1), Rat(2)}, y{Rat(3), Rat(5)};
  CHECK(off.apply(x, y) == Rat(11));  // x^T [[0,1],[1,0]] y = 5 + 6
}

TEST_CASE("algebra json round-trip") {
  Inhomogeneous a = make_inhomogeneous(1, 2);
  nlohmann::json doc = algebra_to_json(a.alg);
  AlgebraRef back = algebra_from_json(doc);
  CHECK(back->dim() == a.alg->dim());
  CHECK(back->labels() == a.alg->labels());
  for (int i = 0; i < back->dim(); ++i)
    for (int j = i + 1; j < back->dim(); ++j)
      CHECK(back->bracket_basis(i, j) == a.alg->bracket_basis(i, j));
  CHECK(back->graded());
}

TEST_CASE("algebra json loader accepts omitted brackets and rejects junk") {
  nlohmann::json doc = {{"dim", 2}, {"labels", {"x", "y"}}};
  AlgebraRef a = algebra_from_json(doc);
  CHECK(a->bracket_basis(0, 1).empty());

  nlohmann::json bad = {{"dim", 2},
                        {"labels", {"x", "y"}},
                        {"brackets", {{{"i", 0}, {"j", 5}, {"coeffs", {{"0", "1"}}}}}}};
  CHECK_THROWS_AS(algebra_from_json(bad), ParseError);
}
