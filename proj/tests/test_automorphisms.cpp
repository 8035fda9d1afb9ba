#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bialg/automorphisms.hpp"
#include "bialg/catalog.hpp"

using namespace bialg;

namespace {

MultiVector random_mv(const AlgebraRef& alg, int degree, std::mt19937_64& rng,
                      int terms = 4) {
  std::uniform_int_distribution<int> idx(0, alg->dim() - 1);
  std::uniform_int_distribution<int> num(-5, 5);
  MultiVector out(alg, degree);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> indices(degree);
    for (int& i : indices) i = idx(rng);
    out.add_term(std::span<const int>(indices), Scalar(Rat(num(rng))));
  }
  return out;
}

MultiVector random_v(const Inhomogeneous& a, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  MultiVector out(a.alg, 1);
  for (int j = 0; j < a.dim_v(); ++j) out += a.e(j).scaled(Scalar(Rat(num(rng))));
  return out;
}

}  // namespace

TEST_CASE("translation acts by the three-term expansion") {
  Inhomogeneous a = make_inhomogeneous(1, 3);
  std::mt19937_64 rng(211);
  for (int trial = 0; trial < 25; ++trial) {
    MultiVector v = random_v(a, rng);
    MultiVector r = random_mv(a.alg, 2, rng);
    AutoMove move = AutoMove::translate(a, v);
    // r + (-v) r + (v (x) v) r, with (-v) the derivation action of -v and the
    // quadratic term hitting both slots
    MultiVector linear = -act(v, r);
    MultiVector quadratic(a.alg, 2);
    for (const auto& [t, c] : r.terms()) {
      MultiVector left = bracket(v, MultiVector::basis_element(a.alg, {t.idx[0]}));
      MultiVector right = bracket(v, MultiVector::basis_element(a.alg, {t.idx[1]}));
      quadratic += wedge(left, right).scaled(c);
    }
    CHECK(apply(move, r) == r + linear + quadratic);
  }
  // identity move
  AutoMove zero = AutoMove::translate(a, MultiVector(a.alg, 1));
  MultiVector r = random_mv(a.alg, 2, rng);
  CHECK(apply(zero, r) == r);
}

TEST_CASE("the translated triangular element matches the closed form") {
  // (-v)c for c = JX+ ^ X+ expands over X+ and JX+ with light-cone weights
  Inhomogeneous a = make_inhomogeneous(1, 3);
  auto n = [&](const char* s) { return a.named_element(s); };
  MultiVector c = wedge(n("JX+"), n("X+"));
  Rat vp(5), vm(7), v1(11), v2(13);
  MultiVector v = n("e+").scaled(Scalar(vp)) + n("e-").scaled(Scalar(vm)) +
                  a.e(1).scaled(Scalar(v1)) + a.e(2).scaled(Scalar(v2));
  MultiVector minus_vc = -act(v, c);
  MultiVector expected =
      wedge(n("X+"), a.e(2).scaled(Scalar(2 * vm)) + n("e+").scaled(Scalar(v2))) +
      wedge(n("JX+"), a.e(1).scaled(Scalar(2 * vm)) + n("e+").scaled(Scalar(v1)));
  CHECK(minus_vc == expected);
}

TEST_CASE("reflection flips the imaginary generators") {
  Inhomogeneous a = make_inhomogeneous(1, 3);
  AutoMove refl = AutoMove::reflection(a, 2);  // e2 -> -e2
  auto image = [&](const char* name) { return apply(refl, a.named_element(name)); };
  CHECK(image("JX+") == -a.named_element("JX+"));
  CHECK(image("JX-") == -a.named_element("JX-"));
  CHECK(image("JH") == -a.named_element("JH"));
  CHECK(image("H") == a.named_element("H"));
  CHECK(image("X+") == a.named_element("X+"));
  CHECK(image("X-") == a.named_element("X-"));
}

TEST_CASE("moves compose and invert exactly") {
  Inhomogeneous a = make_inhomogeneous(1, 3);
  std::mt19937_64 rng(223);
  std::vector<AutoMove> moves;
  moves.push_back(AutoMove::translate(a, random_v(a, rng)));
  moves.push_back(AutoMove::nilpotent_flow(a, a.named_element("X+"), Scalar(Rat(3, 2))));
  moves.push_back(AutoMove::dilation(a, Scalar(Rat(5, 7))));
  moves.push_back(AutoMove::diagonal_flow(a, a.named_element("H"), Rat(2)));
  moves.push_back(AutoMove::rotation(a, a.named_element("JH"), Rat(3, 5), Rat(4, 5)));
  moves.push_back(AutoMove::reflection(a, 3));
  for (const AutoMove& move : moves) {
    for (int degree : {1, 2, 3}) {
      MultiVector r = random_mv(a.alg, degree, rng);
      CHECK(apply(move.inverse(), apply(move, r)) == r);
    }
  }
  // translations are abelian: successive translations add
  MultiVector v = random_v(a, rng), w = random_v(a, rng);
  MultiVector r = random_mv(a.alg, 2, rng);
  CHECK(apply(AutoMove::translate(a, v), apply(AutoMove::translate(a, w), r)) ==
        apply(AutoMove::translate(a, v + w), r));
}

TEST_CASE("every move preserves the bracket on random bivectors") {
  Inhomogeneous a = make_inhomogeneous(1, 3);
  std::mt19937_64 rng(227);
  std::vector<AutoMove> moves;
  moves.push_back(AutoMove::translate(a, random_v(a, rng)));
  moves.push_back(AutoMove::nilpotent_flow(a, a.named_element("JX+"), Scalar(Rat(-2, 3))));
  moves.push_back(AutoMove::dilation(a, Scalar(Rat(3))));
  moves.push_back(AutoMove::diagonal_flow(a, a.named_element("H"), Rat(1, 2)));
  moves.push_back(AutoMove::rotation(a, a.named_element("JH"), Rat(5, 13), Rat(12, 13)));
  moves.push_back(AutoMove::reflection(a, 2));
  for (const AutoMove& move : moves)
    for (int trial = 0; trial < 50; ++trial)
      CHECK(gcybe_equivariance_residual(move, random_mv(a.alg, 2, rng)).is_zero());
}

TEST_CASE("translations keep the invariant class of a stabilizer family") {
  Inhomogeneous a = make_inhomogeneous(1, 3);
  std::vector<MultiVector> inv{a.named_element("Omega")};
  MultiVector b = a.named_element("b_e0");
  std::mt19937_64 rng(229);
  for (int trial = 0; trial < 5; ++trial) {
    AutoMove move = AutoMove::translate(a, random_v(a, rng));
    GcybeVerdict v = gcybe_check(apply(move, b), inv);
    CHECK(v.in_span);
    CHECK(v.coords[0] == Scalar(-1));
  }
}

TEST_CASE("move validation") {
  Inhomogeneous a = make_inhomogeneous(1, 3);
  CHECK_THROWS_AS(AutoMove::translate(a, a.named_element("H")), InvalidMove);
  CHECK_THROWS_AS(AutoMove::nilpotent_flow(a, a.named_element("H"), Scalar(1)),
                  InvalidMove);
  CHECK_THROWS_AS(AutoMove::dilation(a, Scalar(0)), InvalidMove);
  CHECK_THROWS_AS(AutoMove::diagonal_flow(a, a.named_element("H"), Rat(-2)), InvalidMove);
  CHECK_THROWS_AS(AutoMove::diagonal_flow(a, a.named_element("JH"), Rat(2)), InvalidMove);
  CHECK_THROWS_AS(AutoMove::rotation(a, a.named_element("JH"), Rat(1, 2), Rat(1, 2)),
                  InvalidMove);
  CHECK_THROWS_AS(AutoMove::rotation(a, a.named_element("H"), Rat(3, 5), Rat(4, 5)),
                  InvalidMove);
  CHECK_THROWS_AS(AutoMove::reflection(a, 7), InvalidMove);
  AutoMove symbolic = AutoMove::dilation(a, Scalar::parse("lambda"));
  CHECK_THROWS_AS(symbolic.inverse(), InvalidMove);
}

TEST_CASE("diagonal flow scales the stable frame by integer powers") {
  Inhomogeneous a = make_inhomogeneous(1, 3);
  AutoMove flow = AutoMove::diagonal_flow(a, a.named_element("H"), Rat(9, 2));
  CHECK(apply(flow, a.named_element("e+")) ==
        a.named_element("e+").scaled(Scalar(Rat(9, 2))));
  CHECK(apply(flow, a.named_element("e-")) ==
        a.named_element("e-").scaled(Scalar(Rat(2, 9))));
  CHECK(apply(flow, a.e(1)) == a.e(1));
  CHECK(apply(flow, a.named_element("X+")) ==
        a.named_element("X+").scaled(Scalar(Rat(9, 2))));
}

TEST_CASE("normalization pipeline recovers a translated row-2 form exactly") {
  Inhomogeneous a = make_inhomogeneous(1, 3);
  auto n = [&](const char* s) { return a.named_element(s); };
  MultiVector c = wedge(n("JX+"), n("X+"));
  MultiVector r0 = c + n("b_e+").scaled(Scalar(Rat(5, 2))) +
                   wedge(n("e+"), n("JH")).scaled(Scalar(-3));
  std::mt19937_64 rng(233);
  for (int trial = 0; trial < 5; ++trial) {
    MultiVector v = random_v(a, rng);
    MultiVector r = apply(AutoMove::translate(a, v), r0);
    NormalizeResult result = normalize_row2(a, r);
    REQUIRE(!result.obstruction.has_value());
    CHECK(result.final_form == "row2");
    CHECK(result.r == r0);
  }
}

TEST_CASE("normalization pipeline: z+ = 0 branch stops at the aligned form") {
  Inhomogeneous a = make_inhomogeneous(1, 3);
  auto n = [&](const char* s) { return a.named_element(s); };
  MultiVector c = wedge(n("JX+"), n("X+"));
  // x1 = -y2 (balanced), z+ = 0: the aligned (row-3 type) family
  MultiVector r = c + wedge(n("X+"), a.e(1)).scaled(Scalar(3)) -
                  wedge(n("JX+"), a.e(2)).scaled(Scalar(3)) +
                  wedge(n("H"), n("e+")).scaled(Scalar(3));
  NormalizeResult result = normalize_row2(a, r);
  CHECK(result.final_form == "row3-family");
  CHECK(result.r == r);  // already normal: idempotent
  CHECK(result.steps.empty());
}

TEST_CASE("normalization pipeline: a rational rotation aligns the transverse pair") {
  Inhomogeneous a = make_inhomogeneous(1, 3);
  auto n = [&](const char* s) { return a.named_element(s); };
  MultiVector c = wedge(n("JX+"), n("X+"));
  // x1 = y2 = -7/2 and (x2, y1) = (-12, 12): the pair (u, w) = (-7, -24) has
  // length 25 and a rational half angle, so one rotation reaches w = 0 and
  // the result sits in the row-4 family
  MultiVector x = a.e(1).scaled(Scalar(Rat(-7, 2))) + a.e(2).scaled(Scalar(-12));
  MultiVector y = a.e(1).scaled(Scalar(12)) + a.e(2).scaled(Scalar(Rat(-7, 2)));
  MultiVector r = c + wedge(n("X+"), x) + wedge(n("JX+"), y);
  NormalizeResult result = normalize_row2(a, r);
  REQUIRE(!result.obstruction.has_value());
  CHECK(result.final_form == "row4-family");
  CHECK(result.steps.size() == 1);
  // balanced: the X+ and JX+ legs carry equal e1/e2 coefficients, no e2/e1 mix
  GradedComponents2 parts = split2(result.r);
  MultiVector bx = contract(a.named_covector("X+"), parts.b);
  MultiVector by = contract(a.named_covector("JX+"), parts.b);
  CHECK(pairing(a.named_covector("e2"), bx).is_zero());
  CHECK(pairing(a.named_covector("e1"), by).is_zero());
  CHECK(pairing(a.named_covector("e1"), bx) == pairing(a.named_covector("e2"), by));

  MultiVector plain = c + (wedge(n("X+"), a.e(1)) + wedge(n("JX+"), a.e(2)))
                              .scaled(Scalar(5));
  CHECK(normalize_row2(a, plain).final_form == "row4-family");
}

TEST_CASE("normalization pipeline reports unreachable exact rotations") {
  Inhomogeneous a = make_inhomogeneous(1, 3);
  auto n = [&](const char* s) { return a.named_element(s); };
  MultiVector c = wedge(n("JX+"), n("X+"));
  // u = 0, w = 1: would need a 90-degree half angle, which is irrational
  MultiVector r = c + wedge(n("X+"), a.e(2)).scaled(Scalar(Rat(1, 2))) -
                  wedge(n("JX+"), a.e(1)).scaled(Scalar(Rat(1, 2)));
  NormalizeResult result = normalize_row2(a, r);
  CHECK(result.obstruction.has_value());
  CHECK(result.final_form == "b1");
  CHECK_THROWS_AS(normalize_row2(a, wedge(n("JH"), n("H"))), WrongC);
}

TEST_CASE("generic stabilizer perturbations absorb the transverse part") {
  // with x = e0 and X = M3 (no eigenvalue 1 on V, none equal 2 on the
  // bivectors of V), any commuting a-part is removed by one translation
  Inhomogeneous a = make_inhomogeneous(1, 3);
  MultiVector x = a.e(0);
  MultiVector gen = a.named_element("M3");
  REQUIRE(act(gen, x).is_zero());
  MultiVector b = a.named_element("b_e0") + wedge(x, gen);

  // eigenvalue checks, over Q: M3 - 1 and the induced map - 2 are invertible
  QMat m1 = action_matrix(a.alg, gen, 1);
  QMat on_v(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) on_v(i, j) = m1(i, j);
  QMat shifted = on_v;
  for (int i = 0; i < 4; ++i) shifted(i, i) -= 1;
  CHECK(rank(shifted) == 4);

  // solve [a_part, b] = 0 over the 6-dim bivector block of V
  RealizedModule l2v = realize(a.alg, ModuleSpec::lambda_v(2));
  std::vector<MultiVector> basis;
  QMat system(lambda_dim(10, 3), l2v.dim);
  for (int col = 0; col < l2v.dim; ++col) {
    QVec unit(l2v.dim, Rat(0));
    unit[col] = 1;
    MultiVector e = from_module_coordinates(a.alg, l2v, unit);
    basis.push_back(e);
    QVec coords = schouten_bracket(e, b).rational_coordinates();
    for (int m = 0; m < system.rows(); ++m) system(m, col) = coords[m];
  }
  Subspace commuting = nullspace(system);
  CHECK(commuting.dim() > 0);
  for (int i = 0; i < commuting.dim(); ++i) {
    MultiVector a_part(a.alg, 2);
    for (int col = 0; col < l2v.dim; ++col)
      a_part += basis[col].scaled(Scalar(commuting.basis(i, col)));
    MultiVector r = a_part + b;
    // the commuting a lies in x ^ V and one translation removes it
    QMat sys2(lambda_dim(10, 2), 4);
    QVec rhs = a_part.rational_coordinates();
    for (int v = 0; v < 4; ++v) {
      MultiVector dir = split2(apply(AutoMove::translate(a, a.e(v)), r)).a - a_part;
      QVec c2 = dir.rational_coordinates();
      for (int m = 0; m < sys2.rows(); ++m) sys2(m, v) = -c2[m];
    }
    auto sol = solve(sys2, rhs);
    REQUIRE(sol.has_value());
    MultiVector v(a.alg, 1);
    for (int j = 0; j < 4; ++j) v += a.e(j).scaled(Scalar((*sol)[j]));
    CHECK(apply(AutoMove::translate(a, v), r) == b);
  }
}

TEST_CASE("scaling flows realize the parameter reduction of the mixed rows") {
  // the H-flow with multiplier mu scales c by mu^2 and the mixed part by mu,
  // so together with an overall rescaling one parameter of the pair family
  // is normalized away
  Inhomogeneous a = make_inhomogeneous(1, 3);
  auto n = [&](const char* s) { return a.named_element(s); };
  Rat beta1(9, 4), beta2(-3);
  MultiVector c = wedge(n("JX+"), n("X+"));
  MultiVector r = c + n("b_e+").scaled(Scalar(beta1)) +
                  wedge(n("e+"), n("JH")).scaled(Scalar(beta2));
  AutoMove flow = AutoMove::diagonal_flow(a, n("H"), beta1);
  MultiVector moved = apply(flow, r).scaled(Scalar(Rat(1) / (beta1 * beta1)));
  MultiVector expected = c + n("b_e+") +
                         wedge(n("e+"), n("JH")).scaled(Scalar(beta2 / beta1));
  CHECK(moved == expected);
}
