#include "bialg/automorphisms.hpp"

#include <sstream>

namespace bialg {

namespace {

SMat ad_matrix(const AlgebraRef& alg, const MultiVector& x) {
  int n = alg->dim();
  SMat m(n, n);
  for (const auto& [t, c] : x.terms())
    for (int j = 0; j < n; ++j)
      for (const auto& [k, v] : alg->bracket_basis(t.idx[0], j)) m(k, j) += c * Scalar(v);
  return m;
}

QMat ad_matrix_rational(const AlgebraRef& alg, const MultiVector& x) {
  if (!x.is_rational()) throw InvalidMove("flow generator must have rational coordinates");
  return to_rational(ad_matrix(alg, x));
}

}  // namespace

AutoMove AutoMove::translate(const Inhomogeneous& a, const MultiVector& v) {
  if (v.degree() != 1 || v.dual()) throw InvalidMove("translation vector must have degree 1");
  for (const auto& [t, c] : v.terms())
    if (!a.alg->in_v(t.idx[0]))
      throw InvalidMove("translation vector must lie in the abelian ideal");
  int n = a.alg->dim();
  SMat ad = ad_matrix(a.alg, v);
  SMat fwd = SMat::identity(n), inv = SMat::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      fwd(i, j) -= ad(i, j);
      inv(i, j) += ad(i, j);
    }
  return AutoMove(Kind::Translate, a.alg, std::move(fwd), std::move(inv),
                  "translate(" + v.str() + ")");
}

AutoMove AutoMove::nilpotent_flow(const Inhomogeneous& a, const MultiVector& x,
                                  const Scalar& t) {
  QMat ad = ad_matrix_rational(a.alg, x);
  int n = ad.rows();
  // nilpotency check: some power at most dim must vanish
  QMat power = ad;
  int steps = 1;
  while (!power.is_zero() && steps <= n) {
    power = power * ad;
    ++steps;
  }
  if (!power.is_zero()) throw InvalidMove("generator is not nilpotent");

  auto exp_series = [&](const Scalar& time) {
    SMat out = SMat::identity(n);
    SMat term = SMat::identity(n);
    Rat factorial = 1;
    for (int i = 1; i < steps; ++i) {
      term = term * to_symbolic(ad);
      factorial *= i;
      SMat scaled(n, n);
      Scalar coeff = time.pow(i).div_rat(factorial);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) scaled(r, c) = term(r, c) * coeff;
      out = out + scaled;
    }
    return out;
  };
  return AutoMove(Kind::NilpotentFlow, a.alg, exp_series(t), exp_series(-t),
                  "nilpotent_flow(" + x.str() + ", t=" + t.str() + ")");
}

AutoMove AutoMove::dilation(const Inhomogeneous& a, const Scalar& lambda) {
  if (lambda.is_zero()) throw InvalidMove("dilation factor must be nonzero");
  int n = a.alg->dim();
  SMat fwd = SMat::identity(n);
  std::optional<SMat> inv;
  for (int i = 0; i < a.dim_v(); ++i) fwd(i, i) = lambda;
  if (lambda.is_rational()) {
    SMat m = SMat::identity(n);
    for (int i = 0; i < a.dim_v(); ++i) m(i, i) = Scalar(Rat(1) / lambda.rational());
    inv = std::move(m);
  }
  return AutoMove(Kind::Dilation, a.alg, std::move(fwd), std::move(inv),
                  "dilation(" + lambda.str() + ")");
}

AutoMove AutoMove::diagonal_flow(const Inhomogeneous& a, const MultiVector& x,
                                 const Rat& mu) {
  if (mu <= 0) throw InvalidMove("diagonal flow needs a positive rational multiplier");
  QMat ad = ad_matrix_rational(a.alg, x);
  int n = ad.rows();
  // Integer eigenvalues are bounded by the max absolute row sum.
  Rat bound = 0;
  for (int i = 0; i < n; ++i) {
    Rat row = 0;
    for (int j = 0; j < n; ++j) row += abs(ad(i, j));
    if (row > bound) bound = row;
  }
  Int bq;
  mpz_cdiv_q(bq.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  long b = mpz_get_si(bq.get_mpz_t());

  QMat basis(n, n);
  std::vector<long> eigenvalue_of_column;
  int filled = 0;
  for (long ev = -b; ev <= b && filled < n; ++ev) {
    QMat shifted = ad;
    for (int i = 0; i < n; ++i) shifted(i, i) -= Rat(ev);
    Subspace kernel = nullspace(shifted);
    for (int r = 0; r < kernel.dim(); ++r) {
      if (filled >= n) throw InvalidMove("eigenspace dimensions exceed the dimension");
      for (int i = 0; i < n; ++i) basis(i, filled) = kernel.basis(r, i);
      eigenvalue_of_column.push_back(ev);
      ++filled;
    }
  }
  if (filled != n)
    throw InvalidMove("generator is not diagonalizable over Q with integer eigenvalues");

  QMat scaled = basis;
  for (int col = 0; col < n; ++col) {
    long ev = eigenvalue_of_column[col];
    Rat factor = 1;
    for (long i = 0; i < (ev > 0 ? ev : -ev); ++i) factor *= mu;
    if (ev < 0) factor = Rat(1) / factor;
    for (int i = 0; i < n; ++i) scaled(i, col) *= factor;
  }
  QMat binv = bialg::inverse(basis);
  QMat fwd = scaled * binv;

  QMat scaled_inv = basis;
  for (int col = 0; col < n; ++col) {
    long ev = eigenvalue_of_column[col];
    Rat factor = 1;
    for (long i = 0; i < (ev > 0 ? ev : -ev); ++i) factor *= mu;
    if (ev > 0) factor = Rat(1) / factor;
    for (int i = 0; i < n; ++i) scaled_inv(i, col) *= factor;
  }
  QMat bwd = scaled_inv * binv;
  return AutoMove(Kind::DiagonalFlow, a.alg, to_symbolic(fwd), to_symbolic(bwd),
                  "diagonal_flow(" + x.str() + ", mu=" + rat_str(mu) + ")");
}

AutoMove AutoMove::rotation(const Inhomogeneous& a, const MultiVector& x, const Rat& c,
                            const Rat& s) {
  if (c * c + s * s != 1) throw InvalidMove("(c, s) must be a rational circle point");
  QMat ad = ad_matrix_rational(a.alg, x);
  QMat ad2 = ad * ad;
  QMat ad3 = ad2 * ad;
  int n = ad.rows();
  QMat neg = ad;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) neg(i, j) = -neg(i, j);
  if (!(ad3 == neg)) throw InvalidMove("rotation needs (ad_x)^3 = -ad_x");

  auto circle = [&](const Rat& cc, const Rat& ss) {
    QMat m = QMat::identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) += ss * ad(i, j) + (1 - cc) * ad2(i, j);
    return m;
  };
  return AutoMove(Kind::Rotation, a.alg, to_symbolic(circle(c, s)),
                  to_symbolic(circle(c, -s)),
                  "rotation(" + x.str() + ", c=" + rat_str(c) + ", s=" + rat_str(s) + ")");
}

AutoMove AutoMove::reflection(const Inhomogeneous& a, int v_index) {
  if (v_index < 0 || v_index >= a.dim_v())
    throw InvalidMove("reflection index outside the translation block");
  int n = a.alg->dim();
  SMat m(n, n);
  for (int j = 0; j < a.dim_v(); ++j) m(j, j) = Scalar(j == v_index ? -1 : 1);
  for (int j = 0; j < a.dim_v(); ++j)
    for (int k = j + 1; k < a.dim_v(); ++k) {
      int idx = a.omega_index(j, k);
      m(idx, idx) = Scalar((j == v_index) != (k == v_index) ? -1 : 1);
    }
  SMat copy = m;
  return AutoMove(Kind::Reflection, a.alg, std::move(m), std::move(copy),
                  "reflection(e" + std::to_string(v_index) + ")");
}

AutoMove AutoMove::inverse() const {
  if (!inv_) throw InvalidMove("move is not exactly invertible");
  return AutoMove(kind_, alg_, *inv_, mat_, "inverse of " + description_);
}

MultiVector apply(const AutoMove& move, const MultiVector& u) {
  if (u.algebra() != move.algebra())
    throw AlgebraMismatch("move and multivector use different algebras");
  return apply_linear(move.matrix(), u);
}

MultiVector gcybe_equivariance_residual(const AutoMove& move, const MultiVector& r) {
  MultiVector moved = apply(move, r);
  return schouten_bracket(moved, moved) - apply(move, schouten_bracket(r, r));
}

namespace {

struct Row2State {
  Rat scale;  // c = scale * JX+ ^ X+
  // components of b(X+*), b(JX+*) in the light-cone frame
  Rat xp, xm, x1, x2;
  Rat yp, ym, y1, y2;
  Rat zp;          // e+ component of b(JH*)
  MultiVector a_part;
};

Rat frame_component(const Inhomogeneous& a, const MultiVector& v, const char* name) {
  return pairing(a.named_covector(name), v).rational();
}

Row2State read_state(const Inhomogeneous& a, const MultiVector& r) {
  if (!r.is_rational()) throw WrongC("normalization works on rational coefficients");
  GradedComponents2 parts = split2(r);
  MultiVector c_ref = wedge(a.named_element("JX+"), a.named_element("X+"));

  Row2State st{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, parts.a};
  // c must be a nonzero multiple of the reference
  Rat scale = 0;
  for (const auto& [t, coeff] : parts.c.terms()) {
    Scalar ref = c_ref.coeff({t.idx[0], t.idx[1]});
    if (ref.is_zero()) throw WrongC("c-part is not a multiple of JX+ ^ X+");
    scale = coeff.rational() / ref.rational();
    break;
  }
  if (scale == 0 || !(parts.c == c_ref.scaled(Scalar(scale))))
    throw WrongC("c-part is not a nonzero multiple of JX+ ^ X+");
  st.scale = scale;

  MultiVector x = contract(a.named_covector("X+"), parts.b);
  MultiVector y = contract(a.named_covector("JX+"), parts.b);
  MultiVector bh = contract(a.named_covector("H"), parts.b);
  MultiVector bjh = contract(a.named_covector("JH"), parts.b);
  MultiVector bxm = contract(a.named_covector("X-"), parts.b);
  MultiVector bjxm = contract(a.named_covector("JX-"), parts.b);
  if (!bxm.is_zero() || !bjxm.is_zero())
    throw WrongC("b has X-* or JX-* components; not in the cocycle family");

  st.xp = frame_component(a, x, "e+");
  st.xm = frame_component(a, x, "e-");
  st.x1 = frame_component(a, x, "e1");
  st.x2 = frame_component(a, x, "e2");
  st.yp = frame_component(a, y, "e+");
  st.ym = frame_component(a, y, "e-");
  st.y1 = frame_component(a, y, "e1");
  st.y2 = frame_component(a, y, "e2");
  st.zp = frame_component(a, bjh, "e+");
  if (st.xm != 0 || st.ym != 0)
    throw WrongC("b has e- components on X+*/JX+*; not in the cocycle family");
  if (frame_component(a, bjh, "e-") != 0 || frame_component(a, bjh, "e1") != 0 ||
      frame_component(a, bjh, "e2") != 0)
    throw WrongC("b(JH*) is not proportional to e+");
  MultiVector expected_bh =
      a.named_element("e+").scaled(Scalar(Rat(st.x1 - st.y2) / 2));
  if (!(bh == expected_bh)) throw WrongC("b(H*) must be (x1 - y2)/2 e+");
  return st;
}

// Rational square root when it exists.
std::optional<Rat> rat_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  const Int num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rat(rn) / Rat(rd);
}

}  // namespace

NormalizeResult normalize_row2(const Inhomogeneous& a, const MultiVector& r) {
  NormalizeResult result{r, {}, std::nullopt, "unchanged"};
  Row2State st = read_state(a, result.r);

  // Step 1: a translation clears the e+ components of b(X+*), b(JH+*) and
  // balances x2 + y1 to zero.
  if (st.xp != 0 || st.yp != 0 || st.x2 + st.y1 != 0) {
    MultiVector v = a.named_element("e1").scaled(Scalar(-st.yp)) +
                    a.named_element("e2").scaled(Scalar(-st.xp)) +
                    a.named_element("e-").scaled(Scalar(-(st.x2 + st.y1) / 4));
    AutoMove move = AutoMove::translate(a, v);
    result.r = apply(move, result.r);
    result.steps.push_back(move.description());
    st = read_state(a, result.r);
  }

  // Step 2: rotate the transverse pair (x1 + y2, x2 - y1) onto its first
  // coordinate, when a rational circle point realizes the rotation exactly.
  Rat u = st.x1 + st.y2, w = st.x2 - st.y1;
  if (w != 0) {
    std::optional<Rat> rho = rat_sqrt(u * u + w * w);
    bool applied = false;
    if (rho) {
      for (int eps : {1, -1}) {
        Rat c2 = u / (*rho * eps);
        Rat s2 = w / (*rho * eps);
        std::optional<Rat> c = rat_sqrt((1 + c2) / 2);
        if (!c || *c == 0) continue;
        Rat s = s2 / (2 * *c);
        if (*c * *c + s * s != 1) continue;
        for (int dir : {1, -1}) {
          AutoMove move = AutoMove::rotation(a, a.named_element("JH"), *c, s * dir);
          MultiVector candidate = apply(move, result.r);
          Row2State cst = read_state(a, candidate);
          if (cst.x2 - cst.y1 == 0) {
            result.r = candidate;
            result.steps.push_back(move.description());
            st = cst;
            applied = true;
            break;
          }
        }
        if (applied) break;
      }
    }
    if (!applied) {
      result.obstruction =
          "no exact rational rotation reaches x2 - y1 = 0 from (u, w) = (" + rat_str(u) +
          ", " + rat_str(w) + "); required: u^2 + w^2 a rational square with a rational "
          "half angle";
      result.final_form = "b1";
      return result;
    }
  }
  result.final_form = "b2";

  // Step 3: branch on the invariants of the balanced form.
  if (st.x1 + st.y2 == 0) {
    if (st.zp != 0) {
      // kill the Lambda^2 V part by a transverse translation, then remove the
      // translation remnants with the two nilpotent flows
      if (!st.a_part.is_zero()) {
        MultiVector base = st.a_part;
        auto delta = [&](const std::string& name) {
          AutoMove probe = AutoMove::translate(a, a.named_element(name));
          return split2(apply(probe, result.r)).a - base;
        };
        MultiVector d1 = delta("e1"), d2 = delta("e2");
        QVec rhs;
        QMat sys(static_cast<int>(base.rational_coordinates().size()), 2);
        QVec b0 = base.rational_coordinates(), c1 = d1.rational_coordinates(),
             c2 = d2.rational_coordinates();
        for (int i = 0; i < sys.rows(); ++i) {
          sys(i, 0) = c1[i];
          sys(i, 1) = c2[i];
          rhs.push_back(-b0[i]);
        }
        auto sol = solve(sys, rhs);
        if (!sol) {
          result.obstruction = "the Lambda^2 V part cannot be removed by a translation";
          return result;
        }
        MultiVector v = a.named_element("e1").scaled(Scalar((*sol)[0])) +
                        a.named_element("e2").scaled(Scalar((*sol)[1]));
        AutoMove move = AutoMove::translate(a, v);
        result.r = apply(move, result.r);
        result.steps.push_back(move.description());
        st = read_state(a, result.r);
      }
      for (const char* gen : {"X+", "JX+"}) {
        // the e+ remnant moves linearly under the nilpotent flow; solve for
        // the exact time symbolically
        Scalar time = Scalar::variable("_t");
        AutoMove probe = AutoMove::nilpotent_flow(a, a.named_element(gen), time);
        MultiVector probed = apply(probe, result.r);
        GradedComponents2 parts = split2(probed);
        MultiVector xv = contract(a.named_covector("X+"), parts.b);
        MultiVector yv = contract(a.named_covector("JX+"), parts.b);
        Scalar target = pairing(a.named_covector("e+"),
                                std::string(gen) == "X+" ? yv : xv);
        // target = c0 + c1 * _t
        Scalar c0 = target.substitute({{"_t", Scalar(0)}});
        Scalar c1 = target.substitute({{"_t", Scalar(1)}}) - c0;
        if ((target - c0 - c1 * Scalar::variable("_t")).is_zero() && !c1.is_zero()) {
          Rat t_exact = -c0.rational() / c1.rational();
          if (t_exact != 0) {
            AutoMove move =
                AutoMove::nilpotent_flow(a, a.named_element(gen), Scalar(t_exact));
            result.r = apply(move, result.r);
            result.steps.push_back(move.description());
          }
        }
      }
      st = read_state(a, result.r);
      if (st.xp == 0 && st.yp == 0 && st.a_part.is_zero() && st.x2 == 0 && st.y1 == 0)
        result.final_form = "row2";
    } else {
      result.final_form = "row3-family";
    }
  } else if (st.zp == 0 && st.x1 == st.y2) {
    result.final_form = "row4-family";
  } else {
    result.obstruction =
        "the balanced form solves the bracket equations only when x1 + y2 = 0 or "
        "(z+ = 0 and x1 = y2); neither holds";
  }
  return result;
}

}  // namespace bialg
