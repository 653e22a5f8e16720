#include <gtest/gtest.h>

#include "taucert/egf_compiler.hpp"

using namespace taucert;

namespace {

const RatFun t = RatFun::variable();
const XPoly X = XPoly::variable();

XTPoly upoly(std::initializer_list<XPoly> c) { return XTPoly(std::vector<XPoly>(c)); }
XPoly c(long v) { return XPoly(GaussRat(v)); }

EgfEquation bell() {
  EgfEquation e;
  e.lhs = {upoly({c(0), c(-1)}), upoly({c(1)})};
  e.init = {c(1)};
  return e;
}

EgfEquation graph() {
  EgfEquation e;
  e.lhs = {upoly({c(0), c(1), c(-1)}), upoly({c(1)})};
  e.init = {c(1)};
  return e;
}

EgfEquation bernoulli() {
  EgfEquation e;
  e.lhs = {upoly({c(-1), c(1)})};
  e.rhs = {ExpMonomial{1, true, GaussRat(), c(1)}};
  return e;
}

EgfEquation fubini() {
  EgfEquation e;
  e.lhs = {upoly({X + c(1), -X})};
  e.rhs = {ExpMonomial{0, false, GaussRat(), c(1)}};
  return e;
}

}  // namespace

TEST(EgfCompiler, InverseBorelMonomial) {
  EXPECT_EQ(inverse_borel_monomial(0, GaussRat(1)), (RatFun(1) - t).inverse());
  EXPECT_EQ(inverse_borel_monomial(1, GaussRat(2)), t / pow(RatFun(1) - RatFun(2) * t, 2));
}

TEST(EgfCompiler, Bell) {
  TauEquation eq = compile(bell());
  EXPECT_EQ(eq.shift.beta, GaussRat(1));
  ASSERT_EQ(eq.order(), 1);
  EXPECT_EQ(eq.coeffs[0], -t);
  EXPECT_EQ(eq.coeffs[1], RatFun(1));
  EXPECT_EQ(eq.rhs, RatFun(1));
  EXPECT_TRUE(verify_compiled(bell(), eq, 40).exact);
}

TEST(EgfCompiler, GraphSecondOrder) {
  TauEquation eq = compile(graph());
  TauEquation expected{MoebiusShift::make(1), {-t, t / (t + RatFun(1)), RatFun(1)}, RatFun(1)};
  EXPECT_EQ(eq, canonical(expected));
  EXPECT_EQ(eq.order(), 2);
  EXPECT_TRUE(verify_compiled(graph(), eq, 40).exact);
}

TEST(EgfCompiler, BernoulliPolynomials) {
  for (long x : {0L, 2L, 3L, -1L}) {
    GaussRat xv(x);
    TauEquation eq = compile(bernoulli(), xv);
    RatFun e = RatFun(1) + t - RatFun(xv) * t;
    TauEquation expected = first_order(MoebiusShift::make(1), RatFun(1) + t, -t * (RatFun(1) + t) / (e * e));
    EXPECT_EQ(eq, canonical(expected)) << "x = " << x;
    EXPECT_TRUE(verify_compiled(bernoulli(), eq, 40, xv).exact);
  }
  EXPECT_THROW(compile(bernoulli()), Error);
}

TEST(EgfCompiler, FubiniAgainstTable) {
  for (long x : {1L, 2L, 5L}) {
    GaussRat xv(x);
    TauEquation eq = compile(fubini(), xv);
    RatFun rx(xv);
    TauEquation table = first_order(MoebiusShift::make(1), rx * (RatFun(1) + t) / (rx + RatFun(1)),
                                    (rx + RatFun(1)).inverse());
    EXPECT_EQ(eq, canonical(table));
    EXPECT_TRUE(verify_compiled(fubini(), table, 40, xv).exact);
  }
}

TEST(EgfCompiler, CorruptedRhsIsCaught) {
  TauEquation eq = compile(bell());
  eq.rhs = RatFun(1) + pow(t, 5);
  ResidualReport rep = verify_compiled(bell(), eq, 40);
  EXPECT_FALSE(rep.exact);
  ASSERT_TRUE(rep.first_failure);
  EXPECT_EQ(*rep.first_failure, 5u);
}

TEST(EgfCompiler, Errors) {
  EgfEquation e = bell();
  e.init.clear();
  try {
    compile(e);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::MissingInitialTerms);
  }
  EgfEquation z;
  z.lhs = {upoly({}), upoly({})};
  EXPECT_THROW(compile(z), Error);
}

TEST(EgfCompiler, SolverResonance) {
  // (u - 1) D yhat - 3 yhat = 0: the recursion coefficient n - 3 vanishes at n = 3.
  EgfEquation e;
  e.lhs = {upoly({c(-3)}), upoly({c(-1), c(1)})};
  e.init = {c(0)};
  try {
    solve_egf(e, 10);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::Resonance);
  }
}

TEST(EgfCompiler, FrameConsistency) {
  // Rescaling t by lambda: yhat(t) solves the lambda-equation iff z(s) = yhat(s/lambda) solves
  // the unit equation with D_t = lambda D_s, z_j = y_j / lambda^j, and rates c/lambda.
  GaussRat lam(BigRat(0), BigRat(2));
  EgfEquation e;
  e.lambda = lam;
  e.lhs = {upoly({c(1), c(3)}), upoly({c(1), c(-1)})};
  e.rhs = {ExpMonomial{1, false, GaussRat(1), c(2)}};
  e.init = {c(0)};
  TauEquation a = compile(e);

  EgfEquation u;
  u.lhs = {e.lhs[0], e.lhs[1] * XPoly(lam)};
  u.rhs = {ExpMonomial{1, false, GaussRat(1) / lam, XPoly(GaussRat(2) / lam)}};
  u.init = {c(0)};
  TauEquation b = compile(u);

  // The OGF of z is y(t/lambda) scaled coefficientwise, so a(t/lambda) must match b.
  auto rescale = [&](const RatFun& f) { return moebius_substitute(f, lam.inverse(), GaussRat(), GaussRat(), GaussRat(1)); };
  TauEquation a2{MoebiusShift::make(1), {}, rescale(a.rhs)};
  for (const auto& k : a.coeffs) a2.coeffs.push_back(rescale(k));
  EXPECT_EQ(canonical(a2), b);
  EXPECT_TRUE(verify_compiled(e, a, 30).exact);
  EXPECT_TRUE(verify_compiled(u, b, 30).exact);
}
