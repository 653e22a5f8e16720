#include <gtest/gtest.h>

#include "taucert/accept/gen.hpp"
#include "taucert/certifier.hpp"

using namespace taucert;

namespace {

const RatFun t = RatFun::variable();
const MoebiusShift unit = MoebiusShift::make(GaussRat(1));

std::vector<GaussRat> ints(std::initializer_list<long> v) {
  std::vector<GaussRat> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

Series solve(const RatFun& a, const RatFun& f, std::size_t N, const MoebiusShift& sh = unit) {
  return solve_series(first_order(sh, a, f), N);
}

}  // namespace

TEST(SolveSeries, Bell) {
  EXPECT_EQ(solve(t, RatFun(1), 7).scalars(), ints({1, 1, 2, 5, 15, 52, 203}));
}

TEST(SolveSeries, FubiniAtOne) {
  TauEquation eq{unit, {RatFun(-1) - t, RatFun(2)}, RatFun(1)};
  EXPECT_EQ(solve_series(eq, 6).scalars(), ints({1, 1, 3, 13, 75, 541}));
}

TEST(SolveSeries, Resonance) {
  try {
    solve(RatFun(1), RatFun(), 8);
    FAIL() << "expected resonance";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Resonance);
  }
  // tau(y) = y + 1 + t has no power series solution
  EXPECT_THROW(solve(RatFun(1) + t, RatFun(1) + t, 8), Error);
}

TEST(SolveSeries, AgreesWithResidual) {
  testgen::Gen gen(21);
  for (int trial = 0; trial < 20; ++trial) {
    MoebiusShift sh = MoebiusShift::make(gen.nonzero());
    RatFun a = ratfun_normalize(TPoly::one() * GaussRat(2) + gen.poly(2).shifted_up(1), TPoly::one() + gen.poly(1).shifted_up(1));
    RatFun f = ratfun_normalize(gen.poly(3), TPoly::one() + gen.poly(2).shifted_up(1));
    Series y = solve(a, f, 12, sh);
    EXPECT_FALSE(first_failure(first_order(sh, a, f), y)) << a << " " << f;
  }
}

TEST(Certify, Bell) {
  Certificate c = certify(FirstOrderProblem{unit, t, RatFun(1), solve(t, RatFun(1), 32), 32});
  EXPECT_EQ(c.verdict, Verdict::StronglyDTranscendental);
  EXPECT_EQ(c.evidence.kind, "no-rational-solution");
  EXPECT_EQ(c.series_prefix.size(), 32u);
}

TEST(Certify, RationalWitness) {
  RatFun f = t / (RatFun(1) + t) - RatFun(2) * t;
  FirstOrderProblem p{unit, RatFun(2), f, Series::from_ratfun(t, 16), 16};
  Certificate c = certify(p);
  ASSERT_EQ(c.verdict, Verdict::Rational);
  EXPECT_EQ(*c.witness, t);
  EXPECT_TRUE(recheck(c, p));

  // The witness comes from the homogeneous family: 1/t is added with the right multiple.
  FirstOrderProblem q{unit, RatFun(1) + t, t, solve(RatFun(1) + t, t, 16), 16};
  c = certify(q);
  ASSERT_EQ(c.verdict, Verdict::Rational);
  EXPECT_EQ(*c.witness, RatFun(-1));
}

TEST(Certify, BernoulliNumberType) {
  // tau(y) = (1+t) y + t^2 has the rational homogeneous solution 1/t but no particular one.
  FirstOrderProblem p{unit, RatFun(1) + t, t * t, solve(RatFun(1) + t, t * t, 24), 24};
  Certificate c = certify(p);
  EXPECT_EQ(c.verdict, Verdict::StronglyDTranscendental);
  EXPECT_EQ(c.evidence.kind, "no-rational-solution");
  EXPECT_EQ(c.series_prefix[1], GaussRat::from_ratio(-1, 2));
  EXPECT_TRUE(recheck(c, p));
}

TEST(Certify, Errors) {
  Series y = solve(t, RatFun(1), 16);
  Series bad = y;
  bad[5] += XPoly::one();
  try {
    certify(FirstOrderProblem{unit, t, RatFun(1), bad, 16});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Inconsistent);
  }
  EXPECT_THROW(certify(FirstOrderProblem{unit, t, RatFun(1), y, 4}), Error);
  EXPECT_THROW(certify(FirstOrderProblem{unit, t, RatFun(1), y, 20}), Error);

  // A degree-9 witness needs at least 26 coefficients.
  RatFun g = pow(RatFun(1) + t, 9);
  RatFun f = tau_apply(g, unit) - RatFun(3) * g;
  try {
    certify(FirstOrderProblem{unit, RatFun(3), f, Series::from_ratfun(g, 16), 16});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderTooSmall);
  }
  Certificate c = certify(FirstOrderProblem{unit, RatFun(3), f, Series::from_ratfun(g, 26), 26});
  EXPECT_EQ(c.verdict, Verdict::Rational);
}

TEST(Certify, UnsupportedOrder) {
  TauEquation eq{unit, {-t, t, RatFun(1)}, RatFun(1)};
  Certificate c = certify(eq, Series::from_scalars(ints({1, 0, 1, 3, 10, 45, 0, 0})), 8);
  EXPECT_EQ(c.verdict, Verdict::Unsupported);
}

TEST(Certify, PrefixHash) {
  auto a = ints({1, 1, 2, 5});
  EXPECT_EQ(series_prefix_hash(a), series_prefix_hash(ints({1, 1, 2, 5})));
  EXPECT_NE(series_prefix_hash(a), series_prefix_hash(ints({1, 1, 2, 6})));
  EXPECT_EQ(hash_hex(0xabcULL), "0000000000000abc");
}

TEST(Certify, PlantedRational) {
  testgen::Gen gen(22);
  for (int trial = 0; trial < 25; ++trial) {
    MoebiusShift sh = MoebiusShift::make(trial % 2 ? gen.nonzero() : GaussRat(1));
    RatFun g0 = ratfun_normalize(gen.poly(2), TPoly::one() + gen.split_poly(2).shifted_up(1));
    RatFun a = ratfun_normalize(gen.split_poly(2), gen.split_poly(1));
    if (a.is_zero()) a = RatFun(2);
    RatFun f = tau_apply(g0, sh) - a * g0;
    FirstOrderProblem p{sh, a, f, Series::from_ratfun(g0, 24), 24};
    Certificate c = certify(p);
    ASSERT_EQ(c.verdict, Verdict::Rational) << "a = " << a << ", g0 = " << g0;
    EXPECT_TRUE(recheck(c, p));
    EXPECT_EQ(laurent_expand(*c.witness, 24).coeffs.size() <= 24, true);
  }
}

TEST(HomogeneousCriterion, Examples) {
  EXPECT_FALSE(homogeneous_criterion(t, unit, 4));
  auto w = homogeneous_criterion(RatFun(1), unit, 4);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->n, 0);
  EXPECT_TRUE(w->g.is_constant());
  // d(1+t)/(1+t) = t^2/(1+t) is summable.
  w = homogeneous_criterion(RatFun(1) + t, unit, 4);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->n, 0);
  EXPECT_TRUE(check_witness(partial_d(RatFun(1) + t, 1) / (RatFun(1) + t), unit, *w));
}
