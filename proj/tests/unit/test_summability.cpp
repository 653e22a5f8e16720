#include <gtest/gtest.h>

#include "taucert/accept/gen.hpp"
#include "taucert/rational_solution.hpp"
#include "taucert/summability.hpp"

using namespace taucert;

namespace {

TPoly P(std::initializer_list<GaussRat> c) { return TPoly(std::vector<GaussRat>(c)); }
RatFun R(TPoly n, TPoly d = TPoly::one()) { return ratfun_normalize(std::move(n), std::move(d)); }
RatFun inv(const GaussRat& pole, unsigned k = 1) { return R(TPoly::one(), pow(linear_factor(pole), k)); }
const RatFun t = RatFun::variable();
const MoebiusShift unit = MoebiusShift::make(GaussRat(1));

RatFun sigma1(const RatFun& F) { return sigma(F, 1); }

}  // namespace

TEST(Summability, FrameDecompositionExamples) {
  RatFun F = inv(GaussRat(-1)) - inv(GaussRat(0));
  SumDecomposition d = summable_decompose(F);
  EXPECT_TRUE(d.rem.is_zero());
  EXPECT_EQ(sigma1(d.G) - d.G, F);

  d = summable_decompose(inv(GaussRat(0), 2));
  EXPECT_EQ(d.rem, inv(GaussRat(0), 2));

  F = inv(GaussRat(0), 2) - inv(GaussRat(-5), 2);
  d = summable_decompose(F);
  EXPECT_TRUE(d.rem.is_zero());
  EXPECT_EQ(sigma1(d.G) - d.G, F);
}

TEST(Summability, TExamples) {
  auto g = is_summable(RatFun(1), unit);
  ASSERT_TRUE(g);
  EXPECT_EQ(tau_apply(*g, unit) - *g, RatFun(1));
  EXPECT_FALSE(is_summable(t, unit));
  RatFun bern = t / pow(RatFun(1) - RatFun(2) * t, 2);
  EXPECT_FALSE(is_summable(bern, unit));
}

TEST(Summability, OrbitRepresentatives) {
  EXPECT_EQ(orbit_representative(GaussRat::from_ratio(7, 2)), GaussRat::from_ratio(1, 2));
  EXPECT_EQ(orbit_representative(GaussRat::from_ratio(-1, 3)), GaussRat::from_ratio(2, 3));
  EXPECT_EQ(orbit_representative(GaussRat(BigRat(-3), BigRat(2))), GaussRat(BigRat(0), BigRat(2)));
}

TEST(Summability, RandomDecompositions) {
  testgen::Gen gen(11);
  for (int trial = 0; trial < 40; ++trial) {
    RatFun F = gen.split_ratfun(4);
    OrbitDecomposition dec = orbit_decompose(F);
    EXPECT_EQ(reassemble(dec), F);
    for (const auto& o : dec.orbits) {
      EXPECT_GE(sgn(o.rep.re()), 0);
      EXPECT_LT(o.rep.re(), BigRat(1));
    }
    SumDecomposition d = summable_decompose(F);
    EXPECT_EQ(sigma1(d.G) - d.G + d.rem, F);
  }
}

TEST(Summability, PlantedSummable) {
  testgen::Gen gen(12);
  for (int trial = 0; trial < 30; ++trial) {
    MoebiusShift sh = MoebiusShift::make(gen.coin() ? GaussRat(1) : gen.nonzero());
    RatFun g0 = gen.split_ratfun(3);
    RatFun h = tau_apply(g0, sh) - g0;
    auto g = is_summable(h, sh);
    ASSERT_TRUE(g);
    EXPECT_EQ(tau_apply(*g, sh) - *g, h);
    // g is unique up to a constant
    EXPECT_TRUE((*g - g0).is_constant());
  }
}

TEST(Telescoper, Examples) {
  RatFun g0 = inv(GaussRat(2));
  auto w = telescoper_decide(tau_apply(g0, unit) - g0, unit, 3);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->n, 0);
  EXPECT_EQ(w->alphas.front(), GaussRat(1));

  EXPECT_FALSE(telescoper_decide(t, unit, 5));
  RatFun bern = pow(t / (RatFun(1) - RatFun(2) * t), 2);
  EXPECT_FALSE(telescoper_decide(bern, unit, 6));
}

TEST(Telescoper, PlantedWitness) {
  // Derivatives raise pole orders in the frame, so 1 + t (frame image 1 + 1/s) never telescopes.
  EXPECT_FALSE(telescoper_decide(RatFun(1) + t, unit, 4));
  testgen::Gen gen(13);
  for (int trial = 0; trial < 15; ++trial) {
    RatFun g0 = gen.split_ratfun(2, false);
    RatFun f = tau_apply(g0, unit) - g0;
    auto v = telescoper_decide(f, unit, 2);
    ASSERT_TRUE(v);
    EXPECT_EQ(v->n, 0);
    EXPECT_TRUE(check_witness(f, unit, *v));
  }
}

TEST(RationalSolution, Examples) {
  RatFun f = t / (RatFun(1) + t) - RatFun(2) * t;
  auto g = rational_solution(RatFun(2), f, unit);
  ASSERT_TRUE(g);
  EXPECT_EQ(*g, t);
  EXPECT_FALSE(rational_solution(t, RatFun(1), unit));
  EXPECT_FALSE(rational_solution(RatFun(1) + t, -t / (RatFun(1) + t), unit));
  EXPECT_THROW(rational_solution(RatFun(), RatFun(1), unit), Error);
}

TEST(RationalSolution, Homogeneous) {
  // tau(1/t) = 1/t + 1
  RationalSolutions rs = rational_solutions(RatFun(1), RatFun(1), unit);
  ASSERT_TRUE(rs.particular);
  EXPECT_EQ(tau_apply(*rs.particular, unit), *rs.particular + RatFun(1));
  ASSERT_TRUE(rs.homogeneous);
  EXPECT_TRUE(rs.homogeneous->is_constant());
}

TEST(RationalSolution, UniversalDenominator) {
  // y(s+1) - y(s) * s/(s+1)... : a1 = s+1, a0 = -s has y = 1/s.
  TPoly s = TPoly::variable();
  TPoly U = universal_denominator(s + TPoly::one(), -s);
  EXPECT_EQ(divmod(U, s).remainder, TPoly());
  EXPECT_EQ(dispersion_set(P({0, 1}), P({-3, 1})), (std::set<long>{3}));
  EXPECT_TRUE(dispersion_set(P({0, 1}), P({GaussRat::from_ratio(1, 2), 1})).empty());
  // s^2 + 2 against (s - 3)^2 + 2: no roots in Q(i), found through the resultant.
  EXPECT_EQ(dispersion_set(P({2, 0, 1}), P({11, -6, 1}) * P({-1, 1})), (std::set<long>{3}));
  EXPECT_EQ(resultant(P({-1, 1}), P({-2, 1})), GaussRat(-1));
  EXPECT_EQ(resultant(P({0, 0, 1}), P({-2, 1})), GaussRat(4));
}

TEST(RationalSolution, Planted) {
  testgen::Gen gen(14);
  int found = 0;
  for (int trial = 0; trial < 50; ++trial) {
    MoebiusShift sh = MoebiusShift::make(trial % 3 == 0 ? gen.nonzero() : GaussRat(1));
    RatFun a = gen.split_ratfun(2);
    if (a.is_zero()) a = RatFun(1);
    RatFun g0 = gen.split_ratfun(3);
    RatFun f = tau_apply(g0, sh) - a * g0;
    RationalSolutions rs = rational_solutions(a, f, sh);
    ASSERT_TRUE(rs.particular) << "a = " << a << ", g0 = " << g0;
    EXPECT_EQ(tau_apply(*rs.particular, sh), a * *rs.particular + f);
    if (rs.homogeneous) EXPECT_EQ(tau_apply(*rs.homogeneous, sh), a * *rs.homogeneous);
    if (!rs.homogeneous) {
      EXPECT_EQ(*rs.particular, g0);
      ++found;
    }
  }
  EXPECT_GT(found, 0);
}
