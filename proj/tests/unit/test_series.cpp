#include <gtest/gtest.h>

#include "taucert/accept/gen.hpp"
#include "taucert/accept/oracles.hpp"
#include "taucert/series.hpp"

using namespace taucert;

namespace {

Series scalars(std::initializer_list<GaussRat> v) { return Series::from_scalars(std::vector<GaussRat>(v)); }

Series bell_ogf(std::size_t n) {
  std::vector<GaussRat> v;
  for (const auto& b : oracle::bell_triangle(n)) v.emplace_back(BigRat(b));
  return Series::from_scalars(v);
}

GaussRat Q(long n, long d) { return GaussRat::from_ratio(n, d); }

}  // namespace

TEST(Series, BorelExamples) {
  std::vector<GaussRat> fact, ones;
  for (unsigned n = 0; n < 8; ++n) {
    fact.emplace_back(BigRat(factorial(n)));
    ones.emplace_back(1);
  }
  EXPECT_EQ(borel(Series::from_scalars(fact)), Series::from_scalars(ones));
  EXPECT_EQ(inverse_borel(Series::from_scalars(ones)), Series::from_scalars(fact));
  Series lin = scalars({1, 1, 0});
  EXPECT_EQ(borel(lin), lin);
  EXPECT_EQ(borel(bell_ogf(6)), scalars({1, 1, 1, Q(5, 6), Q(5, 8), Q(13, 30)}));
}

TEST(Series, InverseBorelOfTExpX) {
  // t e^{xt} -> t/(1 - x t)^2: coefficient n+1 is (n+1) x^n.
  const std::size_t N = 8;
  Series s = Series::variable(N) * Series::exp_rate(XPoly::variable(), N);
  Series ib = inverse_borel(s);
  for (std::size_t n = 0; n + 1 < N; ++n)
    EXPECT_EQ(ib[n + 1], XPoly::monomial(GaussRat(static_cast<long>(n + 1)), n));
  EXPECT_TRUE(ib[0].is_zero());
}

TEST(Series, BorelRoundTrip) {
  testgen::Gen g(21);
  for (int k = 0; k < 20; ++k) {
    Series f = g.series(12, 2);
    EXPECT_EQ(borel(inverse_borel(f)), f);
    EXPECT_EQ(inverse_borel(borel(f)), f);
  }
}

TEST(Series, PhiTau) {
  const std::size_t N = 10;
  Series geo(N), lin(N);
  for (std::size_t n = 0; n < N; ++n) {
    geo[n] = XPoly(GaussRat(1));
    lin[n] = XPoly(GaussRat(static_cast<long>(n)));
  }
  EXPECT_EQ(phi_tau(Series::one(N)), geo);
  EXPECT_EQ(phi_tau(Series::variable(N)), lin);
  testgen::Gen g(22);
  for (int k = 0; k < 10; ++k) {
    Series f = g.series(20, 1);
    EXPECT_EQ(borel(phi_tau(f)), borel(f) * Series::exp_rate(XPoly::one(), 20));
  }
}

TEST(Series, DividedDifference) {
  Series f = scalars({1, 1, 2});
  EXPECT_EQ(divided_difference(f, 1), scalars({1, 2}));
  EXPECT_EQ(divided_difference(f, 0), f);
  Series b = bell_ogf(16);
  Series lhs = derivative(borel(b)).truncated(15);
  EXPECT_EQ(borel(divided_difference(b, 1)), lhs);
}

TEST(Series, ExpLogReciprocal) {
  const std::size_t N = 6;
  Series em1 = Series::exp_rate(XPoly::one(), N) - Series::one(N);
  EXPECT_EQ(exp_series(em1), scalars({1, 1, 1, Q(5, 6), Q(5, 8), Q(13, 30)}));

  // sum t^n/(n+1)! is (e^t - 1)/t; its reciprocal is t/(e^t - 1).
  std::vector<GaussRat> v;
  for (unsigned n = 0; n < 7; ++n) v.emplace_back(BigRat(BigInt(1), factorial(n + 1)));
  EXPECT_EQ(reciprocal(Series::from_scalars(v)), scalars({1, Q(-1, 2), Q(1, 12), 0, Q(-1, 720), 0, Q(1, 30240)}));

  Series f = Series::one(N) + Series::variable(N);
  EXPECT_EQ(exp_series(log_series(f)), f);
  EXPECT_THROW(log_series(Series::variable(N)), Error);
  EXPECT_THROW(exp_series(Series::one(N)), Error);
  EXPECT_THROW(reciprocal(Series::variable(N)), Error);
}

TEST(Series, Compose) {
  testgen::Gen g(23);
  const std::size_t N = 9;
  Series f = g.series(N, 1);
  EXPECT_EQ(compose(f, Series(N)), Series::constant(f[0], N));
  for (int k = 0; k < 5; ++k) {
    Series a = g.series(N, 0), b = g.series(N, 0), c = g.series(N, 0);
    b[0] = XPoly();
    c[0] = XPoly();
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
  }
  EXPECT_THROW(compose(f, Series::one(N)), Error);
  EXPECT_THROW(f + Series(N + 1), Error);
}

TEST(Series, TauSubstitute) {
  const std::size_t N = 8;
  Series alt(N);
  for (std::size_t n = 1; n < N; ++n) alt[n] = XPoly(GaussRat(n % 2 ? 1 : -1));
  EXPECT_EQ(tau_substitute(Series::variable(N), GaussRat(1)), alt);
  Series c = Series::constant(XPoly(GaussRat::i()), N);
  EXPECT_EQ(tau_substitute(c, GaussRat(7)), c);
  EXPECT_THROW(tau_substitute(c, GaussRat()), Error);

  Series b = bell_ogf(30);
  Series rhs = Series::variable(30) * b + Series::one(30);
  EXPECT_EQ(tau_substitute(b, GaussRat(1)), rhs);

  // Agrees with repeated composition with t - beta t^2 + beta^2 t^3 - ...
  testgen::Gen g(24);
  for (int k = 0; k < 10; ++k) {
    GaussRat beta = g.nonzero();
    Series f = g.series(10, 1);
    Series m(10);
    GaussRat p(1);
    for (std::size_t n = 1; n < 10; ++n, p *= -beta) m[n] = XPoly(p);
    EXPECT_EQ(tau_substitute(f, beta), compose(f, m));
  }
}

TEST(Series, TauIsRingMorphism) {
  testgen::Gen g(25);
  for (int k = 0; k < 20; ++k) {
    GaussRat beta = g.nonzero();
    Series a = g.series(14, 1), b = g.series(14, 1);
    EXPECT_EQ(tau_substitute(a * b, beta), tau_substitute(a, beta) * tau_substitute(b, beta));
    EXPECT_EQ(tau_substitute(a + b, beta), tau_substitute(a, beta) + tau_substitute(b, beta));
  }
}
