#include <gtest/gtest.h>

#include "taucert/accept/gen.hpp"
#include "taucert/linsolve.hpp"
#include "taucert/partial_fractions.hpp"
#include "taucert/roots.hpp"

using namespace taucert;

namespace {

TPoly P(std::initializer_list<long> c) {
  std::vector<GaussRat> v;
  for (long x : c) v.emplace_back(x);
  return TPoly(std::move(v));
}

GaussRat Q(long n, long d) { return GaussRat::from_ratio(n, d); }

}  // namespace

TEST(GaussRat, ParseAndFormat) {
  EXPECT_EQ(GaussRat::parse("3/2").to_string(), "3/2");
  EXPECT_EQ(GaussRat::parse("-i"), -GaussRat::i());
  EXPECT_EQ(GaussRat::parse("1/2+3i"), GaussRat(BigRat(1, 2), BigRat(3)));
  EXPECT_EQ(GaussRat::parse("-1/2-3/4i"), GaussRat(BigRat(-1, 2), BigRat(-3, 4)));
  EXPECT_EQ(GaussRat::parse("2i").to_string(), "2i");
  EXPECT_EQ(GaussRat::parse("4/6").to_string(), "2/3");
  EXPECT_THROW(GaussRat::parse("1/0"), Error);
  EXPECT_THROW(GaussRat::parse("abc"), Error);
  EXPECT_THROW(GaussRat::parse(""), Error);
}

TEST(GaussRat, FieldAxioms) {
  testgen::Gen g(11);
  for (int k = 0; k < 200; ++k) {
    GaussRat a = g.gauss(), b = g.gauss(), c = g.gauss();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    EXPECT_EQ(a.norm() == 0, a.is_zero());
  }
  EXPECT_THROW(GaussRat().inverse(), Error);
}

TEST(BigRat, LowestTerms) {
  BigRat q = parse_bigrat("-12/18");
  EXPECT_EQ(format_bigrat(q), "-2/3");
  EXPECT_GT(q.get_den(), 0);
}

TEST(Poly, DivisionAndGcd) {
  TPoly a = P({-1, 0, 1});  // t^2 - 1
  TPoly b = P({-1, 1});
  DivMod qr = divmod(a, b);
  EXPECT_EQ(qr.quotient, P({1, 1}));
  EXPECT_TRUE(qr.remainder.is_zero());
  EXPECT_EQ(gcd(a, P({1, 2, 1})), P({1, 1}));
  EXPECT_EQ(lcm(P({0, 1}), P({1, 1})), P({0, 1, 1}));
  EXPECT_EQ(squarefree_part(P({0, 0, 1, 1})), P({0, 1, 1}));
  EXPECT_EQ(taylor_shift(P({0, 0, 1}), GaussRat(1)), P({1, 2, 1}));
  EXPECT_EQ(compose(P({1, 0, 1}), P({1, 1})), P({2, 2, 1}));
  EXPECT_EQ(to_string(P({-1, 0, 2})), "2*t^2 - 1");
}

TEST(Poly, RandomIdentities) {
  testgen::Gen g(12);
  for (int k = 0; k < 60; ++k) {
    TPoly a = g.poly(5), b = g.nonzero_poly(4);
    DivMod qr = divmod(a, b);
    EXPECT_EQ(qr.quotient * b + qr.remainder, a);
    EXPECT_LT(qr.remainder.degree(), b.degree() == 0 ? 0 : b.degree());
    TPoly c = g.nonzero_poly(3);
    TPoly gg = gcd(a * c, b * c);
    EXPECT_TRUE(divmod(gg, monic(c)).remainder.is_zero());
    GaussRat s = g.gauss();
    EXPECT_EQ(taylor_shift(a, s).eval(GaussRat(2)), a.eval(GaussRat(2) + s));
  }
}

TEST(RatFun, Normalize) {
  RatFun f = ratfun_normalize(P({-1, 0, 1}), P({-1, 1}));
  EXPECT_EQ(f.num(), P({1, 1}));
  EXPECT_EQ(f.den(), P({1}));
  RatFun h = ratfun_normalize(P({2, 2}), P({4}));
  EXPECT_EQ(h.num(), TPoly(std::vector<GaussRat>{Q(1, 2), Q(1, 2)}));
  EXPECT_EQ(h.den(), P({1}));
  RatFun m = ratfun_normalize(P({0, 0, 0, 1}), P({0, 0, 1}));
  EXPECT_EQ(m, RatFun::variable());
  EXPECT_THROW(ratfun_normalize(P({1}), TPoly()), Error);
}

TEST(RatFun, ArithmeticStaysReduced) {
  testgen::Gen g(13);
  for (int k = 0; k < 80; ++k) {
    RatFun a = g.ratfun(3), b = g.ratfun(3);
    EXPECT_TRUE(is_reduced(a + b));
    EXPECT_TRUE(is_reduced(a * b));
    EXPECT_TRUE(is_reduced(a - b));
    if (!b.is_zero()) {
      EXPECT_TRUE(is_reduced(a / b));
      EXPECT_EQ((a / b) * b, a);
    }
    EXPECT_EQ((a + b) - b, a);
  }
}

TEST(RatFun, LaurentExpansion) {
  // 1/(t^2 (1 - t)) = t^-2 + t^-1 + 1 + ...
  RatFun f = ratfun_normalize(P({1}), P({0, 0, 1, -1}));
  Laurent ex = laurent_expand(f, 3);
  EXPECT_EQ(ex.valuation, -2);
  ASSERT_EQ(ex.coeffs.size(), 5u);
  for (const auto& c : ex.coeffs) EXPECT_TRUE(c.is_one());
}

TEST(Roots, GaussianRootsExact) {
  // (t - 1/2)^2 (t + i) (t^2 + 2)
  TPoly p = pow(linear_factor(Q(1, 2)), 2) * linear_factor(-GaussRat::i()) * P({2, 0, 1});
  RootSplit r = gaussian_roots(p);
  ASSERT_EQ(r.roots.size(), 2u);
  EXPECT_EQ(r.leftover, P({2, 0, 1}));
  for (const auto& root : r.roots) {
    if (root.value == Q(1, 2)) EXPECT_EQ(root.multiplicity, 2);
    else EXPECT_EQ(root.value, -GaussRat::i());
  }
}

TEST(Roots, RandomSplitPolynomials) {
  testgen::Gen g(14);
  for (int k = 0; k < 60; ++k) {
    TPoly p = g.split_poly(6);
    if (p.degree() < 1) continue;
    RootSplit r = gaussian_roots(p);
    EXPECT_EQ(r.leftover.degree(), 0);
    int total = 0;
    for (const auto& root : r.roots) total += root.multiplicity;
    EXPECT_EQ(total, p.degree());
  }
}

TEST(Roots, LargeLeadingCoefficient) {
  // Denominators 7, 11, 13, ... make the primitive leading coefficient far too large to round lc * r.
  const long dens[] = {7, 11, 13, 17, 19, 23, 29, 31};
  TPoly p = TPoly::one();
  std::vector<GaussRat> expect;
  for (long d : dens) {
    GaussRat r(make_rat(d - 3, d), make_rat(2, d + 1));
    expect.push_back(r);
    p = p * linear_factor(r);
  }
  RootSplit r = gaussian_roots(p);
  EXPECT_EQ(r.leftover.degree(), 0);
  ASSERT_EQ(r.roots.size(), expect.size());
  std::sort(expect.begin(), expect.end());
  for (std::size_t k = 0; k < expect.size(); ++k) EXPECT_EQ(r.roots[k].value, expect[k]);
}

TEST(PartialFractions, Examples) {
  // 1/(s(s+1)) = 1/s - 1/(s+1)
  PartialFractions a = partial_fractions(ratfun_normalize(P({1}), P({0, 1, 1})));
  ASSERT_EQ(a.terms.size(), 2u);
  EXPECT_EQ(a.terms[0].pole, GaussRat(-1));
  EXPECT_EQ(a.terms[0].coeff, GaussRat(-1));
  EXPECT_EQ(a.terms[1].pole, GaussRat(0));
  EXPECT_EQ(a.terms[1].coeff, GaussRat(1));

  PartialFractions b = partial_fractions(ratfun_normalize(P({1}), P({0, 0, 1})));
  ASSERT_EQ(b.terms.size(), 1u);
  EXPECT_EQ(b.terms[0].order, 2);
  EXPECT_EQ(b.terms[0].coeff, GaussRat(1));

  // (2s+3)/(s-1)^2 = 2/(s-1) + 5/(s-1)^2
  PartialFractions c = partial_fractions(ratfun_normalize(P({3, 2}), P({1, -2, 1})));
  ASSERT_EQ(c.terms.size(), 2u);
  EXPECT_EQ(c.terms[0].order, 1);
  EXPECT_EQ(c.terms[0].coeff, GaussRat(2));
  EXPECT_EQ(c.terms[1].order, 2);
  EXPECT_EQ(c.terms[1].coeff, GaussRat(5));

  EXPECT_THROW(partial_fractions(ratfun_normalize(P({1}), P({2, 0, 1}))), Error);
}

TEST(PartialFractions, RoundTrip) {
  testgen::Gen g(15);
  for (int k = 0; k < 60; ++k) {
    RatFun f = g.split_ratfun(5);
    EXPECT_EQ(reassemble(partial_fractions(f)), f);
  }
}

TEST(LinSolve, Examples) {
  LinSystem id{2, {{GaussRat(1), GaussRat()}, {GaussRat(), GaussRat(1)}}, {GaussRat(3), GaussRat(4)}};
  auto s = linsolve(id);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, (Vec{GaussRat(3), GaussRat(4)}));
  EXPECT_TRUE(s->kernel.empty());

  LinSystem sym{2, {{GaussRat(1), GaussRat(1)}}, {GaussRat()}};
  auto k = linsolve(sym);
  ASSERT_TRUE(k);
  EXPECT_EQ(k->particular, (Vec{GaussRat(), GaussRat()}));
  ASSERT_EQ(k->kernel.size(), 1u);
  EXPECT_EQ(k->kernel[0][0], -k->kernel[0][1]);

  LinSystem bad{1, {{GaussRat()}}, {GaussRat(1)}};
  EXPECT_FALSE(linsolve(bad));

  LinSystem mismatch{2, {{GaussRat(1)}}, {GaussRat(1)}};
  EXPECT_THROW(linsolve(mismatch), Error);
}

TEST(LinSolve, Soundness) {
  testgen::Gen g(16);
  for (int k = 0; k < 60; ++k) {
    std::size_t rows = static_cast<std::size_t>(g.integer(1, 5)), cols = static_cast<std::size_t>(g.integer(1, 5));
    LinSystem sys{cols, {}, {}};
    for (std::size_t i = 0; i < rows; ++i) {
      Vec r(cols);
      for (auto& x : r) x = g.integer(0, 2) == 0 ? GaussRat() : g.gauss();
      sys.matrix.push_back(r);
      sys.rhs.push_back(g.gauss());
    }
    auto s = linsolve(sys);
    if (!s) continue;
    for (std::size_t i = 0; i < rows; ++i) {
      GaussRat acc, acc0;
      for (std::size_t j = 0; j < cols; ++j) acc += sys.matrix[i][j] * s->particular[j];
      EXPECT_EQ(acc, sys.rhs[i]);
      for (const auto& v : s->kernel) {
        GaussRat z;
        for (std::size_t j = 0; j < cols; ++j) z += sys.matrix[i][j] * v[j];
        EXPECT_TRUE(z.is_zero());
      }
    }
  }
}
