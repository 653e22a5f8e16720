#pragma once

// Small random generators for property tests.

#include <random>

#include "taucert/ratfun.hpp"
#include "taucert/series.hpp"

namespace taucert::testgen {

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  BigRat rational(long span = 9) {
    long den = integer(1, 6);
    return make_rat(integer(-span, span), den);
  }
  GaussRat gauss(bool complex = true) {
    BigRat re = rational();
    BigRat im = complex && integer(0, 2) == 0 ? rational() : BigRat(0);
    return GaussRat(re, im);
  }
  GaussRat nonzero(bool complex = true) {
    GaussRat g;
    while (g.is_zero()) g = gauss(complex);
    return g;
  }
  GaussRat small_root(bool complex = true) {
    return GaussRat(make_rat(integer(-4, 4), integer(1, 3)), complex && coin() ? BigRat(integer(-2, 2)) : BigRat(0));
  }

  TPoly poly(int max_deg, bool complex = true) {
    std::vector<GaussRat> c(static_cast<std::size_t>(integer(0, max_deg) + 1));
    for (auto& g : c) g = gauss(complex);
    return TPoly(std::move(c));
  }
  TPoly nonzero_poly(int max_deg, bool complex = true) {
    TPoly p;
    while (p.is_zero()) p = poly(max_deg, complex);
    return p;
  }
  /// Product of linear factors with small Q(i) roots times a scalar.
  TPoly split_poly(int max_deg, bool complex = true) {
    int d = static_cast<int>(integer(0, max_deg));
    TPoly p(nonzero(complex));
    for (int k = 0; k < d; ++k) p = p * linear_factor(small_root(complex));
    return p;
  }
  RatFun ratfun(int max_deg, bool complex = true) { return ratfun_normalize(poly(max_deg, complex), nonzero_poly(max_deg, complex)); }
  RatFun split_ratfun(int max_deg, bool complex = true) {
    return ratfun_normalize(poly(max_deg, complex), split_poly(max_deg, complex));
  }

  Series series(std::size_t order, int xdeg = 0, bool complex = true) {
    std::vector<XPoly> c(order);
    for (auto& p : c) p = poly(xdeg, complex);
    return Series(std::move(c));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace taucert::testgen
