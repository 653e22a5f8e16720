#include <gtest/gtest.h>

#include <cmath>

#include "taucert/error.hpp"
#include "taucert/numeric.hpp"

using namespace taucert;
using numeric::Real;

namespace {

// Direct summation with an Euler-Maclaurin tail; shares nothing with the recurrence + asymptotic path.
Real trigamma_by_sum(Real z, long K) {
  Real s = 0;
  for (long k = K - 1; k >= 0; --k) s += 1 / ((z + k) * (z + k));
  Real a = z + K;
  return s + 1 / a + 1 / (2 * a * a) + 1 / (6 * a * a * a);
}

}  // namespace

TEST(Trigamma, Values) {
  EXPECT_NEAR(numeric::trigamma(1), 1.6449340668482264L, 1e-15);
  EXPECT_NEAR(numeric::trigamma(2.5L) - numeric::trigamma(3.5L), 0.16L, 1e-15);
  EXPECT_NEAR(numeric::trigamma(21), trigamma_by_sum(21, 1000000), 1e-13);
  EXPECT_NEAR(numeric::trigamma(0.5L), M_PIl * M_PIl / 2, 1e-14);
  EXPECT_THROW(numeric::trigamma(0), Error);
  EXPECT_THROW(numeric::trigamma(-1.5L), Error);
}

TEST(Trigamma, RecurrenceAndMonotonicity) {
  Real prev = numeric::trigamma(0.5L);
  for (Real z = 0.5L; z <= 50; z += 0.37L) {
    Real v = numeric::trigamma(z);
    EXPECT_NEAR(v - numeric::trigamma(z + 1), 1 / (z * z), 1e-12 * std::max<Real>(1, 1 / (z * z)));
    if (z > 0.5L) EXPECT_LT(v, prev);
    prev = v;
  }
}

TEST(ClosedForm, Residuals) {
  EXPECT_LT(numeric::check_closed_form(0, {0.1L, 0.05L, 0.02L}).max_residual, 1e-10);
  EXPECT_LT(numeric::check_closed_form(2, {0.05L, 0.02L}).max_residual, 1e-10);
  EXPECT_GT(numeric::check_closed_form(0, {0.1L, 0.05L, 0.02L}, -1).max_residual, 1e-3);
  auto rep = numeric::check_closed_form(20, {0.1L, 0.02L});
  EXPECT_TRUE(rep.samples[0].skipped);
  EXPECT_FALSE(rep.samples[1].skipped);
}

TEST(Telescoping, Residuals) {
  EXPECT_LT(numeric::check_telescoping(0, 0.1L, 10), 1e-10);
  EXPECT_EQ(numeric::check_telescoping(0, 0.1L, 0), 0);
  EXPECT_LT(numeric::check_telescoping(0, 0.1L, 1000), 1e-9);
  EXPECT_LT(numeric::check_telescoping(2, 0.05L, 25), 1e-10);
}

TEST(Asymptotic, Scaling) {
  auto rep = numeric::check_asymptotic(3, {10, 20});
  EXPECT_TRUE(rep.pass);
  EXPECT_NEAR(rep.expected[0], 512, 1e-9);
  // Expansion matches term by term through M = 5; at t = 40 and M = 5 the error drops below long double noise.
  for (int M = 1; M <= 5; ++M) EXPECT_TRUE(numeric::check_asymptotic(M, {10, 20}).pass) << M;
  for (int M = 1; M <= 3; ++M) EXPECT_TRUE(numeric::check_asymptotic(M, {10, 20, 40}).pass) << M;
  Real t = 10;
  auto m0 = numeric::check_asymptotic(0, {t, 20});
  EXPECT_LE(m0.errors[0], 1 / (3 * t * t * t));
  EXPECT_THROW(numeric::check_asymptotic(3, {5, 10}), Error);
}
