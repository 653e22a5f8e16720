#pragma once

#include <string>
#include <vector>

namespace taucert::numeric {

using Real = long double;

/// psi'(z) for z > 0: upward recurrence past `shift_to`, then the asymptotic series through B_10.
/// Relative error below 1e-15 with the default threshold.
Real trigamma(Real z, Real shift_to = 20);

struct Sample {
  Real t = 0;
  Real residual = 0;
  bool skipped = false;
  std::string note;
};

struct SampleReport {
  Real max_residual = 0;
  std::vector<Sample> samples;
};

/// tau(F) - (1+t) F + t(1+t)/(1+t-tx)^2 for F = (1/t) psi'((1+t-tx)/t).
/// `sign` multiplies the inhomogeneous term (pass -1 for the negative control).
SampleReport check_closed_form(Real x, const std::vector<Real>& ts, Real sign = 1);

/// G - tau^n(G) - sum_{k=1}^{n} (t/(1+kt-tx))^2 with G = psi'((1+t-tx)/t).
Real check_telescoping(Real x, Real t, int n);

struct AsymptoticReport {
  int M = 0;
  std::vector<Real> ts;
  std::vector<Real> errors;  // |psi' - truncated expansion| at each t
  std::vector<Real> ratios;  // errors[i] / errors[i+1]
  std::vector<Real> expected;  // (t_{i+1}/t_i)^{2M+3}
  bool pass = false;           // every ratio within a factor 4 of the expected one
};

/// Truncation error of 1/t + 1/(2t^2) + sum_{n=1}^{M} B_{2n}/t^{2n+1}, Bernoulli numbers from the catalog.
AsymptoticReport check_asymptotic(int M, const std::vector<Real>& ts);

}  // namespace taucert::numeric
