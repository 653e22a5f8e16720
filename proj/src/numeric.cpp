#include "taucert/numeric.hpp"

#include <cmath>

#include "taucert/catalog.hpp"
#include "taucert/error.hpp"

namespace taucert::numeric {

namespace {

// B_2 .. B_10
constexpr Real kB[] = {1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30, 5.0L / 66};

std::vector<Real> catalog_even_bernoulli(int M) {
  std::vector<GaussRat> b = build_ogf("bernoulli-numbers", {}, static_cast<std::size_t>(2 * M + 1)).scalars();
  std::vector<Real> out;
  for (int n = 1; n <= M; ++n) {
    const BigRat& q = b[static_cast<std::size_t>(2 * n)].re();
    out.push_back(static_cast<Real>(q.get_num().get_d()) / static_cast<Real>(q.get_den().get_d()));
  }
  return out;
}

}  // namespace

Real trigamma(Real z, Real shift_to) {
  if (!(z > 0) || !std::isfinite(z))
    throw Error(ErrorCode::Precondition, "trigamma requires z > 0 (poles at nonpositive integers)");
  Real acc = 0;
  while (z < shift_to) {
    acc += 1 / (z * z);
    z += 1;
  }
  Real inv = 1 / z;
  Real inv2 = inv * inv;
  Real tail = 0;
  Real p = inv * inv2;  // z^-3
  for (Real b : kB) {
    tail += b * p;
    p *= inv2;
  }
  return acc + inv + inv2 / 2 + tail;
}

SampleReport check_closed_form(Real x, const std::vector<Real>& ts, Real sign) {
  SampleReport rep;
  for (Real t : ts) {
    Sample s;
    s.t = t;
    Real z = (1 + t - t * x) / t;
    if (!(t > 0) || !(z > 0)) {
      s.skipped = true;
      s.note = "nonpositive trigamma argument";
      rep.samples.push_back(s);
      continue;
    }
    Real F = trigamma(z) / t;
    Real ts_ = t / (1 + t);
    Real tauF = trigamma((1 + ts_ - ts_ * x) / ts_) / ts_;
    Real e = 1 + t - t * x;
    s.residual = std::fabs(tauF - ((1 + t) * F - sign * t * (1 + t) / (e * e)));
    rep.max_residual = std::max(rep.max_residual, s.residual);
    rep.samples.push_back(s);
  }
  return rep;
}

Real check_telescoping(Real x, Real t, int n) {
  if (n < 0) throw Error(ErrorCode::Precondition, "n must be nonnegative");
  Real z = (1 + t - t * x) / t;
  if (!(t > 0) || !(z > 0)) throw Error(ErrorCode::Precondition, "nonpositive trigamma argument");
  Real tn = t / (1 + n * t);
  Real lhs = trigamma(z) - trigamma((1 + tn - tn * x) / tn);
  Real sum = 0;
  for (int k = 1; k <= n; ++k) {
    Real q = t / (1 + k * t - t * x);
    sum += q * q;
  }
  return std::fabs(lhs - sum);
}

AsymptoticReport check_asymptotic(int M, const std::vector<Real>& ts) {
  if (M < 0) throw Error(ErrorCode::Precondition, "M must be nonnegative");
  AsymptoticReport rep;
  rep.M = M;
  rep.ts = ts;
  std::vector<Real> b = catalog_even_bernoulli(M);
  for (Real t : ts) {
    if (t < 10) throw Error(ErrorCode::Precondition, "asymptotic samples must satisfy t >= 10");
    // Reference value: shift far enough that the built-in tail is negligible.
    Real ref = trigamma(t, 400);
    Real approx = 1 / t + 1 / (2 * t * t);
    Real p = 1 / (t * t * t);
    for (Real bn : b) {
      approx += bn * p;
      p /= t * t;
    }
    rep.errors.push_back(std::fabs(ref - approx));
  }
  rep.pass = ts.size() >= 2;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    Real ratio = rep.errors[i] / rep.errors[i + 1];
    Real expect = std::pow(ts[i + 1] / ts[i], static_cast<Real>(2 * M + 3));
    rep.ratios.push_back(ratio);
    rep.expected.push_back(expect);
    if (!(ratio > expect / 4 && ratio < expect * 4)) rep.pass = false;
  }
  return rep;
}

}  // namespace taucert::numeric
