#include "taucert/roots.hpp"

#include <algorithm>
#include <cmath>

namespace taucert {

Complex to_complex(const GaussRat& g) {
  return {static_cast<long double>(g.re().get_d()), static_cast<long double>(g.im().get_d())};
}

namespace {

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex r = 0;
  for (std::size_t k = c.size(); k-- > 0;) r = r * z + c[k];
  return r;
}

// Continued-fraction convergents p/q of v that agree with it to about 1e-9, smallest denominators first.
std::vector<BigRat> close_convergents(long double v) {
  std::vector<BigRat> out;
  const long double tol = 1e-9L * std::max(1.0L, std::fabs(v));
  BigInt p0 = 1, q0 = 0, p1 = 0, q1 = 1;
  long double x = v;
  for (int k = 0; k < 40 && out.size() < 2; ++k) {
    long double a = std::floor(x);
    if (std::fabs(a) > 1e18L) break;
    BigInt ai = static_cast<long>(a);
    BigInt p2 = ai * p0 + p1, q2 = ai * q0 + q1;
    p1 = p0;
    q1 = q0;
    p0 = p2;
    q0 = q2;
    BigRat r(p0, q0);
    r.canonicalize();
    if (std::fabs(static_cast<long double>(r.get_d()) - v) <= tol) out.push_back(r);
    long double frac = x - a;
    if (frac < 1e-30L) break;
    x = 1 / frac;
  }
  return out;
}

// Exact candidates for a Gaussian rational near z.
std::vector<GaussRat> candidates(const Complex& z, const GaussRat& lead, const Complex& lc) {
  std::vector<GaussRat> out;
  Complex scaled = lc * z;
  if (std::fabs(scaled.real()) < 1e15L && std::fabs(scaled.imag()) < 1e15L)
    out.push_back(GaussRat(BigRat(static_cast<long>(std::llround(static_cast<double>(scaled.real())))),
                           BigRat(static_cast<long>(std::llround(static_cast<double>(scaled.imag()))))) /
                  lead);
  // When lc is too large for the rounding above, the root itself usually has a small denominator.
  for (const BigRat& re : close_convergents(z.real()))
    for (const BigRat& im : close_convergents(z.imag())) out.emplace_back(re, im);
  return out;
}

}  // namespace

std::vector<Complex> approximate_roots(const TPoly& p) {
  const int n = p.degree();
  if (n < 1) return {};
  std::vector<Complex> c;
  for (const auto& a : p.coeffs()) c.push_back(to_complex(a));
  Complex lead = c.back();
  for (auto& a : c) a /= lead;
  if (n == 1) return {-c[0]};
  std::vector<Complex> dc;
  for (int k = 1; k <= n; ++k) dc.push_back(c[static_cast<std::size_t>(k)] * static_cast<long double>(k));

  // Starting points on a circle of the Fujiwara radius.
  long double radius = 0;
  for (int k = 0; k < n; ++k) {
    long double v = std::pow(std::abs(c[static_cast<std::size_t>(k)]), 1.0L / (n - k));
    radius = std::max(radius, v);
  }
  radius = std::max(radius * 2, 1e-3L);
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    long double ang = 2 * M_PIl * k / n + 0.4L;
    z[static_cast<std::size_t>(k)] = std::polar(radius, ang);
  }
  for (int iter = 0; iter < 800; ++iter) {
    long double worst = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      Complex pv = horner(c, z[i]);
      if (pv == Complex(0)) continue;
      Complex ratio = pv / horner(dc, z[i]);
      Complex sum = 0;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) sum += 1.0L / (z[i] - z[j]);
      Complex w = ratio / (1.0L - ratio * sum);
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0L, std::abs(z[i])));
    }
    if (worst < 1e-18L) break;
  }
  return z;
}

TPoly primitive_integral(const TPoly& p) {
  if (p.is_zero()) return p;
  BigInt den = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.im().get_den_mpz_t());
  }
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    BigInt re = c.re().get_num() * (den / c.re().get_den());
    BigInt im = c.im().get_num() * (den / c.im().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), re.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), im.get_mpz_t());
  }
  return p * GaussRat(make_rat(den, g));
}

RootSplit gaussian_roots(const TPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::Precondition, "roots of the zero polynomial");
  RootSplit out;
  TPoly sq = squarefree_part(p);
  TPoly rest = sq;
  std::vector<GaussRat> found;
  // Repeat on the deflated remainder: clustered roots of a large factor often only resolve once
  // their neighbours have been divided out.
  for (int pass = 0; pass < 6 && rest.degree() >= 1; ++pass) {
    TPoly integral = primitive_integral(rest);
    const GaussRat lead = integral.lead();
    const Complex lc = to_complex(lead);
    bool progress = false;
    for (const Complex& z : approximate_roots(rest))
      for (const GaussRat& cand : candidates(z, lead, lc)) {
        if (std::find(found.begin(), found.end(), cand) != found.end()) continue;
        if (!rest.eval(cand).is_zero()) continue;
        found.push_back(cand);
        rest = exact_div(rest, linear_factor(cand));
        progress = true;
        break;
      }
    if (!progress) break;
  }
  std::sort(found.begin(), found.end());
  TPoly left = p;
  for (const auto& r : found) {
    TPoly lin = linear_factor(r);
    int m = 0;
    while (true) {
      DivMod qr = divmod(left, lin);
      if (!qr.remainder.is_zero()) break;
      left = qr.quotient;
      ++m;
    }
    out.roots.push_back({r, m});
  }
  out.leftover = monic(left);
  return out;
}

}  // namespace taucert
