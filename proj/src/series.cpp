#include "taucert/series.hpp"

namespace taucert {

namespace {

void require_same_order(const Series& a, const Series& b) {
  if (a.order() != b.order())
    throw Error(ErrorCode::TruncationMismatch, "truncation mismatch: orders " + std::to_string(a.order()) + " and " +
                                                   std::to_string(b.order()));
}

std::string describe(const XPoly& c) { return to_string(c, "x"); }

}  // namespace

Series Series::from_scalars(const std::vector<GaussRat>& v) {
  std::vector<XPoly> c;
  c.reserve(v.size());
  for (const auto& g : v) c.emplace_back(g);
  return Series(std::move(c));
}

Series Series::constant(const XPoly& c, std::size_t order) {
  Series s(order);
  if (order > 0) s.c_[0] = c;
  return s;
}

Series Series::variable(std::size_t order) {
  Series s(order);
  if (order > 1) s.c_[1] = XPoly::one();
  return s;
}

Series Series::exp_rate(const XPoly& c, std::size_t order) {
  Series s(order);
  XPoly p = XPoly::one();
  for (std::size_t n = 0; n < order; ++n) {
    if (n > 0) p = p * c * GaussRat(BigRat(1, static_cast<unsigned long>(n)));
    s.c_[n] = p;
  }
  return s;
}

Series Series::from_ratfun(const RatFun& f, std::size_t order) {
  if (f.is_zero()) return Series(order);
  if (f.den().coeff(0).is_zero())
    throw Error(ErrorCode::Precondition, "rational function has a pole at 0: " + to_string(f));
  Laurent ex = laurent_expand(f, static_cast<int>(order));
  Series s(order);
  for (std::size_t n = 0; n < order; ++n) s.c_[n] = XPoly(ex.at(static_cast<int>(n)));
  return s;
}

Series Series::from_poly(const XTPoly& p, std::size_t order) {
  Series s(order);
  for (std::size_t n = 0; n < order && n < p.size(); ++n) s.c_[n] = p.coeffs()[n];
  return s;
}

bool Series::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool Series::is_scalar() const {
  for (const auto& c : c_)
    if (c.degree() > 0) return false;
  return true;
}

std::vector<GaussRat> Series::scalars() const {
  std::vector<GaussRat> out;
  out.reserve(c_.size());
  for (std::size_t n = 0; n < c_.size(); ++n) {
    if (c_[n].degree() > 0)
      throw Error(ErrorCode::Precondition, "coefficient " + std::to_string(n) + " depends on x");
    out.push_back(c_[n].coeff(0));
  }
  return out;
}

int Series::valuation() const {
  for (std::size_t n = 0; n < c_.size(); ++n)
    if (!c_[n].is_zero()) return static_cast<int>(n);
  return -1;
}

Series Series::truncated(std::size_t n) const {
  if (n > c_.size()) throw Error(ErrorCode::TruncationMismatch, "cannot extend a truncated series");
  return Series(std::vector<XPoly>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Series Series::specialize_x(const GaussRat& x) const {
  Series s(c_.size());
  for (std::size_t n = 0; n < c_.size(); ++n) s.c_[n] = XPoly(c_[n].eval(x));
  return s;
}

Series Series::operator-() const {
  Series s = *this;
  for (auto& c : s.c_) c = -c;
  return s;
}

Series& Series::operator+=(const Series& o) {
  require_same_order(*this, o);
  for (std::size_t n = 0; n < c_.size(); ++n) c_[n] += o.c_[n];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  require_same_order(*this, o);
  for (std::size_t n = 0; n < c_.size(); ++n) c_[n] -= o.c_[n];
  return *this;
}

Series& Series::operator*=(const XPoly& s) {
  for (auto& c : c_) c = c * s;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  Series r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

Series mul(const Series& a, const Series& b) { return a * b; }
Series add(const Series& a, const Series& b) { return a + b; }

Series mul_poly(const XTPoly& p, const Series& s) {
  const std::size_t n = s.order();
  Series r(n);
  for (std::size_t i = 0; i < p.size() && i < n; ++i) {
    const XPoly& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j)
      if (!s[j].is_zero()) r[i + j] += c * s[j];
  }
  return r;
}

Series mul_poly(const TPoly& p, const Series& s) { return mul_poly(lift_constant(p), s); }

Series derivative(const Series& f) {
  Series r(f.order());
  for (std::size_t n = 1; n < f.order(); ++n) r[n - 1] = f[n] * GaussRat(static_cast<long>(n));
  return r;
}

Series borel(const Series& f) {
  Series r(f.order());
  for (std::size_t n = 0; n < f.order(); ++n) r[n] = f[n] * GaussRat(BigRat(1, factorial(n)));
  return r;
}

Series inverse_borel(const Series& f) {
  Series r(f.order());
  for (std::size_t n = 0; n < f.order(); ++n) r[n] = f[n] * GaussRat(BigRat(factorial(n)));
  return r;
}

Series phi_tau(const Series& f) {
  // Coefficient h is sum_{n<=h} C(h, n) f_n.
  const std::size_t N = f.order();
  Series r(N);
  for (std::size_t h = 0; h < N; ++h) {
    XPoly acc;
    for (std::size_t n = 0; n <= h; ++n)
      if (!f[n].is_zero()) acc += f[n] * GaussRat(BigRat(binomial(h, n)));
    r[h] = std::move(acc);
  }
  return r;
}

Series divided_difference(const Series& f, std::size_t i) {
  if (i >= f.order() && !(i == 0 && f.order() == 0))
    throw Error(ErrorCode::Precondition, "divided difference order exceeds truncation");
  return Series(std::vector<XPoly>(f.coeffs().begin() + static_cast<std::ptrdiff_t>(i), f.coeffs().end()));
}

Series compose(const Series& f, const Series& g) {
  require_same_order(f, g);
  const std::size_t N = f.order();
  if (N == 0) return f;
  if (!g[0].is_zero()) throw Error(ErrorCode::Precondition, "compose requires g(0) = 0, got " + describe(g[0]));
  Series r = Series::constant(f[N - 1], N);
  for (std::size_t k = N - 1; k-- > 0;) {
    r = r * g;
    r[0] += f[k];
  }
  return r;
}

Series exp_series(const Series& f) {
  const std::size_t N = f.order();
  if (N == 0) return f;
  if (!f[0].is_zero()) throw Error(ErrorCode::Precondition, "exp requires f(0) = 0, got " + describe(f[0]));
  // n g_n = sum_{k=1}^{n} k f_k g_{n-k}
  Series g(N);
  g[0] = XPoly::one();
  for (std::size_t n = 1; n < N; ++n) {
    XPoly acc;
    for (std::size_t k = 1; k <= n; ++k)
      if (!f[k].is_zero() && !g[n - k].is_zero()) acc += f[k] * g[n - k] * GaussRat(static_cast<long>(k));
    g[n] = acc * GaussRat(BigRat(1, static_cast<unsigned long>(n)));
  }
  return g;
}

Series log_series(const Series& f) {
  const std::size_t N = f.order();
  if (N == 0) return f;
  if (!(f[0] == XPoly::one())) throw Error(ErrorCode::Precondition, "log requires f(0) = 1, got " + describe(f[0]));
  Series q = derivative(f) * reciprocal(f);
  Series r(N);
  for (std::size_t n = 1; n < N; ++n) r[n] = q[n - 1] * GaussRat(BigRat(1, static_cast<unsigned long>(n)));
  return r;
}

Series reciprocal(const Series& f) {
  const std::size_t N = f.order();
  if (N == 0) return f;
  if (f[0].degree() != 0)
    throw Error(ErrorCode::Precondition, "reciprocal requires an invertible constant term, got " + describe(f[0]));
  GaussRat inv = f[0].coeff(0).inverse();
  Series g(N);
  g[0] = XPoly(inv);
  for (std::size_t n = 1; n < N; ++n) {
    XPoly acc;
    for (std::size_t k = 1; k <= n; ++k)
      if (!f[k].is_zero() && !g[n - k].is_zero()) acc += f[k] * g[n - k];
    g[n] = acc * (-inv);
  }
  return g;
}

Series tau_substitute(const Series& f, const GaussRat& beta) {
  if (beta.is_zero()) throw Error(ErrorCode::Precondition, "shift parameter beta must be nonzero");
  const std::size_t N = f.order();
  Series r(N);
  if (N == 0) return r;
  r[0] = f[0];
  // (t/(1+bt))^n = sum_{m>=n} C(m-1, n-1) (-b)^(m-n) t^m
  std::vector<GaussRat> pw(N);
  pw[0] = GaussRat(1);
  for (std::size_t k = 1; k < N; ++k) pw[k] = pw[k - 1] * (-beta);
  for (std::size_t m = 1; m < N; ++m) {
    XPoly acc;
    for (std::size_t n = 1; n <= m; ++n)
      if (!f[n].is_zero()) acc += f[n] * (pw[m - n] * GaussRat(BigRat(binomial(m - 1, n - 1))));
    r[m] = std::move(acc);
  }
  return r;
}

}  // namespace taucert
