#pragma once

#include <cstddef>
#include <vector>

#include "taucert/ratfun.hpp"

namespace taucert {

/// Truncated power series c_0 + c_1 t + ... + c_{N-1} t^{N-1} over Q(i)[x].
class Series {
 public:
  Series() = default;
  explicit Series(std::size_t order) : c_(order) {}
  explicit Series(std::vector<XPoly> coeffs) : c_(std::move(coeffs)) {}

  static Series from_scalars(const std::vector<GaussRat>& v);
  static Series constant(const XPoly& c, std::size_t order);
  static Series one(std::size_t order) { return constant(XPoly::one(), order); }
  /// The series t.
  static Series variable(std::size_t order);
  /// e^{c t} for a coefficient c in Q(i)[x].
  static Series exp_rate(const XPoly& c, std::size_t order);
  /// Expansion of a rational function regular at 0.
  static Series from_ratfun(const RatFun& f, std::size_t order);
  static Series from_poly(const XTPoly& p, std::size_t order);

  std::size_t order() const { return c_.size(); }
  const XPoly& operator[](std::size_t k) const { return c_[k]; }
  XPoly& operator[](std::size_t k) { return c_[k]; }
  const std::vector<XPoly>& coeffs() const { return c_; }

  bool is_zero() const;
  /// True when no coefficient depends on x.
  bool is_scalar() const;
  /// Coefficients as Q(i) values; throws when some coefficient involves x.
  std::vector<GaussRat> scalars() const;
  /// First index with a nonzero coefficient, or -1.
  int valuation() const;

  Series truncated(std::size_t n) const;
  Series specialize_x(const GaussRat& x) const;

  Series operator-() const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const XPoly& s);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const XPoly& s) { return a *= s; }
  friend Series operator*(const XPoly& s, Series a) { return a *= s; }
  friend Series operator*(const Series& a, const Series& b);
  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

 private:
  std::vector<XPoly> c_;
};

Series mul(const Series& a, const Series& b);
Series add(const Series& a, const Series& b);
/// Polynomial in t (coefficients in Q(i)[x]) times a series.
Series mul_poly(const XTPoly& p, const Series& s);
Series mul_poly(const TPoly& p, const Series& s);

/// t-derivative; the result keeps the order N (top coefficient becomes 0).
Series derivative(const Series& f);

Series borel(const Series& f);
Series inverse_borel(const Series& f);
/// (1/(1-t)) f(t/(1-t)).
Series phi_tau(const Series& f);
/// (f - sum_{j<i} f_j t^j) / t^i, of order N - i.
Series divided_difference(const Series& f, std::size_t i);

/// f(g(t)); requires g(0) = 0.
Series compose(const Series& f, const Series& g);
/// exp(f); requires f(0) = 0.
Series exp_series(const Series& f);
/// log(f); requires f(0) = 1.
Series log_series(const Series& f);
/// 1/f; requires f(0) to be a nonzero constant.
Series reciprocal(const Series& f);
/// f(t/(1 + beta t)).
Series tau_substitute(const Series& f, const GaussRat& beta);

}  // namespace taucert
