#pragma once

#include <string>
#include <vector>

#include "taucert/poly.hpp"

namespace taucert {

/// Reduced quotient num/den over Q(i) with den monic.
class RatFun {
 public:
  RatFun() : den_(TPoly::one()) {}
  RatFun(GaussRat c) : num_(std::move(c)), den_(TPoly::one()) {}  // NOLINT(google-explicit-constructor)
  RatFun(long c) : RatFun(GaussRat(c)) {}                          // NOLINT(google-explicit-constructor)
  explicit RatFun(TPoly p) : num_(std::move(p)), den_(TPoly::one()) {}

  static RatFun variable() { return RatFun(TPoly::variable()); }

  const TPoly& num() const { return num_; }
  const TPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
  GaussRat constant_value() const { return num_.coeff(0); }

  RatFun inverse() const;

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// Value at a point that is not a pole.
  GaussRat eval(const GaussRat& t) const;

 private:
  friend RatFun ratfun_normalize(TPoly num, TPoly den);
  TPoly num_;
  TPoly den_;
};

/// Cancels the gcd and makes the denominator monic.
RatFun ratfun_normalize(TPoly num, TPoly den);

/// True when gcd(num, den) = 1 and den is monic.
bool is_reduced(const RatFun& f);

RatFun pow(const RatFun& f, int e);
RatFun derivative(const RatFun& f);

/// f((a t + b) / (c t + d)).
RatFun moebius_substitute(const RatFun& f, const GaussRat& a, const GaussRat& b, const GaussRat& c,
                          const GaussRat& d);

/// Laurent expansion at t = 0: coefficients of t^valuation, t^(valuation+1), ...
struct Laurent {
  int valuation = 0;
  std::vector<GaussRat> coeffs;
  GaussRat at(int k) const {
    int j = k - valuation;
    return (j < 0 || j >= static_cast<int>(coeffs.size())) ? GaussRat() : coeffs[static_cast<std::size_t>(j)];
  }
};
/// Expansion through t^(up_to - 1). The zero function expands to an empty list.
Laurent laurent_expand(const RatFun& f, int up_to);

std::string to_string(const RatFun& f, const std::string& var = "t");
inline std::ostream& operator<<(std::ostream& os, const RatFun& f) { return os << to_string(f); }

}  // namespace taucert
