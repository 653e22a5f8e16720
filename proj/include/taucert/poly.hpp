#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "taucert/error.hpp"
#include "taucert/gauss.hpp"

namespace taucert {

template <class C>
class Poly;

namespace detail {
inline bool coeff_is_zero(const GaussRat& g) { return g.is_zero(); }
template <class C>
bool coeff_is_zero(const Poly<C>& p) {
  return p.is_zero();
}
}  // namespace detail

template <class C>
struct RingTraits {
  static C one() { return C(1); }
};

template <class C>
struct RingTraits<Poly<C>> {
  static Poly<C> one() { return Poly<C>(RingTraits<C>::one()); }
};

/// Dense univariate polynomial, coefficients stored from degree 0 upward.
/// The top stored coefficient is never zero; the zero polynomial has no coefficients.
template <class C>
class Poly {
 public:
  using coeff_type = C;

  Poly() = default;
  explicit Poly(C c) {
    if (!detail::coeff_is_zero(c)) c_.push_back(std::move(c));
  }
  explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(C c, std::size_t k) {
    if (detail::coeff_is_zero(c)) return Poly();
    std::vector<C> v(k + 1);
    v[k] = std::move(c);
    return Poly(std::move(v));
  }
  static Poly variable() { return monomial(RingTraits<C>::one(), 1); }
  static Poly one() { return Poly(RingTraits<C>::one()); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  std::size_t size() const { return c_.size(); }

  C coeff(std::size_t k) const { return k < c_.size() ? c_[k] : C{}; }
  const C& lead() const { return c_.back(); }
  const std::vector<C>& coeffs() const { return c_; }

  // Lowest index with a nonzero coefficient; -1 for the zero polynomial.
  int valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!detail::coeff_is_zero(c_[k])) return static_cast<int>(k);
    return -1;
  }

  void set_coeff(std::size_t k, C value) {
    if (k >= c_.size()) {
      if (is_zero_value(value)) return;
      c_.resize(k + 1);
    }
    c_[k] = std::move(value);
    trim();
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const C& s) {
    if (is_zero_value(s)) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    if (a.c_.size() == 1) return b * a.c_[0];
    if (b.c_.size() == 1) return a * b.c_[0];
    std::vector<C> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero_value(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(Poly a, const C& s) { return a *= s; }
  friend Poly operator*(const C& s, Poly a) { return a *= s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Horner evaluation at a value of a (possibly larger) ring V.
  template <class V>
  V eval(const V& v) const {
    if (c_.empty()) return V{};
    V r = V(c_.back());
    for (std::size_t k = c_.size() - 1; k-- > 0;) {
      r *= v;
      r += V(c_[k]);
    }
    return r;
  }

  template <class F>
  auto map(F f) const -> Poly<decltype(f(std::declval<const C&>()))> {
    using R = decltype(f(std::declval<const C&>()));
    std::vector<R> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(f(c));
    return Poly<R>(std::move(out));
  }

  // Multiplication by t^k.
  Poly shifted_up(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<C> v(k);
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
  }

  // Truncated to degree < n.
  Poly truncated(std::size_t n) const {
    if (c_.size() <= n) return *this;
    return Poly(std::vector<C>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
  }

  // Division by t^k, dropping lower terms.
  Poly shifted_down(std::size_t k) const {
    if (k >= c_.size()) return Poly();
    return Poly(std::vector<C>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
  }

 private:
  static bool is_zero_value(const C& c) { return detail::coeff_is_zero(c); }
  void trim() {
    while (!c_.empty() && is_zero_value(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
};

template <class C>
bool is_zero(const Poly<C>& p) {
  return p.is_zero();
}

/// Polynomial over Q(i); the variable is t, s or x depending on context.
using TPoly = Poly<GaussRat>;
/// Polynomial in the parameter x (coefficient ring of series).
using XPoly = Poly<GaussRat>;
/// Polynomial in t whose coefficients are polynomials in x.
using XTPoly = Poly<XPoly>;

// Field algorithms over Q(i).

struct DivMod {
  TPoly quotient;
  TPoly remainder;
};

DivMod divmod(const TPoly& a, const TPoly& b);
/// Exact division; throws when b does not divide a.
TPoly exact_div(const TPoly& a, const TPoly& b);
TPoly monic(const TPoly& p);
/// Monic greatest common divisor; gcd(0, 0) = 0.
TPoly gcd(const TPoly& a, const TPoly& b);
TPoly lcm(const TPoly& a, const TPoly& b);
TPoly derivative(const TPoly& p);
/// p(t + a).
TPoly taylor_shift(const TPoly& p, const GaussRat& a);
/// p(q(t)).
TPoly compose(const TPoly& p, const TPoly& q);
TPoly pow(const TPoly& p, unsigned e);
/// Product of the distinct irreducible factors of p (monic).
TPoly squarefree_part(const TPoly& p);
/// Degree-wise reversal: t^deg(p) p(1/t).
TPoly reversal(const TPoly& p);
/// t - a.
TPoly linear_factor(const GaussRat& a);
/// Evaluate an x-t polynomial at a fixed x.
TPoly specialize_x(const XTPoly& p, const GaussRat& x);
/// Embed a t-polynomial with constant coefficients.
XTPoly lift_constant(const TPoly& p);

std::string to_string(const TPoly& p, const std::string& var = "t");
inline std::ostream& operator<<(std::ostream& os, const TPoly& p) { return os << to_string(p); }

}  // namespace taucert
