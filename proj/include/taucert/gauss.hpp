#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace taucert {

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
using BigRat = mpq_class;
using BigInt = mpz_class;

/// n/d in lowest terms.
inline BigRat make_rat(const BigInt& n, const BigInt& d) {
  BigRat q(n, d);
  q.canonicalize();
  return q;
}

BigRat parse_bigrat(std::string_view text);
std::string format_bigrat(const BigRat& q);

/// An element re + im*i of Q(i).
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRat(BigRat re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussRat(BigRat re, BigRat im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return GaussRat(BigRat(0), BigRat(1)); }
  static GaussRat from_ratio(long num, long den);

  const BigRat& re() const { return re_; }
  const BigRat& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return sgn(im_) == 0 && re_ == 1; }
  bool is_real() const { return sgn(im_) == 0; }
  // True when the value is an ordinary integer (zero imaginary part, unit denominator).
  bool is_integer() const { return is_real() && re_.get_den() == 1; }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  BigRat norm() const { return re_ * re_ + im_ * im_; }
  GaussRat inverse() const;

  GaussRat operator-() const { return GaussRat(-re_, -im_); }
  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  // Lexicographic on (re, im); only used for ordered containers and canonical output.
  friend bool operator<(const GaussRat& a, const GaussRat& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  /// Compact text form: "3/2", "-i", "1/2+3i".
  std::string to_string() const;
  static GaussRat parse(std::string_view text);

 private:
  BigRat re_;
  BigRat im_;
};

inline bool is_zero(const GaussRat& g) { return g.is_zero(); }

std::ostream& operator<<(std::ostream& os, const GaussRat& g);

GaussRat pow(GaussRat base, unsigned long e);
BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

}  // namespace taucert
