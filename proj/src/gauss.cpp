#include "taucert/gauss.hpp"

#include <cctype>

#include "taucert/error.hpp"

namespace taucert {

namespace {

std::string trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool valid_rational_text(const std::string& s) {
  if (s.empty()) return false;
  size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  bool digits = false;
  bool slash = false;
  bool den_digits = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (slash ? den_digits : digits) = true;
    } else if (c == '/' && !slash && digits) {
      slash = true;
    } else {
      return false;
    }
  }
  return digits && (!slash || den_digits);
}

}  // namespace

BigRat parse_bigrat(std::string_view text) {
  std::string s = trim(text);
  if (!valid_rational_text(s)) throw Error(ErrorCode::Parse, "malformed rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  BigRat q;
  q.set_str(s, 10);
  if (q.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "division by zero in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string format_bigrat(const BigRat& q) { return q.get_str(10); }

GaussRat GaussRat::from_ratio(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "division by zero");
  BigRat q(num, den);
  q.canonicalize();
  return GaussRat(q);
}

GaussRat GaussRat::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (is_real()) return GaussRat(BigRat(1) / re_);
  BigRat n = norm();
  return GaussRat(re_ / n, -im_ / n);
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  if (is_real()) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  BigRat r = re_ * o.re_ - im_ * o.im_;
  BigRat i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussRat::to_string() const {
  if (is_real()) return format_bigrat(re_);
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = format_bigrat(im_) + "i";
  }
  if (sgn(re_) == 0) return imag;
  if (imag[0] != '-') imag = "+" + imag;
  return format_bigrat(re_) + imag;
}

GaussRat GaussRat::parse(std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) throw Error(ErrorCode::Parse, "empty Gaussian rational");
  if (s.back() != 'i') return GaussRat(parse_bigrat(s));
  s.pop_back();
  // Split at the last sign that is not the leading one.
  size_t split = std::string::npos;
  for (size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
      split = k;
      break;
    }
  }
  std::string re_text = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_text = split == std::string::npos ? s : s.substr(split);
  BigRat im;
  if (im_text.empty() || im_text == "+") {
    im = 1;
  } else if (im_text == "-") {
    im = -1;
  } else {
    im = parse_bigrat(im_text);
  }
  BigRat re = re_text.empty() ? BigRat(0) : parse_bigrat(re_text);
  return GaussRat(re, im);
}

std::ostream& operator<<(std::ostream& os, const GaussRat& g) { return os << g.to_string(); }

GaussRat pow(GaussRat base, unsigned long e) {
  GaussRat result(1);
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace taucert
