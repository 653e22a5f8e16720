#include "taucert/ratfun.hpp"

namespace taucert {

RatFun ratfun_normalize(TPoly num, TPoly den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  RatFun r;
  if (num.is_zero()) return r;
  TPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  GaussRat inv = den.lead().inverse();
  r.num_ = num * inv;
  r.den_ = den * inv;
  return r;
}

bool is_reduced(const RatFun& f) {
  if (f.den().is_zero() || !f.den().lead().is_one()) return false;
  if (f.num().is_zero()) return f.den().degree() == 0;
  return gcd(f.num(), f.den()).degree() == 0;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  return ratfun_normalize(den_, num_);
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (den_ == o.den_) return *this = ratfun_normalize(num_ + o.num_, den_);
  // Over the lcm keeps intermediate degrees down.
  TPoly g = gcd(den_, o.den_);
  TPoly da = exact_div(den_, g);
  TPoly db = exact_div(o.den_, g);
  return *this = ratfun_normalize(num_ * db + o.num_ * da, da * o.den_);
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero() || o.is_zero()) return *this = RatFun();
  TPoly g1 = gcd(num_, o.den_);
  TPoly g2 = gcd(o.num_, den_);
  TPoly n = exact_div(num_, g1) * exact_div(o.num_, g2);
  TPoly d = exact_div(den_, g2) * exact_div(o.den_, g1);
  return *this = ratfun_normalize(std::move(n), std::move(d));
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

GaussRat RatFun::eval(const GaussRat& t) const {
  GaussRat d = den_.eval(t);
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "evaluation at a pole");
  return num_.eval(t) / d;
}

RatFun pow(const RatFun& f, int e) {
  if (e < 0) return pow(f.inverse(), -e);
  return ratfun_normalize(pow(f.num(), static_cast<unsigned>(e)), pow(f.den(), static_cast<unsigned>(e)));
}

RatFun derivative(const RatFun& f) {
  TPoly n = derivative(f.num()) * f.den() - f.num() * derivative(f.den());
  return ratfun_normalize(std::move(n), f.den() * f.den());
}

namespace {

// Homogenized image sum_k p_k L^k M^(deg - k) of p at L/M, for a fixed degree slot.
TPoly homogenize(const TPoly& p, const TPoly& l, const TPoly& m, int deg) {
  std::vector<TPoly> lp{TPoly::one()};
  std::vector<TPoly> mp{TPoly::one()};
  for (int k = 1; k <= deg; ++k) {
    lp.push_back(lp.back() * l);
    mp.push_back(mp.back() * m);
  }
  TPoly r;
  for (int k = 0; k <= p.degree(); ++k) {
    const GaussRat& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    r += lp[static_cast<std::size_t>(k)] * mp[static_cast<std::size_t>(deg - k)] * c;
  }
  return r;
}

}  // namespace

RatFun moebius_substitute(const RatFun& f, const GaussRat& a, const GaussRat& b, const GaussRat& c,
                          const GaussRat& d) {
  if ((a * d - b * c).is_zero()) throw Error(ErrorCode::Precondition, "degenerate Moebius map");
  if (f.is_zero()) return f;
  TPoly l(std::vector<GaussRat>{b, a});
  TPoly m(std::vector<GaussRat>{d, c});
  int n = f.num().degree();
  int k = f.den().degree();
  int top = std::max(n, k);
  // Both parts homogenized to the same degree so the powers of M cancel.
  return ratfun_normalize(homogenize(f.num(), l, m, top), homogenize(f.den(), l, m, top));
}

Laurent laurent_expand(const RatFun& f, int up_to) {
  Laurent out;
  if (f.is_zero()) return out;
  int vn = f.num().valuation();
  int vd = f.den().valuation();
  out.valuation = vn - vd;
  int count = up_to - out.valuation;
  if (count <= 0) return out;
  TPoly n = f.num().shifted_down(static_cast<std::size_t>(vn));
  TPoly d = f.den().shifted_down(static_cast<std::size_t>(vd));
  // Power-series division n/d with d(0) != 0.
  GaussRat inv = d.coeff(0).inverse();
  std::vector<GaussRat> q(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    GaussRat acc = n.coeff(static_cast<std::size_t>(k));
    int lim = std::min(k, d.degree());
    for (int j = 1; j <= lim; ++j) acc -= d.coeffs()[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(k - j)];
    q[static_cast<std::size_t>(k)] = acc * inv;
  }
  out.coeffs = std::move(q);
  return out;
}

std::string to_string(const RatFun& f, const std::string& var) {
  if (f.is_polynomial()) return to_string(f.num(), var);
  std::string n = to_string(f.num(), var);
  std::string d = to_string(f.den(), var);
  if (f.num().degree() > 0) n = "(" + n + ")";
  return n + "/(" + d + ")";
}

}  // namespace taucert
