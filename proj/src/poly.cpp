#include "taucert/poly.hpp"

#include <sstream>

namespace taucert {

DivMod divmod(const TPoly& a, const TPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (a.degree() < b.degree()) return {TPoly(), a};
  std::vector<GaussRat> rem = a.coeffs();
  const int db = b.degree();
  const GaussRat inv_lead = b.lead().inverse();
  std::vector<GaussRat> quo(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree(); k >= db; --k) {
    GaussRat q = rem[static_cast<std::size_t>(k)] * inv_lead;
    if (q.is_zero()) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    quo[static_cast<std::size_t>(k - db)] = std::move(q);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {TPoly(std::move(quo)), TPoly(std::move(rem))};
}

TPoly exact_div(const TPoly& a, const TPoly& b) {
  DivMod qr = divmod(a, b);
  if (!qr.remainder.is_zero()) throw Error(ErrorCode::Precondition, "inexact polynomial division");
  return qr.quotient;
}

TPoly monic(const TPoly& p) {
  if (p.is_zero() || p.lead().is_one()) return p;
  return p * p.lead().inverse();
}

TPoly gcd(const TPoly& a, const TPoly& b) {
  TPoly x = monic(a);
  TPoly y = monic(b);
  while (!y.is_zero()) {
    TPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = monic(r);
  }
  return x;
}

TPoly lcm(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return TPoly();
  return monic(exact_div(a, gcd(a, b)) * b);
}

TPoly derivative(const TPoly& p) {
  if (p.degree() <= 0) return TPoly();
  std::vector<GaussRat> d(static_cast<std::size_t>(p.degree()));
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p.coeffs()[k] * GaussRat(static_cast<long>(k));
  return TPoly(std::move(d));
}

TPoly taylor_shift(const TPoly& p, const GaussRat& a) {
  if (a.is_zero() || p.degree() <= 0) return p;
  // Horner with the linear polynomial t + a.
  std::vector<GaussRat> r(p.size());
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    // r <- r * (t + a) + c[k]
    for (std::size_t j = c.size() - 1; j > 0; --j) r[j] = r[j] * a + r[j - 1];
    r[0] = r[0] * a + c[k];
  }
  return TPoly(std::move(r));
}

TPoly compose(const TPoly& p, const TPoly& q) {
  TPoly r;
  for (std::size_t k = p.size(); k-- > 0;) {
    r = r * q;
    r += TPoly(p.coeffs()[k]);
  }
  return r;
}

TPoly pow(const TPoly& p, unsigned e) {
  TPoly result = TPoly::one();
  TPoly base = p;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

TPoly squarefree_part(const TPoly& p) {
  if (p.degree() <= 0) return TPoly::one();
  return monic(exact_div(p, gcd(p, derivative(p))));
}

TPoly reversal(const TPoly& p) {
  std::vector<GaussRat> c(p.coeffs().rbegin(), p.coeffs().rend());
  return TPoly(std::move(c));
}

TPoly linear_factor(const GaussRat& a) { return TPoly(std::vector<GaussRat>{-a, GaussRat(1)}); }

TPoly specialize_x(const XTPoly& p, const GaussRat& x) {
  return p.map([&](const XPoly& c) { return c.eval(x); });
}

XTPoly lift_constant(const TPoly& p) {
  return p.map([](const GaussRat& c) { return XPoly(c); });
}

std::string to_string(const TPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    const GaussRat& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool compound = !c.is_real() && sgn(c.re()) != 0;
    bool negative = !compound && cs[0] == '-';
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    if (negative) cs.erase(0, 1);
    if (compound) cs = "(" + cs + ")";
    if (k == 0) {
      os << cs;
    } else {
      if (cs != "1") os << cs << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace taucert
