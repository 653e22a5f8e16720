#include "taucert/tau_equation.hpp"

namespace taucert {

TauEquation canonical(const TauEquation& eq) {
  std::size_t lo = 0;
  std::size_t hi = eq.coeffs.size();
  while (lo < hi && eq.coeffs[lo].is_zero()) ++lo;
  while (hi > lo && eq.coeffs[hi - 1].is_zero()) --hi;
  if (lo == hi) throw Error(ErrorCode::Precondition, "zero equation");

  TauEquation out;
  out.shift = eq.shift;
  std::vector<RatFun> cs(eq.coeffs.begin() + static_cast<std::ptrdiff_t>(lo),
                         eq.coeffs.begin() + static_cast<std::ptrdiff_t>(hi));
  RatFun rhs = eq.rhs;
  if (lo > 0) {
    // Re-index: apply tau^{-lo} to the whole equation.
    for (auto& c : cs) c = tau_power(c, eq.shift, -static_cast<int>(lo));
    rhs = tau_power(rhs, eq.shift, -static_cast<int>(lo));
  }
  TPoly den = TPoly::one();
  for (const auto& c : cs) den = lcm(den, c.den());
  den = lcm(den, rhs.den());
  std::vector<TPoly> nums;
  for (const auto& c : cs) nums.push_back(c.num() * exact_div(den, c.den()));
  TPoly rnum = rhs.num() * exact_div(den, rhs.den());
  TPoly g = rnum;
  for (const auto& n : nums) g = gcd(g, n);
  GaussRat scale = nums.back().lead().inverse();
  if (g.degree() > 0) scale = exact_div(nums.back(), g).lead().inverse();
  for (auto& n : nums) {
    if (g.degree() > 0) n = exact_div(n, g);
    out.coeffs.emplace_back(n * scale);
  }
  if (g.degree() > 0) rnum = exact_div(rnum, g);
  out.rhs = RatFun(rnum * scale);
  return out;
}

TauEquation first_order(const MoebiusShift& shift, const RatFun& a, const RatFun& f) {
  return TauEquation{shift, {-a, RatFun(1)}, f};
}

std::pair<RatFun, RatFun> as_first_order(const TauEquation& eq) {
  if (eq.order() != 1) throw Error(ErrorCode::Unsupported, "equation is not of order 1");
  const RatFun& b1 = eq.coeffs[1];
  return {-eq.coeffs[0] / b1, eq.rhs / b1};
}

Series residual(const TauEquation& eq, const Series& y) {
  const std::size_t N = y.order();
  Series r = -Series::from_ratfun(eq.rhs, N);
  for (std::size_t k = 0; k < eq.coeffs.size(); ++k) {
    if (eq.coeffs[k].is_zero()) continue;
    Series shifted = k == 0 ? y : tau_substitute(y, eq.shift.beta * GaussRat(static_cast<long>(k)));
    if (eq.coeffs[k].is_polynomial())
      r += mul_poly(eq.coeffs[k].num(), shifted);
    else
      r += Series::from_ratfun(eq.coeffs[k], N) * shifted;
  }
  return r;
}

std::optional<std::size_t> first_failure(const TauEquation& eq, const Series& y) {
  int v = residual(eq, y).valuation();
  if (v < 0) return std::nullopt;
  return static_cast<std::size_t>(v);
}

std::string equation_text(const TauEquation& eq) {
  std::string out;
  std::string beta = eq.shift.beta.to_string();
  for (std::size_t k = eq.coeffs.size(); k-- > 0;) {
    if (eq.coeffs[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string op = k == 0 ? "y" : (k == 1 ? "tau(y)" : "tau^" + std::to_string(k) + "(y)");
    const RatFun& c = eq.coeffs[k];
    if (c == RatFun(1)) {
      out += op;
    } else {
      out += "(" + to_string(c) + ")*" + op;
    }
  }
  out += " = " + to_string(eq.rhs);
  out += "   [tau: t -> t/(1 + " + (beta == "1" ? std::string() : "(" + beta + ")*") + "t)]";
  return out;
}

TauEquation TauTemplate::specialize(const GaussRat& x) const {
  TauEquation eq;
  eq.shift = shift;
  for (const auto& c : coeffs) eq.coeffs.emplace_back(specialize_x(c, x));
  eq.rhs = RatFun(specialize_x(rhs, x));
  return eq;
}

Series TauTemplate::residual(const Series& y) const {
  const std::size_t N = y.order();
  Series r = -Series::from_poly(rhs, N);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    Series shifted = k == 0 ? y : tau_substitute(y, shift.beta * GaussRat(static_cast<long>(k)));
    r += mul_poly(coeffs[k], shifted);
  }
  return r;
}

}  // namespace taucert
