#include "taucert/certifier.hpp"

#include <algorithm>
#include <cstdio>

namespace taucert {

namespace {

// Coefficient t^j of M_n(t) = sum_k b_k(t) (1 + k beta t)^(-n); L(t^n) = t^n M_n(t).
std::vector<GaussRat> column_factor(const std::vector<TPoly>& b, const GaussRat& beta, long n, std::size_t len) {
  std::vector<GaussRat> out(len);
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (b[k].is_zero()) continue;
    std::vector<GaussRat> e(len);
    if (len) e[0] = GaussRat(1);
    GaussRat kb = beta * GaussRat(static_cast<long>(k));
    for (std::size_t j = 1; j < len; ++j)
      e[j] = e[j - 1] * (-kb) * GaussRat::from_ratio(n + static_cast<long>(j) - 1, static_cast<long>(j));
    for (std::size_t j = 0; j < len; ++j) {
      if (e[j].is_zero()) continue;
      for (int d = 0; d <= b[k].degree() && j + static_cast<std::size_t>(d) < len; ++d)
        out[j + static_cast<std::size_t>(d)] += b[k].coeff(static_cast<std::size_t>(d)) * e[j];
    }
  }
  return out;
}

// Smallest j with M_n[j] not identically zero in n (M_n[j] is a polynomial of degree <= j in n).
long valuation_shift(const std::vector<TPoly>& b, const GaussRat& beta) {
  int maxdeg = 0;
  for (const auto& p : b) maxdeg = std::max(maxdeg, p.degree());
  const long cap = maxdeg + 2 * static_cast<long>(b.size()) + 8;
  for (long j = 0; j <= cap; ++j)
    for (long n = 0; n <= j + 1; ++n)
      if (!column_factor(b, beta, n, static_cast<std::size_t>(j + 1))[static_cast<std::size_t>(j)].is_zero()) return j;
  throw Error(ErrorCode::Precondition, "equation operator vanishes on power series");
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int witness_degree(const RatFun& r) { return std::max(0, r.num().degree()) + std::max(0, r.den().degree()); }

}  // namespace

Series solve_series(const TauEquation& eq0, std::size_t N) {
  TauEquation eq = canonical(eq0);
  std::vector<TPoly> b;
  for (const auto& c : eq.coeffs) b.push_back(c.num());
  const long v = valuation_shift(b, eq.shift.beta);
  const std::size_t rows = N + static_cast<std::size_t>(v);
  std::vector<GaussRat> res = Series::from_ratfun(eq.rhs, rows).scalars();
  std::vector<GaussRat> y(N);
  for (std::size_t n = 0; n < N; ++n) {
    std::vector<GaussRat> m = column_factor(b, eq.shift.beta, static_cast<long>(n), rows - n);
    const GaussRat& lead = m[static_cast<std::size_t>(v)];
    const GaussRat& target = res[n + static_cast<std::size_t>(v)];
    if (lead.is_zero())
      throw Error(ErrorCode::Resonance, "series solution underdetermined at order " + std::to_string(n));
    y[n] = target / lead;
    if (y[n].is_zero()) continue;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (!m[j].is_zero()) res[n + j] -= y[n] * m[j];
  }
  for (long r = 0; r < v; ++r)
    if (!res[static_cast<std::size_t>(r)].is_zero())
      throw Error(ErrorCode::Inconsistent, "no power series solution: residual at order " + std::to_string(r));
  return Series::from_scalars(y);
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Rational: return "Rational";
    case Verdict::StronglyDTranscendental: return "StronglyDTranscendental";
    case Verdict::Unsupported: return "Unsupported";
  }
  return "?";
}

std::uint64_t series_prefix_hash(const std::vector<GaussRat>& prefix) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
  };
  for (const auto& c : prefix) {
    feed(c.to_string());
    feed(",");
  }
  return h;
}

std::string hash_hex(std::uint64_t h) { return hex64(h); }

Certificate certify(const FirstOrderProblem& p) {
  Certificate c;
  c.order = p.order;
  c.equation = canonical(first_order(p.shift, p.a, p.f));
  if (!p.w.is_scalar()) throw Error(ErrorCode::Precondition, "series coefficients must not depend on x");
  if (p.w.order() < p.order)
    throw Error(ErrorCode::TruncationMismatch,
                "series has " + std::to_string(p.w.order()) + " terms, order " + std::to_string(p.order) + " requested");
  if (p.order < 8) throw Error(ErrorCode::OrderTooSmall, "order must be at least 8");
  Series w = p.w.truncated(p.order);
  c.series_prefix = w.scalars();
  if (auto bad = first_failure(c.equation, w))
    throw Error(ErrorCode::Inconsistent, "series does not satisfy the equation at order " + std::to_string(*bad));

  RationalSolutions rs = rational_solutions(p.a, p.f, p.shift);
  c.evidence.universal_denominator_degree = rs.universal_denominator_degree;
  c.evidence.poly_degree_bound = rs.poly_degree_bound;
  if (!rs.particular) {
    c.verdict = Verdict::StronglyDTranscendental;
    c.evidence.kind = "no-rational-solution";
    return c;
  }

  const int N = static_cast<int>(p.order);
  Laurent r = laurent_expand(*rs.particular, N);
  std::optional<Laurent> z;
  if (rs.homogeneous) z = laurent_expand(*rs.homogeneous, N);
  int kmin = std::min(0, r.coeffs.empty() ? 0 : r.valuation);
  if (z && !z->coeffs.empty()) kmin = std::min(kmin, z->valuation);
  auto diff = [&](int k) {
    GaussRat wk = k >= 0 ? c.series_prefix[static_cast<std::size_t>(k)] : GaussRat();
    return wk - r.at(k);
  };
  // w - r must be a constant multiple of z (or zero).
  GaussRat scale;
  if (z)
    for (int k = kmin; k < N; ++k)
      if (!z->at(k).is_zero()) {
        scale = diff(k) / z->at(k);
        break;
      }
  std::optional<long> mismatch;
  for (int k = kmin; k < N && !mismatch; ++k) {
    GaussRat expect = z ? scale * z->at(k) : GaussRat();
    if (diff(k) != expect) mismatch = k;
  }
  if (mismatch) {
    c.verdict = Verdict::StronglyDTranscendental;
    c.evidence.mismatch_index = mismatch;
    c.evidence.kind = (p.f.is_zero() && !z) ? "no-rational-solution" : "rational-solutions-exist-but-series-differs";
    return c;
  }
  RatFun witness = *rs.particular;
  if (z) witness += RatFun(scale) * *rs.homogeneous;
  if (N < 2 * witness_degree(witness) + 8)
    throw Error(ErrorCode::OrderTooSmall, "order " + std::to_string(N) + " too small for a witness of degree " +
                                              std::to_string(witness_degree(witness)));
  c.verdict = Verdict::Rational;
  c.witness = witness;
  c.evidence.kind = "witness-matches";
  return c;
}

Certificate certify(const TauEquation& eq, const Series& w, std::size_t order) {
  if (eq.order() != 1) {
    Certificate c;
    c.equation = eq;
    c.order = order;
    c.verdict = Verdict::Unsupported;
    c.evidence.kind = "unsupported";
    c.note = "only first-order equations are decided (order " + std::to_string(eq.order()) + ")";
    if (w.is_scalar()) c.series_prefix = w.truncated(std::min(order, w.order())).scalars();
    return c;
  }
  auto [a, f] = as_first_order(eq);
  FirstOrderProblem p{eq.shift, a, f, w, order};
  return certify(p);
}

bool recheck(const Certificate& c, const FirstOrderProblem& p) {
  if (c.verdict == Verdict::Unsupported) return true;
  Certificate again = certify(p);
  if (again.verdict != c.verdict || !(again.equation == c.equation)) return false;
  if (series_prefix_hash(again.series_prefix) != series_prefix_hash(c.series_prefix)) return false;
  if (c.verdict == Verdict::Rational) {
    if (!c.witness) return false;
    const RatFun& g = *c.witness;
    if (tau_apply(g, p.shift) != p.a * g + p.f) return false;
    Laurent l = laurent_expand(g, static_cast<int>(c.order));
    if (!l.coeffs.empty() && l.valuation < 0) return false;
    for (std::size_t k = 0; k < c.order; ++k)
      if (l.at(static_cast<int>(k)) != c.series_prefix[k]) return false;
  }
  return true;
}

std::optional<TelescoperWitness> homogeneous_criterion(const RatFun& a, const MoebiusShift& shift, int n_max) {
  if (a.is_zero()) throw Error(ErrorCode::Precondition, "coefficient a must be nonzero");
  return telescoper_decide(partial_d(a, 1) / a, shift, n_max);
}

}  // namespace taucert
