#include "taucert/egf_compiler.hpp"

namespace taucert {

bool EgfEquation::depends_on_x() const {
  for (const auto& a : lhs)
    for (const auto& c : a.coeffs())
      if (c.degree() > 0) return true;
  for (const auto& m : rhs)
    if (m.rate_is_x || m.coeff.degree() > 0) return true;
  for (const auto& y : init)
    if (y.degree() > 0) return true;
  return false;
}

int EgfEquation::u_degree() const {
  int d = 0;
  for (const auto& a : lhs) d = std::max(d, a.degree());
  return d;
}

RatFun inverse_borel_monomial(unsigned m, const GaussRat& c) {
  TPoly num = TPoly::monomial(GaussRat(BigRat(factorial(m))), m);
  TPoly den = pow(TPoly(std::vector<GaussRat>{GaussRat(1), -c}), m + 1);
  return ratfun_normalize(std::move(num), std::move(den));
}

namespace {

struct Term {
  unsigned m;
  GaussRat rate;
  GaussRat coeff;
};

// The equation with x fixed.
struct Specialized {
  GaussRat lambda;
  std::vector<TPoly> a;
  std::vector<Term> rhs;
  std::vector<GaussRat> init;
  int top = -1;  // largest i with a_i != 0
};

Specialized specialize(const EgfEquation& eq, const std::optional<GaussRat>& x) {
  if (eq.lambda.is_zero()) throw Error(ErrorCode::Precondition, "lambda must be nonzero");
  if (eq.depends_on_x() && !x) throw Error(ErrorCode::Precondition, "equation involves x; a value for x is required");
  GaussRat xv = x.value_or(GaussRat());
  Specialized s;
  s.lambda = eq.lambda;
  for (std::size_t i = 0; i < eq.lhs.size(); ++i) {
    s.a.push_back(specialize_x(eq.lhs[i], xv));
    if (!s.a.back().is_zero()) s.top = static_cast<int>(i);
  }
  if (s.top < 0) throw Error(ErrorCode::Precondition, "zero equation");
  s.a.resize(static_cast<std::size_t>(s.top + 1));
  for (const auto& m : eq.rhs) s.rhs.push_back({m.m, m.rate_is_x ? xv : m.rate, m.coeff.eval(xv)});
  if (static_cast<int>(eq.init.size()) < s.top)
    throw Error(ErrorCode::MissingInitialTerms, "missing initial terms: need " + std::to_string(s.top) + ", got " +
                                                    std::to_string(eq.init.size()));
  for (const auto& y : eq.init) s.init.push_back(y.eval(xv));
  return s;
}

// 1 + c t
RatFun affine(const GaussRat& c) { return RatFun(TPoly(std::vector<GaussRat>{GaussRat(1), c})); }

BigRat falling(long n, int i) {
  BigRat r = 1;
  for (int k = 0; k < i; ++k) r *= n - k;
  return r;
}

}  // namespace

TauEquation compile(const EgfEquation& eq, const std::optional<GaussRat>& x) {
  Specialized s = specialize(eq, x);
  int K = 0;
  for (const auto& a : s.a) K = std::max(K, a.degree());
  const MoebiusShift shift = MoebiusShift::make(s.lambda);
  const RatFun t = RatFun::variable();

  // u^k D^i yhat  <->  Phi^k(Delta^i y) = tau^{-k}(Delta^i y) / (1 - k lambda t); then tau^K throughout.
  std::vector<RatFun> coeffs(static_cast<std::size_t>(K + 1));
  RatFun rhs;
  for (int i = 0; i <= s.top; ++i) {
    const TPoly& a = s.a[static_cast<std::size_t>(i)];
    for (int k = 0; k <= a.degree(); ++k) {
      const GaussRat& c = a.coeffs()[static_cast<std::size_t>(k)];
      if (c.is_zero()) continue;
      const int j = K - k;
      RatFun lin = affine(s.lambda * GaussRat(static_cast<long>(j)));
      RatFun w = affine(s.lambda * GaussRat(static_cast<long>(K))) / lin * RatFun(c);
      coeffs[static_cast<std::size_t>(j)] += w * pow(lin / t, i);
      for (int l = 0; l < i; ++l) {
        const GaussRat& yl = s.init[static_cast<std::size_t>(l)];
        if (yl.is_zero()) continue;
        rhs += w * RatFun(yl) * pow(t / lin, l - i);
      }
    }
  }
  RatFun source;
  for (const auto& m : s.rhs) source += inverse_borel_monomial(m.m, m.rate) * RatFun(m.coeff);
  rhs += tau_power(source, shift, K);
  return canonical(TauEquation{shift, std::move(coeffs), rhs});
}

Series solve_egf(const EgfEquation& eq, std::size_t N, const std::optional<GaussRat>& x) {
  Specialized s = specialize(eq, x);
  const int r = s.top;
  const std::size_t M = N + static_cast<std::size_t>(r) + 2;

  // A_i = a_i(e^{lambda t}) as series.
  std::vector<std::vector<GaussRat>> A;
  std::vector<int> val;
  for (const auto& a : s.a) {
    Series acc(M);
    for (int k = 0; k <= a.degree(); ++k) {
      const GaussRat& c = a.coeffs()[static_cast<std::size_t>(k)];
      if (!c.is_zero()) acc += Series::exp_rate(XPoly(s.lambda * GaussRat(static_cast<long>(k))), M) * XPoly(c);
    }
    A.push_back(acc.scalars());
    val.push_back(acc.valuation());
  }
  int v = 1 << 20;
  for (int i = 0; i <= r; ++i)
    if (val[static_cast<std::size_t>(i)] >= 0) v = std::min(v, val[static_cast<std::size_t>(i)] - i);
  if (v == (1 << 20)) throw Error(ErrorCode::Precondition, "zero equation");

  // Residual rows: rhs minus the contribution of the coefficients solved so far.
  std::vector<GaussRat> R(M);
  for (const auto& m : s.rhs) {
    Series e = Series::exp_rate(XPoly(m.rate), M);
    for (std::size_t n = 0; n + m.m < M; ++n) R[n + m.m] += e[n].coeff(0) * m.coeff;
  }
  auto column = [&](std::size_t n, long row) {
    GaussRat acc;
    for (int i = 0; i <= r; ++i) {
      long idx = row - static_cast<long>(n) + i;
      if (idx < 0 || idx >= static_cast<long>(M) || static_cast<long>(n) < i) continue;
      const GaussRat& c = A[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx)];
      if (!c.is_zero()) acc += c * GaussRat(falling(static_cast<long>(n), i));
    }
    return acc;
  };

  std::vector<GaussRat> yhat(N);
  for (std::size_t n = 0; n < N; ++n) {
    if (n < s.init.size()) {
      yhat[n] = s.init[n] * GaussRat(BigRat(BigInt(1), factorial(n)));
    } else {
      long row = static_cast<long>(n) + v;
      GaussRat lead = row >= 0 ? column(n, row) : GaussRat();
      if (lead.is_zero())
        throw Error(ErrorCode::Resonance, "series solution underdetermined at order " + std::to_string(n));
      yhat[n] = R[static_cast<std::size_t>(row)] / lead;
    }
    if (yhat[n].is_zero()) continue;
    for (long row = std::max(0L, static_cast<long>(n) + v); row < static_cast<long>(M); ++row) {
      GaussRat c = column(n, row);
      if (!c.is_zero()) R[static_cast<std::size_t>(row)] -= c * yhat[n];
    }
  }
  // Rows fully determined by yhat_0..yhat_{N-1} must balance.
  for (long row = 0; row < static_cast<long>(N) + v && row < static_cast<long>(M); ++row)
    if (!R[static_cast<std::size_t>(row)].is_zero())
      throw Error(ErrorCode::Inconsistent, "EGF equation inconsistent with the initial terms at order " +
                                               std::to_string(row));
  return Series::from_scalars(yhat);
}

std::string ResidualReport::summary() const {
  if (exact) return "exact to order " + std::to_string(order);
  return "first nonzero residual at order " + std::to_string(first_failure.value_or(0));
}

ResidualReport verify_compiled(const EgfEquation& eq, const TauEquation& out, std::size_t N,
                               const std::optional<GaussRat>& x) {
  Series y = inverse_borel(solve_egf(eq, N, x));
  ResidualReport rep;
  rep.order = N;
  rep.first_failure = first_failure(out, y);
  rep.exact = !rep.first_failure.has_value();
  return rep;
}

}  // namespace taucert
