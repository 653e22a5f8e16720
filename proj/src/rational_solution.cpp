#include "taucert/rational_solution.hpp"

#include <cmath>

#include "taucert/linsolve.hpp"
#include "taucert/roots.hpp"

namespace taucert {

GaussRat resultant(const TPoly& p, const TPoly& q) {
  if (p.is_zero() || q.is_zero()) return GaussRat();
  const int m = p.degree();
  const int n = q.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  if (size == 0) return GaussRat(1);
  std::vector<Vec> s(size, Vec(size));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = p.coeff(static_cast<std::size_t>(m - k));
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = q.coeff(static_cast<std::size_t>(n - k));
  GaussRat det(1);
  for (std::size_t c = 0; c < size; ++c) {
    std::size_t piv = c;
    while (piv < size && s[piv][c].is_zero()) ++piv;
    if (piv == size) return GaussRat();
    if (piv != c) {
      std::swap(s[piv], s[c]);
      det = -det;
    }
    det *= s[c][c];
    GaussRat inv = s[c][c].inverse();
    for (std::size_t r = c + 1; r < size; ++r) {
      if (s[r][c].is_zero()) continue;
      GaussRat f = s[r][c] * inv;
      for (std::size_t k = c; k < size; ++k)
        if (!s[c][k].is_zero()) s[r][k] -= f * s[c][k];
    }
  }
  return det;
}

TPoly dispersion_resultant(const TPoly& A, const TPoly& B) {
  const int D = std::max(0, A.degree()) * std::max(0, B.degree());
  // Newton interpolation through k = 0..D.
  std::vector<GaussRat> dd;
  for (int k = 0; k <= D; ++k) dd.push_back(resultant(A, taylor_shift(B, GaussRat(static_cast<long>(k)))));
  for (int j = 1; j <= D; ++j)
    for (int k = D; k >= j; --k)
      dd[static_cast<std::size_t>(k)] = (dd[static_cast<std::size_t>(k)] - dd[static_cast<std::size_t>(k - 1)]) / GaussRat(static_cast<long>(j));
  TPoly r;
  TPoly basis = TPoly::one();
  for (int k = 0; k <= D; ++k) {
    r += basis * dd[static_cast<std::size_t>(k)];
    basis = basis * linear_factor(GaussRat(static_cast<long>(k)));
  }
  return r;
}

namespace {

std::set<long> resultant_dispersion(const TPoly& A, const TPoly& B) {
  std::set<long> out;
  if (A.degree() < 1 || B.degree() < 1) return out;
  TPoly R = dispersion_resultant(A, B);
  auto shares_root = [&](long h) { return gcd(A, taylor_shift(B, GaussRat(h))).degree() > 0; };
  if (R.is_zero()) throw Error(ErrorCode::Inconsistent, "dispersion resultant vanishes identically");
  if (R.degree() == 0) return out;

  double lead = std::sqrt(R.lead().norm().get_d());
  double bound = 0;
  for (const auto& c : R.coeffs()) bound = std::max(bound, std::sqrt(c.norm().get_d()) / lead);
  bound += 1;
  std::set<long> cands;
  if (bound <= 5000) {
    for (long h = 0; h <= static_cast<long>(bound); ++h) cands.insert(h);
  } else {
    // Integer roots are rounded numeric roots; each candidate is verified exactly below.
    for (const Complex& z : approximate_roots(squarefree_part(R))) {
      if (std::abs(z.imag()) > 0.5L || z.real() < -1) continue;
      long k = std::lround(static_cast<double>(z.real()));
      for (long d = -1; d <= 1; ++d)
        if (k + d >= 0) cands.insert(k + d);
    }
  }
  for (long h : cands)
    if (R.eval(GaussRat(h)).is_zero() && shares_root(h)) out.insert(h);
  return out;
}

}  // namespace

std::set<long> dispersion_set(const TPoly& A, const TPoly& B) {
  std::set<long> out;
  if (A.degree() < 1 || B.degree() < 1) return out;
  // Split parts: differences of Q(i) roots. A root outside Q(i) never differs from one inside
  // by an integer, so the resultant is only needed between the leftovers.
  RootSplit ra = gaussian_roots(A);
  RootSplit rb = gaussian_roots(B);
  for (const auto& [alpha, ma] : ra.roots)
    for (const auto& [b, mb] : rb.roots) {
      GaussRat h = b - alpha;
      if (h.is_integer() && sgn(h.re()) >= 0) out.insert(h.re().get_num().get_si());
    }
  for (long h : resultant_dispersion(ra.leftover, rb.leftover)) out.insert(h);
  return out;
}

TPoly universal_denominator(const TPoly& a1, const TPoly& a0) {
  TPoly A = a0;
  TPoly B = taylor_shift(a1, GaussRat(-1));
  TPoly U = TPoly::one();
  std::set<long> H = dispersion_set(A, B);
  for (auto it = H.rbegin(); it != H.rend(); ++it) {
    long h = *it;
    TPoly d = gcd(A, taylor_shift(B, GaussRat(h)));
    if (d.degree() < 1) continue;
    A = exact_div(A, d);
    B = exact_div(B, taylor_shift(d, GaussRat(-h)));
    for (long j = 0; j <= h; ++j) U = U * taylor_shift(d, GaussRat(-j));
  }
  return monic(U);
}

namespace {

// Polynomial solutions P of bt P(s+1) - at P(s) = ct: degree bound from leading terms.
int poly_degree_bound(const TPoly& bt, const TPoly& at, const TPoly& ct) {
  TPoly diff = bt - at;
  const int m2 = bt.degree();
  const int m1 = diff.is_zero() ? -1000000 : diff.degree();
  const int dc = ct.is_zero() ? -1000000 : ct.degree();
  int bound = -1;
  if (!ct.is_zero()) {
    if (m1 >= m2) bound = std::max(bound, dc - m1);
    if (m1 <= m2 - 1) bound = std::max(bound, dc - m2 + 1);
  }
  // bt = at: constants solve the homogeneous part.
  if (diff.is_zero()) bound = std::max(bound, 0);
  if (m1 == m2 - 1) {
    // Leading terms cancel when deg P = -lc(bt - at)/lc(bt).
    GaussRat d0 = -diff.lead() / bt.lead();
    if (d0.is_integer() && sgn(d0.re()) >= 0) bound = std::max(bound, static_cast<int>(d0.re().get_num().get_si()));
  }
  return bound;
}

}  // namespace

RationalSolutions rational_solutions(const RatFun& a, const RatFun& f, const MoebiusShift& shift) {
  if (a.is_zero()) throw Error(ErrorCode::Precondition, "coefficient a must be nonzero");
  RatFun A = to_shift_frame(a, shift);
  RatFun F = to_shift_frame(f, shift);
  // B G(s+1) - Ah G(s) = C
  TPoly B = A.den() * F.den();
  TPoly Ah = A.num() * F.den();
  TPoly C = A.den() * F.num();

  RationalSolutions out;
  TPoly U = universal_denominator(B, -Ah);
  out.universal_denominator_degree = U.degree();
  TPoly U1 = taylor_shift(U, GaussRat(1));
  TPoly L = lcm(U, U1);
  TPoly bt = B * exact_div(L, U1);
  TPoly at = Ah * exact_div(L, U);
  TPoly ct = C * L;
  const int D = poly_degree_bound(bt, at, ct);
  out.poly_degree_bound = D;
  if (D < 0) {
    if (ct.is_zero()) out.particular = RatFun();
    return out;
  }

  std::vector<TPoly> cols;
  std::size_t rows = static_cast<std::size_t>(std::max(0, ct.degree()) + 1);
  TPoly sk = TPoly::one();
  for (int k = 0; k <= D; ++k) {
    cols.push_back(bt * taylor_shift(sk, GaussRat(1)) - at * sk);
    rows = std::max(rows, cols.back().size());
    sk = sk.shifted_up(1);
  }
  LinSystem sys;
  sys.cols = cols.size();
  for (std::size_t r = 0; r < rows; ++r) {
    Vec row;
    for (const auto& c : cols) row.push_back(c.coeff(r));
    sys.matrix.push_back(std::move(row));
    sys.rhs.push_back(ct.coeff(r));
  }
  auto to_g = [&](const Vec& p) { return from_shift_frame(ratfun_normalize(TPoly(p), U), shift); };
  if (auto sol = linsolve(sys)) out.particular = to_g(sol->particular);
  std::vector<Vec> ker = nullspace(sys.matrix, sys.cols);
  if (!ker.empty()) out.homogeneous = to_g(ker.front());
  return out;
}

std::optional<RatFun> rational_solution(const RatFun& a, const RatFun& f, const MoebiusShift& shift) {
  return rational_solutions(a, f, shift).particular;
}

}  // namespace taucert
