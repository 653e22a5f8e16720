#include "taucert/summability.hpp"

#include <algorithm>
#include <map>

#include "taucert/linsolve.hpp"

namespace taucert {

namespace {

BigInt floor_of(const BigRat& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

RatFun inv_power(const GaussRat& pole, int order) {
  return ratfun_normalize(TPoly::one(), pow(linear_factor(pole), static_cast<unsigned>(order)));
}

// Orbit sums keyed by (representative, order) of the proper part.
using OrbitSums = std::map<std::pair<GaussRat, int>, GaussRat>;

OrbitSums orbit_sums(const RatFun& F) {
  OrbitSums out;
  for (const auto& o : orbit_decompose(F).orbits)
    for (const auto& m : o.members) out[{o.rep, m.order}] += m.coeff;
  return out;
}

}  // namespace

GaussRat orbit_representative(const GaussRat& pole) {
  return pole - GaussRat(BigRat(floor_of(pole.re())));
}

OrbitDecomposition orbit_decompose(const RatFun& F) {
  PartialFractions pf = partial_fractions(F);
  OrbitDecomposition out;
  out.polynomial_part = pf.polynomial_part;
  std::map<GaussRat, std::vector<OrbitMember>> by_rep;
  for (const auto& t : pf.terms) {
    GaussRat rep = orbit_representative(t.pole);
    long off = (t.pole - rep).re().get_num().get_si();
    by_rep[rep].push_back({off, t.order, t.coeff});
  }
  for (auto& [rep, members] : by_rep) {
    std::sort(members.begin(), members.end(), [](const OrbitMember& a, const OrbitMember& b) {
      return a.offset != b.offset ? a.offset < b.offset : a.order < b.order;
    });
    out.orbits.push_back({rep, std::move(members)});
  }
  return out;
}

RatFun reassemble(const OrbitDecomposition& d) {
  RatFun acc(d.polynomial_part);
  for (const auto& o : d.orbits)
    for (const auto& m : o.members) acc += RatFun(m.coeff) * inv_power(o.rep + GaussRat(m.offset), m.order);
  return acc;
}

TPoly antidifference(const TPoly& P) {
  TPoly rest = P;
  TPoly Q;
  while (!rest.is_zero()) {
    int d = rest.degree();
    // Delta s^{d+1} = (d+1) s^d + lower terms.
    TPoly mono = TPoly::monomial(rest.lead() / GaussRat(static_cast<long>(d + 1)), static_cast<std::size_t>(d + 1));
    Q += mono;
    rest -= taylor_shift(mono, GaussRat(1)) - mono;
  }
  return Q;
}

SumDecomposition summable_decompose(const RatFun& F) {
  OrbitDecomposition dec = orbit_decompose(F);
  SumDecomposition out;
  out.G = RatFun(antidifference(dec.polynomial_part));
  for (const auto& o : dec.orbits) {
    std::map<int, GaussRat> sums;
    for (const auto& m : o.members) {
      sums[m.order] += m.coeff;
      if (m.offset == 0) continue;
      // c/(s-r-k)^j = c/(s-r)^j - (sigma G_k - G_k) for k > 0, and the mirrored identity for k < 0.
      RatFun Gk;
      if (m.offset > 0) {
        for (long l = 1; l <= m.offset; ++l) Gk += inv_power(o.rep + GaussRat(l), m.order);
        out.G -= RatFun(m.coeff) * Gk;
      } else {
        for (long l = 0; l < -m.offset; ++l) Gk += inv_power(o.rep - GaussRat(l), m.order);
        out.G += RatFun(m.coeff) * Gk;
      }
    }
    for (const auto& [order, c] : sums)
      if (!c.is_zero()) out.rem += RatFun(c) * inv_power(o.rep, order);
  }
  return out;
}

std::optional<RatFun> is_summable(const RatFun& h, const MoebiusShift& shift) {
  SumDecomposition d = summable_decompose(to_shift_frame(h, shift));
  if (!d.rem.is_zero()) return std::nullopt;
  return from_shift_frame(d.G, shift);
}

bool check_witness(const RatFun& f, const MoebiusShift& shift, const TelescoperWitness& w) {
  if (w.alphas.size() != static_cast<std::size_t>(w.n + 1)) return false;
  bool nonzero = false;
  RatFun lhs;
  for (int i = 0; i <= w.n; ++i) {
    const GaussRat& a = w.alphas[static_cast<std::size_t>(i)];
    if (a.is_zero()) continue;
    nonzero = true;
    lhs += RatFun(a) * partial_d(f, i);
  }
  return nonzero && lhs == tau_apply(w.g, shift) - w.g;
}

std::optional<TelescoperWitness> telescoper_decide(const RatFun& f, const MoebiusShift& shift, int n_max) {
  std::vector<RatFun> derivs;
  std::vector<OrbitSums> sums;
  for (int n = 0; n <= n_max; ++n) {
    derivs.push_back(n == 0 ? f : partial_d(derivs.back(), 1));
    sums.push_back(orbit_sums(to_shift_frame(derivs.back(), shift)));

    // One linear condition per (orbit, order): the alphas annihilate the orbit sums.
    std::map<std::pair<GaussRat, int>, Vec> rows;
    for (int i = 0; i <= n; ++i)
      for (const auto& [key, c] : sums[static_cast<std::size_t>(i)]) {
        auto& row = rows[key];
        row.resize(static_cast<std::size_t>(n + 1));
        row[static_cast<std::size_t>(i)] = c;
      }
    std::vector<Vec> m;
    for (auto& [key, row] : rows) m.push_back(row);
    std::vector<Vec> ker = nullspace(m, static_cast<std::size_t>(n + 1));
    if (ker.empty()) continue;

    TelescoperWitness w;
    w.n = n;
    w.alphas = ker.front();
    auto first = std::find_if(w.alphas.begin(), w.alphas.end(), [](const GaussRat& a) { return !a.is_zero(); });
    GaussRat scale = first->inverse();
    for (auto& a : w.alphas) a *= scale;
    RatFun h;
    for (int i = 0; i <= n; ++i)
      if (!w.alphas[static_cast<std::size_t>(i)].is_zero())
        h += RatFun(w.alphas[static_cast<std::size_t>(i)]) * derivs[static_cast<std::size_t>(i)];
    auto g = is_summable(h, shift);
    if (!g) throw Error(ErrorCode::Inconsistent, "telescoper kernel does not yield a summable combination");
    w.g = *g;
    if (!check_witness(f, shift, w)) throw Error(ErrorCode::Inconsistent, "telescoper witness failed its recheck");
    return w;
  }
  return std::nullopt;
}

}  // namespace taucert
