#include "taucert/partial_fractions.hpp"

#include <algorithm>

#include "taucert/roots.hpp"

namespace taucert {

PartialFractions partial_fractions(const RatFun& f) {
  PartialFractions out;
  DivMod qr = divmod(f.num(), f.den());
  out.polynomial_part = qr.quotient;
  if (f.den().degree() == 0 || qr.remainder.is_zero()) return out;
  RootSplit split = gaussian_roots(f.den());
  if (split.leftover.degree() > 0)
    throw Error(ErrorCode::NonSplitDenominator, "non-split denominator: factor " + to_string(split.leftover));
  for (const Root& r : split.roots) {
    // Cofactor of (t - r)^m in the denominator, then Taylor data of rem/cofactor at r.
    TPoly cof = f.den();
    for (int k = 0; k < r.multiplicity; ++k) cof = exact_div(cof, linear_factor(r.value));
    RatFun local = ratfun_normalize(taylor_shift(qr.remainder, r.value), taylor_shift(cof, r.value));
    Laurent ex = laurent_expand(local, r.multiplicity);
    for (int k = 0; k < r.multiplicity; ++k) {
      GaussRat c = ex.at(k);
      if (c.is_zero()) continue;
      out.terms.push_back({r.value, r.multiplicity - k, c});
    }
  }
  std::sort(out.terms.begin(), out.terms.end(), [](const PfTerm& a, const PfTerm& b) {
    if (!(a.pole == b.pole)) return a.pole < b.pole;
    return a.order < b.order;
  });
  return out;
}

RatFun reassemble(const PartialFractions& pf) {
  RatFun acc(pf.polynomial_part);
  for (const auto& t : pf.terms)
    acc += ratfun_normalize(TPoly(t.coeff), pow(linear_factor(t.pole), static_cast<unsigned>(t.order)));
  return acc;
}

}  // namespace taucert
