#include "taucert/tau.hpp"

namespace taucert {

MoebiusShift MoebiusShift::make(GaussRat beta) {
  if (beta.is_zero()) throw Error(ErrorCode::Precondition, "shift parameter beta must be nonzero");
  return MoebiusShift{std::move(beta)};
}

RatFun tau_power(const RatFun& f, const MoebiusShift& shift, int k) {
  if (k == 0) return f;
  return moebius_substitute(f, GaussRat(1), GaussRat(), shift.beta * GaussRat(static_cast<long>(k)), GaussRat(1));
}

RatFun tau_apply(const RatFun& f, const MoebiusShift& shift) { return tau_power(f, shift, 1); }
RatFun tau_inverse(const RatFun& f, const MoebiusShift& shift) { return tau_power(f, shift, -1); }

RatFun partial_d(const RatFun& f, int i) {
  if (i < 0) throw Error(ErrorCode::Precondition, "derivation order must be nonnegative");
  static const RatFun t2(TPoly::monomial(GaussRat(1), 2));
  RatFun r = f;
  for (int k = 0; k < i && !r.is_zero(); ++k) r = t2 * derivative(r);
  return r;
}

RatFun to_shift_frame(const RatFun& f, const MoebiusShift& shift) {
  return moebius_substitute(f, GaussRat(), GaussRat(1), shift.beta, GaussRat());
}

RatFun from_shift_frame(const RatFun& F, const MoebiusShift& shift) {
  // The substitution t = 1/(beta s) is an involution.
  return to_shift_frame(F, shift);
}

RatFun sigma(const RatFun& F, int k) {
  if (k == 0) return F;
  return ratfun_normalize(taylor_shift(F.num(), GaussRat(static_cast<long>(k))),
                          taylor_shift(F.den(), GaussRat(static_cast<long>(k))));
}

GaussRat pole_to_frame(const GaussRat& t0, const MoebiusShift& shift) {
  if (t0.is_zero()) throw Error(ErrorCode::Precondition, "the point t = 0 has no finite frame image");
  return (shift.beta * t0).inverse();
}

std::optional<long> same_orbit(const GaussRat& p, const GaussRat& q, const MoebiusShift& shift) {
  GaussRat d = pole_to_frame(q, shift) - pole_to_frame(p, shift);
  if (!d.is_integer()) return std::nullopt;
  return d.re().get_num().get_si();
}

}  // namespace taucert
