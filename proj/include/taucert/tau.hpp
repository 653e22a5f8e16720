#pragma once

#include <optional>

#include "taucert/ratfun.hpp"

namespace taucert {

/// tau_beta: t -> t/(1 + beta t). Only the alpha = 1 family is representable.
struct MoebiusShift {
  GaussRat beta{1};

  static MoebiusShift make(GaussRat beta);
  friend bool operator==(const MoebiusShift& a, const MoebiusShift& b) { return a.beta == b.beta; }
};

RatFun tau_apply(const RatFun& f, const MoebiusShift& shift);
RatFun tau_inverse(const RatFun& f, const MoebiusShift& shift);
/// tau^k for any integer k; tau_beta^k = tau_{k beta}.
RatFun tau_power(const RatFun& f, const MoebiusShift& shift, int k);

/// i-fold application of t^2 d/dt.
RatFun partial_d(const RatFun& f, int i = 1);

/// F(s) = f(1/(beta s)); conjugates tau to s -> s + 1 and the derivation to -(1/beta) d/ds.
RatFun to_shift_frame(const RatFun& f, const MoebiusShift& shift);
RatFun from_shift_frame(const RatFun& F, const MoebiusShift& shift);
/// F(s + k).
RatFun sigma(const RatFun& F, int k = 1);

/// Frame image s0 = 1/(beta t0) of a nonzero pole.
GaussRat pole_to_frame(const GaussRat& t0, const MoebiusShift& shift);

/// m with q = tau^m(p), i.e. s_q - s_p = m in the shift frame; nullopt if none.
std::optional<long> same_orbit(const GaussRat& p, const GaussRat& q, const MoebiusShift& shift);

}  // namespace taucert
