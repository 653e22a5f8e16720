#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taucert/series.hpp"
#include "taucert/tau.hpp"

namespace taucert {

/// sum_k coeffs[k] * tau^k(y) = rhs, coefficients listed from shift 0 upward.
struct TauEquation {
  MoebiusShift shift;
  std::vector<RatFun> coeffs;
  RatFun rhs;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const TauEquation& a, const TauEquation& b) {
    return a.shift == b.shift && a.coeffs == b.coeffs && a.rhs == b.rhs;
  }
};

/// Polynomial coefficients without common factor, highest-shift coefficient with leading coefficient 1.
/// Leading and trailing zero coefficients are dropped (the latter by re-indexing the shift).
TauEquation canonical(const TauEquation& eq);

/// tau(y) = a y + f as an order-1 equation.
TauEquation first_order(const MoebiusShift& shift, const RatFun& a, const RatFun& f);

/// For an order-1 equation, (a, f) with tau(y) = a y + f.
std::pair<RatFun, RatFun> as_first_order(const TauEquation& eq);

/// Series of sum_k b_k tau^k(y) - rhs; all coefficients must be regular at 0.
Series residual(const TauEquation& eq, const Series& y);

/// Smallest index of a nonzero residual coefficient, or nullopt when exact to the series order.
std::optional<std::size_t> first_failure(const TauEquation& eq, const Series& y);

/// Human-readable rendering.
std::string equation_text(const TauEquation& eq);

/// Equation whose coefficients are polynomials in t with coefficients in Q(i)[x].
struct TauTemplate {
  MoebiusShift shift;
  std::vector<XTPoly> coeffs;
  XTPoly rhs;

  TauEquation specialize(const GaussRat& x) const;
  /// Residual on a series whose coefficients may involve x.
  Series residual(const Series& y) const;
};

}  // namespace taucert
