#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taucert/series.hpp"
#include "taucert/tau_equation.hpp"

namespace taucert {

/// coeff * t^m * e^{c t}, with c either a constant or the parameter x.
struct ExpMonomial {
  unsigned m = 0;
  bool rate_is_x = false;
  GaussRat rate;
  XPoly coeff;
};

/// sum_i a_i(u) D^i yhat = sum of ExpMonomials, u = e^{lambda t}.
/// lhs[i] is a polynomial in u with coefficients in Q(i)[x]; init holds OGF coefficients y_0..y_{r-1}.
struct EgfEquation {
  GaussRat lambda{1};
  std::vector<XTPoly> lhs;
  std::vector<ExpMonomial> rhs;
  std::vector<XPoly> init;

  int order() const { return static_cast<int>(lhs.size()) - 1; }
  /// True when some coefficient or rate involves x.
  bool depends_on_x() const;
  /// max_i deg_u a_i.
  int u_degree() const;
};

/// Inverse-Borel image m! t^m / (1 - c t)^{m+1} of t^m e^{ct}.
RatFun inverse_borel_monomial(unsigned m, const GaussRat& c);

/// Linear tau_lambda-equation (canonical form) satisfied by the OGF of every solution.
/// x is required when the equation involves the parameter.
TauEquation compile(const EgfEquation& eq, const std::optional<GaussRat>& x = std::nullopt);

/// EGF solution yhat to order N from the initial OGF coefficients (x specialized).
Series solve_egf(const EgfEquation& eq, std::size_t N, const std::optional<GaussRat>& x = std::nullopt);

struct ResidualReport {
  bool exact = false;
  std::size_t order = 0;                       // order checked
  std::optional<std::size_t> first_failure;    // first nonzero residual coefficient
  std::string summary() const;
};

/// Solves the EGF equation, inverse-Borels, and substitutes into `out`.
ResidualReport verify_compiled(const EgfEquation& eq, const TauEquation& out, std::size_t N,
                               const std::optional<GaussRat>& x = std::nullopt);

}  // namespace taucert
