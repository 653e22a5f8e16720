#pragma once

#include <optional>
#include <set>
#include <vector>

#include "taucert/tau.hpp"

namespace taucert {

/// Res_s(p(s), q(s)) via the Sylvester determinant.
GaussRat resultant(const TPoly& p, const TPoly& q);

/// R(k) = Res_s(A(s), B(s + k)) as a polynomial in k.
TPoly dispersion_resultant(const TPoly& A, const TPoly& B);

/// Nonnegative integers h with gcd(A(s), B(s + h)) nonconstant.
std::set<long> dispersion_set(const TPoly& A, const TPoly& B);

/// Denominator multiple of every rational solution of a1(s) y(s+1) + a0(s) y(s) = c(s).
TPoly universal_denominator(const TPoly& a1, const TPoly& a0);

struct RationalSolutions {
  std::optional<RatFun> particular;  // some solution of tau(g) = a g + f
  std::optional<RatFun> homogeneous; // nonzero z with tau(z) = a z, if any
  int universal_denominator_degree = 0;
  int poly_degree_bound = -1;
};

/// All rational solutions of tau(g) = a g + f over Q(i)(t).
RationalSolutions rational_solutions(const RatFun& a, const RatFun& f, const MoebiusShift& shift);

/// Some g with tau(g) = a g + f, or nullopt.
std::optional<RatFun> rational_solution(const RatFun& a, const RatFun& f, const MoebiusShift& shift);

}  // namespace taucert
