#pragma once

#include <optional>
#include <vector>

#include "taucert/partial_fractions.hpp"
#include "taucert/tau.hpp"

namespace taucert {

// All functions here except is_summable / telescoper_decide work in the shift frame
// (variable s, sigma: s -> s + 1).

struct OrbitMember {
  long offset = 0;  // pole is rep + offset
  int order = 1;
  GaussRat coeff;
};

struct Orbit {
  GaussRat rep;  // real part in [0, 1)
  std::vector<OrbitMember> members;
};

struct OrbitDecomposition {
  TPoly polynomial_part;
  std::vector<Orbit> orbits;  // sorted by representative
};

/// The orbit member with real part in [0, 1).
GaussRat orbit_representative(const GaussRat& pole);

OrbitDecomposition orbit_decompose(const RatFun& F);
RatFun reassemble(const OrbitDecomposition& d);

/// Q with Q(s + 1) - Q(s) = P and Q(0) = 0.
TPoly antidifference(const TPoly& P);

struct SumDecomposition {
  RatFun G;
  RatFun rem;
};

/// F = sigma(G) - G + rem, rem carrying one pole per orbit and order at the representative.
SumDecomposition summable_decompose(const RatFun& F);

/// g with tau(g) - g = h, or nullopt.
std::optional<RatFun> is_summable(const RatFun& h, const MoebiusShift& shift);

struct TelescoperWitness {
  int n = 0;
  std::vector<GaussRat> alphas;
  RatFun g;
};

/// Exact recheck of sum_i alpha_i d^i(f) = tau(g) - g.
bool check_witness(const RatFun& f, const MoebiusShift& shift, const TelescoperWitness& w);

/// First n <= n_max admitting constants alpha_0..alpha_n, not all zero, and a rational g
/// with sum_i alpha_i d^i(f) = tau(g) - g. The first nonzero alpha is normalized to 1.
std::optional<TelescoperWitness> telescoper_decide(const RatFun& f, const MoebiusShift& shift, int n_max);

}  // namespace taucert
