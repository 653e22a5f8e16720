#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "taucert/rational_solution.hpp"
#include "taucert/summability.hpp"
#include "taucert/tau_equation.hpp"

namespace taucert {

/// Unique power series solution to order N of a tau-equation (coefficients regular at 0).
/// Throws Resonance when the recursion leaves a coefficient free.
Series solve_series(const TauEquation& eq, std::size_t N);

enum class Verdict { Rational, StronglyDTranscendental, Unsupported };
const char* verdict_name(Verdict v);

struct Evidence {
  std::string kind;  // "no-rational-solution" | "rational-solutions-exist-but-series-differs" | "witness-matches"
  int universal_denominator_degree = 0;
  int poly_degree_bound = -1;
  std::optional<long> mismatch_index;  // first coefficient where the series leaves every rational solution
};

struct Certificate {
  Verdict verdict = Verdict::Unsupported;
  std::optional<RatFun> witness;
  Evidence evidence;
  TauEquation equation;
  std::vector<GaussRat> series_prefix;
  std::size_t order = 0;
  std::string note;
};

struct FirstOrderProblem {
  MoebiusShift shift;
  RatFun a;
  RatFun f;
  Series w;
  std::size_t order = 64;
};

/// FNV-1a over the canonical text of the coefficients.
std::uint64_t series_prefix_hash(const std::vector<GaussRat>& prefix);
std::string hash_hex(std::uint64_t h);

/// Rational verdict with witness, or strong differential transcendence by the inhomogeneous
/// first-order criterion (or its homogeneous counterpart when f = 0).
Certificate certify(const FirstOrderProblem& p);
/// Same for an equation in any form; equations not of order 1 are Unsupported.
Certificate certify(const TauEquation& eq, const Series& w, std::size_t order);

/// Re-runs the decision and confirms the certificate's claims exactly.
bool recheck(const Certificate& c, const FirstOrderProblem& p);

/// Telescoper for the logarithmic derivative d(a)/a.
std::optional<TelescoperWitness> homogeneous_criterion(const RatFun& a, const MoebiusShift& shift, int n_max);

}  // namespace taucert
