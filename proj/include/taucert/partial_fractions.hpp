#pragma once

#include <vector>

#include "taucert/ratfun.hpp"

namespace taucert {

struct PfTerm {
  GaussRat pole;
  int order = 1;
  GaussRat coeff;  // of 1/(t - pole)^order
};

struct PartialFractions {
  TPoly polynomial_part;
  std::vector<PfTerm> terms;  // sorted by (pole, order); zero coefficients omitted
};

/// Throws NonSplitDenominator when the denominator has a factor without roots in Q(i).
PartialFractions partial_fractions(const RatFun& f);
RatFun reassemble(const PartialFractions& pf);

}  // namespace taucert
