#pragma once

#include <complex>
#include <vector>

#include "taucert/poly.hpp"

namespace taucert {

using Complex = std::complex<long double>;

Complex to_complex(const GaussRat& g);

/// All complex roots of a squarefree polynomial (Aberth iteration).
std::vector<Complex> approximate_roots(const TPoly& p);

struct Root {
  GaussRat value;
  int multiplicity = 0;
};

struct RootSplit {
  std::vector<Root> roots;  // sorted by value
  TPoly leftover;           // monic part with no root in Q(i)
};

/// Roots of p lying in Q(i), each verified exactly.
/// Candidates come from numeric roots r: lc * r is a Gaussian integer once p has Gaussian-integer coefficients,
/// and continued-fraction convergents cover leading coefficients too large to round against.
RootSplit gaussian_roots(const TPoly& p);

/// Scales p by a rational so that every real and imaginary part is an integer with gcd 1.
TPoly primitive_integral(const TPoly& p);

}  // namespace taucert
