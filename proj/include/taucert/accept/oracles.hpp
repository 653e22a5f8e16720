#pragma once

// Reference computations that share no code path with the series engine.

#include <vector>

#include "taucert/gauss.hpp"

namespace taucert::oracle {

/// Bell numbers B_0..B_{n-1} from the Bell triangle.
std::vector<BigInt> bell_triangle(std::size_t n);

/// Bernoulli numbers B_0..B_{n-1} (B_1 = -1/2) via the Akiyama-Tanigawa algorithm.
std::vector<BigRat> bernoulli_akiyama_tanigawa(std::size_t n);

/// Touchard polynomials T_n(x) at an integer x, from Stirling numbers of the second kind.
std::vector<BigInt> touchard(std::size_t n, long x);

/// Number of set partitions of [n] with no singleton blocks, via the binomial recurrence.
std::vector<BigInt> partitions_without_singletons(std::size_t n);

/// Ordered set partitions (Fubini numbers).
std::vector<BigInt> fubini(std::size_t n);

/// Euler zigzag numbers via the Seidel-Entringer boustrophedon.
std::vector<BigInt> zigzag(std::size_t n);

/// Springer numbers: exponential reciprocal of cos t - sin t, in integer arithmetic.
std::vector<BigInt> springer(std::size_t n);

/// Coefficients n! [t^n] 2t e^t/(e^t + 1) = 2[n = 1] - G_n, with G_n = 2 (1 - 2^n) B_n.
std::vector<BigRat> genocchi_at_one(std::size_t n);

/// Set partitions with an even number of blocks grouped in pairs: n! [t^n] exp((e^t - 1)^2 / 2).
std::vector<BigInt> paired_blocks(std::size_t n);

/// Exhaustive search for P/Q with deg P <= dp, deg Q <= dq agreeing with the first terms.
bool has_rational_fit(const std::vector<GaussRat>& terms, int dp, int dq);

}  // namespace taucert::oracle
