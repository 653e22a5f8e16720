#pragma once

#include <optional>
#include <vector>

#include "taucert/gauss.hpp"

namespace taucert {

using Vec = std::vector<GaussRat>;

struct LinSystem {
  std::size_t cols = 0;
  std::vector<Vec> matrix;  // each row has `cols` entries
  Vec rhs;                  // one entry per row
};

struct LinSolution {
  Vec particular;
  std::vector<Vec> kernel;
};

/// Exact Gauss-Jordan elimination. nullopt when the system is inconsistent.
std::optional<LinSolution> linsolve(const LinSystem& sys);

/// Basis of {v : M v = 0}.
std::vector<Vec> nullspace(const std::vector<Vec>& matrix, std::size_t cols);

}  // namespace taucert
