#include "taucert/linsolve.hpp"

#include "taucert/error.hpp"

namespace taucert {

std::optional<LinSolution> linsolve(const LinSystem& sys) {
  const std::size_t rows = sys.matrix.size();
  const std::size_t cols = sys.cols;
  if (sys.rhs.size() != rows) throw Error(ErrorCode::DimensionMismatch, "dimension mismatch: rhs length");
  for (const auto& r : sys.matrix)
    if (r.size() != cols) throw Error(ErrorCode::DimensionMismatch, "dimension mismatch: row length");

  // Augmented copy; the last column is the right-hand side.
  std::vector<Vec> m(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    m[i] = sys.matrix[i];
    m[i].push_back(sys.rhs[i]);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    GaussRat inv = m[r][c].inverse();
    for (std::size_t k = c; k <= cols; ++k)
      if (!m[r][k].is_zero()) m[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      GaussRat f = m[i][c];
      for (std::size_t k = c; k <= cols; ++k)
        if (!m[r][k].is_zero()) m[i][k] -= f * m[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!m[i][cols].is_zero()) return std::nullopt;

  LinSolution out;
  out.particular.assign(cols, GaussRat());
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t i = 0; i < r; ++i) {
    out.particular[pivot_col[i]] = m[i][cols];
    is_pivot[pivot_col[i]] = true;
  }
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    Vec v(cols);
    v[fc] = GaussRat(1);
    for (std::size_t i = 0; i < r; ++i) v[pivot_col[i]] = -m[i][fc];
    out.kernel.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> nullspace(const std::vector<Vec>& matrix, std::size_t cols) {
  LinSystem sys{cols, matrix, Vec(matrix.size())};
  return linsolve(sys)->kernel;
}

}  // namespace taucert
