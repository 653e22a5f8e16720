#include "taucert/accept/oracles.hpp"

namespace taucert::oracle {

namespace {

std::vector<std::vector<BigInt>> stirling2(std::size_t n) {
  std::vector<std::vector<BigInt>> s(n, std::vector<BigInt>(n));
  if (n == 0) return s;
  s[0][0] = 1;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t k = 1; k <= i; ++k) s[i][k] = BigInt(static_cast<unsigned long>(k)) * s[i - 1][k] + s[i - 1][k - 1];
  return s;
}

BigInt choose(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt fact(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace

std::vector<BigInt> bell_triangle(std::size_t n) {
  std::vector<BigInt> out;
  std::vector<BigInt> row{1};
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(row.front());
    std::vector<BigInt> next{row.back()};
    for (const auto& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return out;
}

std::vector<BigRat> bernoulli_akiyama_tanigawa(std::size_t n) {
  std::vector<BigRat> out;
  std::vector<BigRat> a;
  for (std::size_t m = 0; m < n; ++m) {
    a.emplace_back(BigInt(1), BigInt(static_cast<unsigned long>(m + 1)));
    for (std::size_t j = m; j >= 1; --j) {
      a[j - 1] = BigRat(static_cast<unsigned long>(j)) * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
    out.push_back(a[0]);
  }
  // The algorithm yields B_1 = +1/2.
  if (n > 1) out[1] = -out[1];
  return out;
}

std::vector<BigInt> touchard(std::size_t n, long x) {
  auto s = stirling2(n);
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt acc = 0;
    BigInt xp = 1;
    for (std::size_t k = 0; k <= i; ++k) {
      acc += s[i][k] * xp;
      xp *= x;
    }
    out.push_back(acc);
  }
  return out;
}

std::vector<BigInt> partitions_without_singletons(std::size_t n) {
  auto bell = bell_triangle(n);
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt acc = 0;
    for (std::size_t k = 0; k <= i; ++k) {
      BigInt term = choose(i, k) * bell[k];
      if ((i - k) % 2) acc -= term;
      else acc += term;
    }
    out.push_back(acc);
  }
  return out;
}

std::vector<BigInt> fubini(std::size_t n) {
  std::vector<BigInt> a;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) {
      a.push_back(1);
      continue;
    }
    BigInt acc = 0;
    for (std::size_t k = 1; k <= i; ++k) acc += choose(i, k) * a[i - k];
    a.push_back(acc);
  }
  return a;
}

std::vector<BigInt> zigzag(std::size_t n) {
  // Seidel-Entringer: E(m, k) = E(m, k-1) + E(m-1, m-k).
  std::vector<BigInt> out;
  std::vector<BigInt> prev{1};
  if (n > 0) out.push_back(1);
  for (std::size_t m = 1; m < n; ++m) {
    std::vector<BigInt> row(m + 1);
    row[0] = 0;
    for (std::size_t k = 1; k <= m; ++k) row[k] = row[k - 1] + prev[m - k];
    out.push_back(row[m]);
    prev = std::move(row);
  }
  return out;
}

std::vector<BigInt> springer(std::size_t n) {
  // Derivatives of cos t - sin t at 0 cycle through 1, -1, -1, 1.
  static const long cyc[4] = {1, -1, -1, 1};
  std::vector<BigInt> g;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) {
      g.push_back(1);
      continue;
    }
    BigInt acc = 0;
    for (std::size_t k = 1; k <= i; ++k) acc -= choose(i, k) * cyc[k % 4] * g[i - k];
    g.push_back(acc);
  }
  return g;
}

std::vector<BigRat> genocchi_at_one(std::size_t n) {
  auto b = bernoulli_akiyama_tanigawa(n);
  std::vector<BigRat> out;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, i);
    BigRat g = BigRat(2) * BigRat(BigInt(1) - p2) * b[i];
    g.canonicalize();
    BigRat v = (i == 1 ? BigRat(2) : BigRat(0)) - g;
    v.canonicalize();
    out.push_back(v);
  }
  return out;
}

std::vector<BigInt> paired_blocks(std::size_t n) {
  auto s = stirling2(n);
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt acc = 0;
    for (std::size_t k = 0; 2 * k <= i; ++k) {
      BigInt p2;
      mpz_ui_pow_ui(p2.get_mpz_t(), 2, k);
      acc += s[i][2 * k] * fact(2 * k) / (p2 * fact(k));
    }
    out.push_back(acc);
  }
  return out;
}

bool has_rational_fit(const std::vector<GaussRat>& terms, int dp, int dq) {
  // Unknowns p_0..p_dp, q_0..q_dq; row n: sum_j q_j y_{n-j} - p_n = 0.
  const std::size_t cols = static_cast<std::size_t>(dp + dq + 2);
  std::vector<std::vector<GaussRat>> m;
  for (std::size_t n = 0; n < terms.size(); ++n) {
    std::vector<GaussRat> row(cols);
    if (static_cast<int>(n) <= dp) row[n] = GaussRat(-1);
    for (int j = 0; j <= dq && j <= static_cast<int>(n); ++j)
      row[static_cast<std::size_t>(dp + 1 + j)] = terms[n - static_cast<std::size_t>(j)];
    m.push_back(std::move(row));
  }
  // Plain row reduction; a fit exists iff the rank is below the number of unknowns.
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][c].is_zero()) continue;
      GaussRat f = m[i][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank < cols;
}

}  // namespace taucert::oracle
