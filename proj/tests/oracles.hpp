#pragma once

// Test-only reference computations, written without the library code paths
// they are used to check.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

namespace rootnum::testing {

/// Determinant by Gaussian elimination over Q.
inline mpz_class rational_determinant(const std::vector<std::vector<long>>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = rows[i][j];
  mpq_class det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const mpq_class factor = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= factor * m[k][j];
    }
  }
  return det.get_num();
}

/// Sylvester matrix of f, g given low-degree-first coefficient lists.
inline std::vector<std::vector<long>> sylvester(const std::vector<long>& f,
                                                const std::vector<long>& g) {
  const std::size_t n = f.size() - 1, m = g.size() - 1;
  std::vector<std::vector<long>> s(n + m, std::vector<long>(n + m, 0));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) s[r][r + i] = f[n - i];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) s[m + r][r + i] = g[m - i];
  return s;
}

inline std::map<long, unsigned> trial_division(long n) {
  std::map<long, unsigned> out;
  if (n < 0) n = -n;
  for (long d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

/// Whether z^2 = a x^2 + b y^2 has a primitive solution mod l^k, by
/// enumerating every triple.
inline bool conic_solvable_naive(long a, long b, long l, int k) {
  long m = 1;
  for (int i = 0; i < k; ++i) m *= l;
  auto mod = [m](long v) { return ((v % m) + m) % m; };
  for (long x = 0; x < m; ++x)
    for (long y = 0; y < m; ++y)
      for (long z = 0; z < m; ++z) {
        if (x % l == 0 && y % l == 0 && z % l == 0) continue;
        if (mod(z * z - a * x * x - b * y * y) == 0) return true;
      }
  return false;
}

}  // namespace rootnum::testing
