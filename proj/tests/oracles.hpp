#pragma once

// Test-only reference computations, deliberately independent of the library:
// generating-function coefficients by integer dynamic programming and a
// fraction-free rank over big integers.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace oracle {

/// Coefficients of prod_{i>=1} 1/(1 - t^{2i}) up to t^max (partition counts
/// of d/2 at even d, zero at odd d).
inline std::vector<std::uint64_t> hilbert_series(int max) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(max) + 1, 0);
  c[0] = 1;
  for (int w = 2; w <= max; w += 2)
    for (int d = w; d <= max; ++d) c[d] += c[d - w];
  return c;
}

/// dim (Lambda^n E)_d: coefficient of y^n t^d in prod_{i>=1} (1 + y t^{2i}).
inline std::vector<std::vector<std::uint64_t>> exterior_series(int max_n, int max) {
  std::vector<std::vector<std::uint64_t>> c(static_cast<std::size_t>(max_n) + 1,
                                            std::vector<std::uint64_t>(static_cast<std::size_t>(max) + 1, 0));
  c[0][0] = 1;
  for (int w = 2; w <= max; w += 2)
    for (int n = max_n; n >= 1; --n)
      for (int d = max; d >= w; --d) c[n][d] += c[n - 1][d - w];
  return c;
}

/// dim of the free module on generators in degrees 2, 4, 6, ... at degree d.
inline std::uint64_t free_twisted_dim(int d, int first_generator = 1) {
  const auto h = hilbert_series(d < 0 ? 0 : d);
  std::uint64_t total = 0;
  for (int l = first_generator; 2 * l <= d; ++l) total += h[d - 2 * l];
  return total;
}

/// dim (Omega^n)_d = sum_w dim(Lambda^n E)_w * dim A_{d-w}
inline std::uint64_t forms_dim(int n, int d) {
  const auto h = hilbert_series(d);
  const auto lam = exterior_series(n, d);
  std::uint64_t total = 0;
  for (int w = 0; w <= d; ++w) total += lam[n][w] * h[d - w];
  return total;
}

/// Rank over Q of an integer matrix by Bareiss fraction-free elimination.
inline std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace oracle
