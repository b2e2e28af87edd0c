#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace epchar::linalg {

using matrix = std::vector<std::vector<rational>>;

/// Row-reduces a copy of m and returns its rank.
inline std::size_t rank(matrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      const rational f = m[i][col] / m[rank][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Solves the square system a * x = b by Gauss-Jordan elimination.
/// Throws singular_system when a is not invertible.
inline std::vector<rational> solve(matrix a, std::vector<rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n) raise(errc::invalid_argument, "right-hand side has the wrong length");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) raise(errc::singular_system, "linear system is singular");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const rational inv = rational(1) / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const rational f = a[i][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  return b;
}

}  // namespace epchar::linalg
