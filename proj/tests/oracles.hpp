#pragma once

// Test-only reference computations. None of these call into the code
// paths they are used to check.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <vector>

#include <epchar/exppoly.hpp>
#include <epchar/linalg.hpp>
#include <epchar/rational.hpp>

namespace oracle {

inline std::int64_t totient_by_count(std::int64_t d) {
  std::int64_t n = 0;
  for (std::int64_t k = 1; k <= d; ++k) n += std::gcd(k, d) == 1;
  return n;
}

// (-1)^l for squarefree d with l primes, by stripping factors one at a time.
inline int moebius_by_stripping(std::int64_t d) {
  int sign = 1;
  for (std::int64_t p = 2; d > 1; ++p) {
    if (d % p != 0) continue;
    d /= p;
    if (d % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

// sum of cos(2 pi k n / d) over 1 <= k <= d coprime to d, rounded.
inline std::int64_t ramanujan_by_roots(std::int64_t d, std::int64_t n) {
  double s = 0;
  for (std::int64_t k = 1; k <= d; ++k) {
    if (std::gcd(k, d) != 1) continue;
    const auto phase = static_cast<double>(((k * n) % d + d) % d) / static_cast<double>(d);
    s += std::cos(2 * std::numbers::pi * phase);
  }
  return std::llround(s);
}

// Dense integer polynomial product, truncated.
inline std::vector<epchar::integer> mul(const std::vector<epchar::integer>& a, const std::vector<epchar::integer>& b,
                                        std::size_t cutoff) {
  std::vector<epchar::integer> out(cutoff + 1);
  for (std::size_t i = 0; i < a.size() && i <= cutoff; ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= cutoff; ++j) out[i + j] += a[i] * b[j];
  return out;
}

// prod_j (1 - X^{b_j}) / (1 - X)^M by multiplying M geometric series.
inline std::vector<epchar::integer> rational_series(const std::vector<std::int64_t>& b, std::size_t m,
                                                    std::size_t cutoff) {
  std::vector<epchar::integer> out(cutoff + 1);
  out[0] = 1;
  for (auto e : b) {
    std::vector<epchar::integer> f(static_cast<std::size_t>(e) + 1);
    f[0] = 1;
    f[static_cast<std::size_t>(e)] = -1;
    out = mul(out, f, cutoff);
  }
  const std::vector<epchar::integer> geometric(cutoff + 1, epchar::integer(1));
  for (std::size_t i = 0; i < m; ++i) out = mul(out, geometric, cutoff);
  return out;
}

// Rank of the square Hankel matrix [phi(lo + i + j)], 0 <= i, j < n. For
// n at least the order of the minimal recurrence of phi, this equals that
// order.
inline std::size_t hankel_rank(const epchar::canonical_exppoly& phi, std::int64_t lo, std::size_t n) {
  std::vector<epchar::rational> v;
  for (std::size_t i = 0; i + 1 < 2 * n; ++i) v.push_back(epchar::evaluate(phi, lo + static_cast<std::int64_t>(i)));
  epchar::linalg::matrix h(n, std::vector<epchar::rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = v[i + j];
  return epchar::linalg::rank(std::move(h));
}

}  // namespace oracle
