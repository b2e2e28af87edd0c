#pragma once

// Elementary multiplicative number theory on machine integers: divisors,
// Moebius, Euler totient and Ramanujan sums. Factorisation is trial
// division, intended for arguments below 10^6.

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace epchar {

namespace detail {

inline void require_positive(std::int64_t v, const char* what) {
  if (v < 1) raise(errc::invalid_argument, std::string(what) + " must be positive, got " + std::to_string(v));
}

// gcd(d, n) with the convention gcd(d, 0) = d.
inline std::int64_t gcd_with_zero(std::int64_t d, std::int64_t n) {
  return n == 0 ? d : std::gcd(d, n < 0 ? -n : n);
}

}  // namespace detail

/// Prime factorisation as (prime, exponent) pairs, primes ascending.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  detail::require_positive(n, "factorize argument");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// Positive divisors of r in ascending order.
inline std::vector<std::int64_t> divisors(std::int64_t r) {
  detail::require_positive(r, "divisors argument");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= r; ++d) {
    if (r % d != 0) continue;
    small.push_back(d);
    if (d != r / d) large.push_back(r / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline int moebius(std::int64_t d) {
  detail::require_positive(d, "moebius argument");
  int sign = 1;
  for (auto [p, e] : factorize(d)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

inline std::int64_t totient(std::int64_t d) {
  detail::require_positive(d, "totient argument");
  std::int64_t result = d;
  for (auto [p, e] : factorize(d)) result = result / p * (p - 1);
  return result;
}

/// c_d(n) = totient(d) * moebius(d') / totient(d'), d' = d / gcd(d, n).
inline std::int64_t ramanujan_sum(std::int64_t d, std::int64_t n) {
  detail::require_positive(d, "ramanujan_sum order");
  const std::int64_t reduced = d / detail::gcd_with_zero(d, n);
  const std::int64_t num = totient(d) * moebius(reduced);
  const std::int64_t den = totient(reduced);
  if (num % den != 0) raise(errc::non_integer_result, "ramanujan sum quotient is not exact");
  return num / den;
}

/// c_d(n) as the sum over e | gcd(d, n) of e * moebius(d / e).
inline std::int64_t ramanujan_sum_divisor_form(std::int64_t d, std::int64_t n) {
  detail::require_positive(d, "ramanujan_sum order");
  std::int64_t sum = 0;
  for (std::int64_t e : divisors(detail::gcd_with_zero(d, n))) sum += e * moebius(d / e);
  return sum;
}

}  // namespace epchar
