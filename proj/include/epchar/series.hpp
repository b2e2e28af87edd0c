#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace epchar {

// Power series in one variable with exact coefficients, known through
// X^cutoff. Binary operations truncate to the smaller cutoff.
class truncated_series {
 public:
  explicit truncated_series(std::size_t cutoff = 0) : coeffs_(cutoff + 1) {}

  truncated_series(std::size_t cutoff, std::span<const rational> leading) : coeffs_(cutoff + 1) {
    std::copy_n(leading.begin(), std::min(leading.size(), coeffs_.size()), coeffs_.begin());
  }

  truncated_series(std::size_t cutoff, std::initializer_list<rational> leading)
      : truncated_series(cutoff, std::span<const rational>(leading.begin(), leading.size())) {}

  static truncated_series one(std::size_t cutoff) {
    truncated_series s(cutoff);
    s.coeffs_[0] = 1;
    return s;
  }

  std::size_t cutoff() const noexcept { return coeffs_.size() - 1; }
  const std::vector<rational>& coeffs() const noexcept { return coeffs_; }
  const rational& operator[](std::size_t k) const { return coeffs_.at(k); }
  rational& operator[](std::size_t k) { return coeffs_.at(k); }

  truncated_series truncate(std::size_t cutoff) const {
    return truncated_series(std::min(cutoff, this->cutoff()), coeffs_);
  }

  bool has_nonnegative_integer_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const rational& c) { return c >= 0 && is_integral(c); });
  }

  friend truncated_series operator+(const truncated_series& a, const truncated_series& b) {
    truncated_series out(std::min(a.cutoff(), b.cutoff()));
    for (std::size_t k = 0; k <= out.cutoff(); ++k) out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return out;
  }

  friend truncated_series operator-(const truncated_series& a, const truncated_series& b) {
    truncated_series out(std::min(a.cutoff(), b.cutoff()));
    for (std::size_t k = 0; k <= out.cutoff(); ++k) out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return out;
  }

  friend truncated_series operator*(const truncated_series& a, const truncated_series& b) {
    truncated_series out(std::min(a.cutoff(), b.cutoff()));
    const std::size_t n = out.cutoff();
    for (std::size_t i = 0; i <= n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j <= n; ++j) {
        if (b.coeffs_[j] != 0) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }

  friend truncated_series operator*(const rational& s, truncated_series a) {
    for (auto& c : a.coeffs_) c *= s;
    return a;
  }

  truncated_series& operator+=(const truncated_series& o) { return *this = *this + o; }
  truncated_series& operator*=(const truncated_series& o) { return *this = *this * o; }

  friend bool operator==(const truncated_series&, const truncated_series&) = default;

  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (k != 0) out += ' ';
      out += coeffs_[k].str();
    }
    return out;
  }

 private:
  std::vector<rational> coeffs_;
};

inline truncated_series series_add(const truncated_series& a, const truncated_series& b) { return a + b; }
inline truncated_series series_mul(const truncated_series& a, const truncated_series& b) { return a * b; }

inline truncated_series series_pow(const truncated_series& a, std::uint64_t e) {
  truncated_series result = truncated_series::one(a.cutoff());
  truncated_series base = a;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

/// a(X) -> a(X^d) at the same cutoff.
inline truncated_series series_substitute_power(const truncated_series& a, std::int64_t d) {
  if (d < 1) raise(errc::invalid_argument, "substitution power must be positive");
  truncated_series out(a.cutoff());
  const auto step = static_cast<std::size_t>(d);
  for (std::size_t k = 0; k * step <= a.cutoff(); ++k) out[k * step] = a[k];
  return out;
}

/// prod_j (1 - X^{b_j}) / (1 - X)^M through X^cutoff.
inline truncated_series expand_rational(std::span<const std::int64_t> numerator_exponents,
                                        std::uint64_t denominator_power, std::size_t cutoff) {
  // 1/(1-X)^M has coefficients C(k+M-1, M-1); build them by the ratio
  // C(k+M-1, M-1) = C(k+M-2, M-1) * (k+M-1) / k.
  truncated_series s(cutoff);
  if (denominator_power == 0) {
    s[0] = 1;
  } else {
    rational c = 1;
    s[0] = 1;
    for (std::size_t k = 1; k <= cutoff; ++k) {
      c = c * rational(static_cast<std::int64_t>(k + denominator_power - 1)) / rational(static_cast<std::int64_t>(k));
      s[k] = c;
    }
  }
  for (std::int64_t b : numerator_exponents) {
    if (b < 1) raise(errc::invalid_argument, "numerator exponents must be positive");
    const auto shift = static_cast<std::size_t>(b);
    // multiply in place by (1 - X^b), highest degree first
    for (std::size_t k = cutoff + 1; k-- > shift;) s[k] -= s[k - shift];
  }
  return s;
}

}  // namespace epchar
