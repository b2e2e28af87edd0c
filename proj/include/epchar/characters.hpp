#pragma once

// Formal characters of the irreducible level-zero modules attached to an
// exponential-polynomial function phi. The weight space at
// phi(0) alpha/2 - k alpha + n delta has dimension
//   [X^k] (1/r) sum_{d|r} c_d(n) F_phi(X^d)^{r/d},
//   F_phi(X) = prod_{a_i in Z_+} (1 - X^{a_i+1}) / (1 - X)^M,
//   M = sum_i (deg a_i + 1).
// The array stores one period 0 <= n < r of each row.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "error.hpp"
#include "exppoly.hpp"
#include "numbers.hpp"
#include "rational.hpp"
#include "semiinvariants.hpp"
#include "series.hpp"

namespace epchar {

/// True when a is a constant polynomial whose value is a nonnegative integer.
inline bool is_nonnegative_integer_constant(const polynomial& a) {
  if (!a.is_constant()) return false;
  const rational v = a.coeff(0);
  return v >= 0 && is_integral(v);
}

/// Poincare series of the highest-weight module of the truncated current
/// algebra attached to a single coefficient polynomial a:
/// (1 - X^{a+1})/(1 - X) when a is in Z_+, 1/(1 - X)^{deg a + 1} otherwise.
inline truncated_series truncated_current_char(const polynomial& a, std::size_t cutoff) {
  if (a.is_zero()) raise(errc::zero_polynomial, "coefficient polynomial is zero");
  const auto free_generators = static_cast<std::uint64_t>(a.degree() + 1);
  if (!is_nonnegative_integer_constant(a)) return expand_rational({}, free_generators, cutoff);
  truncated_series s(cutoff);
  std::size_t len = cutoff + 1;
  const integer value = to_integer(a.coeff(0));
  if (value < integer(cutoff + 1)) len = value.convert_to<std::size_t>() + 1;
  for (std::size_t k = 0; k < len; ++k) s[k] = 1;
  return s;
}

struct fseries {
  truncated_series series;  // constant term 1
  std::uint64_t denominator_power = 0;  // M
  std::vector<std::int64_t> numerator_exponents;  // a_i + 1 for a_i in Z_+
};

inline fseries f_series(const canonical_exppoly& phi, std::size_t cutoff) {
  if (phi.is_zero()) raise(errc::zero_function, "phi is the zero function");
  fseries f;
  for (const auto& t : phi.terms()) {
    f.denominator_power += static_cast<std::uint64_t>(t.coeff.degree() + 1);
    if (!is_nonnegative_integer_constant(t.coeff)) continue;
    const integer exponent = to_integer(t.coeff.coeff(0)) + 1;
    // exponents beyond the cutoff do not affect the truncation
    f.numerator_exponents.push_back(exponent > integer(cutoff + 1) ? static_cast<std::int64_t>(cutoff + 1)
                                                                   : exponent.convert_to<std::int64_t>());
  }
  f.series = expand_rational(f.numerator_exponents, f.denominator_power, cutoff);
  return f;
}

struct weight {
  rational alpha;     // coefficient of alpha
  std::int64_t delta;  // coefficient of delta
  friend bool operator==(const weight&, const weight&) = default;
};

class character_array {
 public:
  character_array(rational phi0, std::int64_t r, std::vector<std::vector<integer>> rows)
      : phi0_(std::move(phi0)), r_(r), rows_(std::move(rows)) {}

  const rational& phi0() const noexcept { return phi0_; }
  std::int64_t r() const noexcept { return r_; }
  std::size_t cutoff() const noexcept { return rows_.size() - 1; }
  const std::vector<std::vector<integer>>& rows() const noexcept { return rows_; }

  /// Multiplicity at (k, n) for any integer n; rows have period r.
  const integer& at(std::size_t k, std::int64_t n) const {
    const std::int64_t idx = ((n % r_) + r_) % r_;
    return rows_.at(k).at(static_cast<std::size_t>(idx));
  }

  friend bool operator==(const character_array&, const character_array&) = default;

 private:
  rational phi0_;
  std::int64_t r_;
  std::vector<std::vector<integer>> rows_;
};

/// Formal weight phi(0) alpha/2 - k alpha + n delta of cell (k, n).
inline weight weight_of_cell(const character_array& arr, std::size_t k, std::int64_t n) {
  return {arr.phi0() / 2 - rational(static_cast<std::int64_t>(k)), n};
}

namespace detail {

inline integer checked_entry(const rational& v, std::size_t k, std::int64_t n) {
  if (!is_integral(v))
    raise(errc::non_integer_entry, "entry (" + std::to_string(k) + ", " + std::to_string(n) + ") = " + v.str());
  if (v < 0)
    raise(errc::negative_entry, "entry (" + std::to_string(k) + ", " + std::to_string(n) + ") = " + v.str());
  return boost::multiprecision::numerator(v);
}

}  // namespace detail

/// Weight multiplicities for k = 0..cutoff, 0 <= n < r, from the Ramanujan
/// sum formula.
inline character_array make_character_array(const canonical_exppoly& phi, std::size_t cutoff) {
  const fseries f = f_series(phi, cutoff);
  const std::int64_t r = phi.r();
  std::map<std::int64_t, truncated_series> powers;  // d -> F(X^d)^{r/d}
  for (std::int64_t d : divisors(r))
    powers.emplace(d, series_pow(series_substitute_power(f.series, d), static_cast<std::uint64_t>(r / d)));

  std::vector<std::vector<integer>> rows(cutoff + 1, std::vector<integer>(static_cast<std::size_t>(r)));
  for (std::int64_t n = 0; n < r; ++n) {
    truncated_series sum(cutoff);
    for (const auto& [d, s] : powers) {
      const std::int64_t c = ramanujan_sum(d, n);
      if (c != 0) sum += rational(c) * s;
    }
    for (std::size_t k = 0; k <= cutoff; ++k)
      rows[k][static_cast<std::size_t>(n)] = detail::checked_entry(sum[k] / rational(r), k, n);
  }
  return {phi_at_zero(phi), r, std::move(rows)};
}

/// Same array, computed as the semi-invariant components of the r-th
/// tensor power of a space with Poincare series F_phi, counted through
/// rotation-orbit orders.
inline character_array character_array_via_semiinvariants(const canonical_exppoly& phi, std::size_t cutoff) {
  const fseries f = f_series(phi, cutoff);
  const std::int64_t r = phi.r();
  std::vector<std::vector<integer>> rows(cutoff + 1, std::vector<integer>(static_cast<std::size_t>(r)));
  for (std::int64_t n = 0; n < r; ++n) {
    const truncated_series component = tensor_component_series_by_orders(f.series, r, n);
    for (std::size_t k = 0; k <= cutoff; ++k)
      rows[k][static_cast<std::size_t>(n)] = detail::checked_entry(component[k], k, n);
  }
  return {phi_at_zero(phi), r, std::move(rows)};
}

}  // namespace epchar
