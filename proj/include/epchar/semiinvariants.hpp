#pragma once

// Poincare series of the eigenspace components of the cyclic rotation
// sigma_r : v_1 (x) ... (x) v_r -> v_r (x) v_1 (x) ... (x) v_{r-1}
// on the r-th tensor power of a Z_+-graded vector space V. Component n is
// the eigenspace for omega_r^n, omega_r a fixed primitive r-th root of
// unity. Closed formulas work on P_V(X) alone; the brute_force_* functions
// enumerate basis tuples and their rotation orbits directly.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "error.hpp"
#include "numbers.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace epchar {

/// dims[k] = dim V_k for k = 0..cutoff.
struct graded_dims {
  std::vector<std::uint64_t> dims;

  std::size_t cutoff() const noexcept { return dims.empty() ? 0 : dims.size() - 1; }

  std::uint64_t operator[](std::size_t k) const { return k < dims.size() ? dims[k] : 0; }

  truncated_series poincare_series(std::size_t cutoff) const {
    truncated_series s(cutoff);
    for (std::size_t k = 0; k <= cutoff && k < dims.size(); ++k) s[k] = rational(integer(dims[k]));
    return s;
  }
};

/// g_{r,d} for every positive divisor d of r.
using orbit_profile = std::map<std::int64_t, truncated_series>;

namespace detail {

inline void require_graded(const truncated_series& p) {
  if (!p.has_nonnegative_integer_coeffs())
    raise(errc::invalid_argument, "Poincare series must have nonnegative integer coefficients");
}

inline truncated_series divide_exact(const truncated_series& s, std::int64_t r) {
  truncated_series out = rational(integer(1), integer(r)) * s;
  for (std::size_t k = 0; k <= out.cutoff(); ++k) {
    if (!is_integral(out[k]) || out[k] < 0)
      raise(errc::non_integer_result, "coefficient " + out[k].str() + " of X^" + std::to_string(k) +
                                          " is not a nonnegative integer");
  }
  return out;
}

}  // namespace detail

/// P_{V^r_n}(X) = (1/r) sum_{d|r} c_d(n) P_V(X^d)^{r/d}.
inline truncated_series tensor_component_series(const truncated_series& p, std::int64_t r, std::int64_t n) {
  detail::require_graded(p);
  truncated_series sum(p.cutoff());
  for (std::int64_t d : divisors(r)) {
    const std::int64_t c = ramanujan_sum(d, n);
    if (c == 0) continue;
    sum += rational(c) * series_pow(series_substitute_power(p, d), static_cast<std::uint64_t>(r / d));
  }
  return detail::divide_exact(sum, r);
}

/// g_{d,d}(X) = sum_{e|d} mu(e) P_V(X^e)^{d/e}: tuples of exact rotation order d.
inline truncated_series order_gen_primitive(const truncated_series& p, std::int64_t d) {
  detail::require_graded(p);
  truncated_series sum(p.cutoff());
  for (std::int64_t e : divisors(d)) {
    const int mu = moebius(e);
    if (mu == 0) continue;
    sum += rational(mu) * series_pow(series_substitute_power(p, e), static_cast<std::uint64_t>(d / e));
  }
  return sum;
}

/// g_{r,d}(X) = g_{d,d}(X^{r/d}).
inline truncated_series order_gen(const truncated_series& p, std::int64_t r, std::int64_t d) {
  if (r < 1 || d < 1 || r % d != 0)
    raise(errc::not_a_divisor, std::to_string(d) + " does not divide " + std::to_string(r));
  return series_substitute_power(order_gen_primitive(p, d), r / d);
}

/// P_{V^r_n}(X) = (1/r) sum_{d | gcd(r,n)} d g_{r,r/d}(X), assembled from
/// orbit-order counts rather than Ramanujan sums.
inline truncated_series tensor_component_series_by_orders(const truncated_series& p, std::int64_t r, std::int64_t n) {
  detail::require_graded(p);
  truncated_series sum(p.cutoff());
  const std::int64_t g = n == 0 ? r : std::gcd(r, n < 0 ? -n : n);
  for (std::int64_t d : divisors(g)) sum += rational(d) * order_gen(p, r, r / d);
  return detail::divide_exact(sum, r);
}

namespace detail {

inline constexpr double max_enumeration = 1e7;

// Walks every r-tuple of basis vectors of V_{<=kmax} with total degree
// <= kmax, calling visit(tuple, degree).
template <class Visitor>
void enumerate_tuples(const graded_dims& v, std::int64_t r, std::size_t kmax, Visitor&& visit) {
  if (r < 1) raise(errc::invalid_argument, "tensor power must be positive");
  std::vector<std::size_t> degree_of;  // basis index -> degree
  for (std::size_t k = 0; k <= kmax; ++k)
    for (std::uint64_t s = 0; s < v[k]; ++s) degree_of.push_back(k);
  if (std::pow(static_cast<double>(degree_of.size()), static_cast<double>(r)) > max_enumeration)
    raise(errc::enumeration_too_large, std::to_string(degree_of.size()) + "^" + std::to_string(r) +
                                           " tuples exceed the enumeration limit");
  if (degree_of.empty()) return;

  std::vector<std::size_t> tuple(static_cast<std::size_t>(r));
  auto rec = [&](auto&& self, std::size_t pos, std::size_t degree) -> void {
    if (pos == tuple.size()) {
      visit(std::as_const(tuple), degree);
      return;
    }
    for (std::size_t b = 0; b < degree_of.size(); ++b) {
      if (degree + degree_of[b] > kmax) break;  // degree_of is sorted
      tuple[pos] = b;
      self(self, pos + 1, degree + degree_of[b]);
    }
  };
  rec(rec, 0, 0);
}

// Smallest s > 0 with tau^s(I) = I.
inline std::size_t rotation_order(const std::vector<std::size_t>& t) {
  const std::size_t r = t.size();
  for (std::size_t s = 1; s < r; ++s) {
    if (r % s != 0) continue;
    bool fixed = true;
    for (std::size_t i = 0; i < r && fixed; ++i) fixed = t[i] == t[(i + s) % r];
    if (fixed) return s;
  }
  return r;
}

// True when t is the lexicographically smallest rotation in its orbit.
inline bool is_orbit_representative(const std::vector<std::size_t>& t) {
  const std::size_t r = t.size();
  for (std::size_t s = 1; s < r; ++s) {
    for (std::size_t i = 0; i < r; ++i) {
      const std::size_t a = t[(i + s) % r], b = t[i];
      if (a < b) return false;
      if (a > b) break;
    }
  }
  return true;
}

}  // namespace detail

/// dim (V^r_n)_k = #{orbits O of tau_r on degree-k tuples : (r / gcd(r,n)) | #O}.
inline truncated_series brute_force_component(const graded_dims& v, std::int64_t r, std::int64_t n, std::size_t kmax) {
  truncated_series out(kmax);
  if (r < 1) raise(errc::invalid_argument, "tensor power must be positive");
  const std::int64_t g = n == 0 ? r : std::gcd(r, n < 0 ? -n : n);
  const auto need = static_cast<std::size_t>(r / g);
  std::vector<std::uint64_t> counts(kmax + 1);
  detail::enumerate_tuples(v, r, kmax, [&](const std::vector<std::size_t>& t, std::size_t degree) {
    if (!detail::is_orbit_representative(t)) return;
    if (detail::rotation_order(t) % need == 0) ++counts[degree];
  });
  for (std::size_t k = 0; k <= kmax; ++k) out[k] = rational(integer(counts[k]));
  return out;
}

/// N_{r,d,k} = #{degree-k tuples I : ord I = d}, by direct enumeration.
inline orbit_profile brute_force_order_counts(const graded_dims& v, std::int64_t r, std::size_t kmax) {
  if (r < 1) raise(errc::invalid_argument, "tensor power must be positive");
  std::map<std::int64_t, std::vector<std::uint64_t>> counts;
  for (std::int64_t d : divisors(r)) counts[d].assign(kmax + 1, 0);
  detail::enumerate_tuples(v, r, kmax, [&](const std::vector<std::size_t>& t, std::size_t degree) {
    ++counts[static_cast<std::int64_t>(detail::rotation_order(t))][degree];
  });
  orbit_profile out;
  for (const auto& [d, row] : counts) {
    truncated_series s(kmax);
    for (std::size_t k = 0; k <= kmax; ++k) s[k] = rational(integer(row[k]));
    out.emplace(d, std::move(s));
  }
  return out;
}

}  // namespace epchar
