#pragma once

// Exponential-polynomial functions Z -> Q: the canonical form
// delta_r * sum_i a_i(m) lambda_i^m, free sums of basis functions
// m^k lambda^m, the shift-operator action of Q[t] on them, characteristic
// polynomials, and constant-coefficient linear recurrences.

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"
#include "numbers.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace epchar {

// Base lambda of an exponential m -> lambda^m: a nonzero rational or a
// named transcendental. Distinct symbols are assumed algebraically
// independent.
class scalar_base {
 public:
  scalar_base(rational value) : value_(std::move(value)) {}
  scalar_base(std::int64_t value) : value_(rational(value)) {}
  static scalar_base symbol(std::string name) {
    scalar_base b(0);
    b.value_ = std::move(name);
    return b;
  }

  bool is_numeric() const noexcept { return std::holds_alternative<rational>(value_); }
  bool is_symbol() const noexcept { return !is_numeric(); }
  const rational& numeric() const { return std::get<rational>(value_); }
  const std::string& name() const { return std::get<std::string>(value_); }

  std::string to_string() const { return is_numeric() ? numeric().str() : name(); }

  friend bool operator==(const scalar_base&, const scalar_base&) = default;
  friend bool operator<(const scalar_base& a, const scalar_base& b) {
    if (a.is_numeric() != b.is_numeric()) return a.is_numeric();
    return a.is_numeric() ? a.numeric() < b.numeric() : a.name() < b.name();
  }

 private:
  std::variant<rational, std::string> value_;
};

struct exp_term {
  polynomial coeff;  // a_i, as a polynomial in m
  scalar_base base;  // lambda_i
};

class canonical_exppoly;
canonical_exppoly make_canonical(std::int64_t r, std::vector<exp_term> terms);

// phi = delta_r * sum_i a_i eps_{lambda_i}, where delta_r(m) = r if r | m
// and 0 otherwise. Numeric bases have pairwise distinct r-th powers.
class canonical_exppoly {
 public:
  std::int64_t r() const noexcept { return r_; }
  const std::vector<exp_term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_numeric() const {
    for (const auto& t : terms_)
      if (t.base.is_symbol()) return false;
    return true;
  }

 private:
  friend canonical_exppoly make_canonical(std::int64_t r, std::vector<exp_term> terms);
  std::int64_t r_ = 1;
  std::vector<exp_term> terms_;
};

/// Validates and builds the canonical form; zero coefficient polynomials
/// are dropped.
inline canonical_exppoly make_canonical(std::int64_t r, std::vector<exp_term> terms) {
  if (r < 1) raise(errc::invalid_argument, "delta order r must be positive");
  canonical_exppoly out;
  out.r_ = r;
  std::set<std::string> symbols;
  std::vector<rational> powers;
  for (auto& t : terms) {
    if (t.base.is_numeric() && t.base.numeric() == 0) raise(errc::zero_scalar, "exponential base 0 is not allowed");
    if (t.coeff.is_zero()) continue;
    if (t.base.is_symbol()) {
      if (!symbols.insert(t.base.name()).second)
        raise(errc::distinctness_violation, "symbol '" + t.base.name() + "' appears twice");
    } else {
      rational p = power(t.base.numeric(), r);
      for (const auto& q : powers) {
        if (q == p)
          raise(errc::distinctness_violation, "two bases share the " + std::to_string(r) + "-th power " + p.str());
      }
      powers.push_back(std::move(p));
    }
    out.terms_.push_back(std::move(t));
  }
  return out;
}

namespace detail {

inline void require_numeric(const canonical_exppoly& phi) {
  for (const auto& t : phi.terms())
    if (t.base.is_symbol()) raise(errc::symbolic_evaluation, "base '" + t.base.name() + "' is symbolic");
}

}  // namespace detail

inline rational evaluate(const canonical_exppoly& phi, std::int64_t m) {
  detail::require_numeric(phi);
  if (m % phi.r() != 0) return 0;
  rational sum = 0;
  for (const auto& t : phi.terms()) sum += t.coeff(rational(m)) * power(t.base.numeric(), m);
  return sum * rational(phi.r());
}

/// phi(0) = r * sum_i a_i(0); defined for symbolic bases too.
inline rational phi_at_zero(const canonical_exppoly& phi) {
  rational sum = 0;
  for (const auto& t : phi.terms()) sum += t.coeff.coeff(0);
  return sum * rational(phi.r());
}

/// Minimal monic annihilator prod_i (t^r - lambda_i^r)^(deg a_i + 1).
inline polynomial char_poly(const canonical_exppoly& phi) {
  detail::require_numeric(phi);
  polynomial chi = polynomial::constant(1);
  const auto r = static_cast<std::size_t>(phi.r());
  for (const auto& t : phi.terms()) {
    polynomial factor = polynomial::monomial(1, r) - polynomial::constant(power(t.base.numeric(), phi.r()));
    chi *= pow(factor, static_cast<std::size_t>(t.coeff.degree() + 1));
  }
  return chi;
}

/// Values of (c . phi)(m) = sum_j c_j phi(m + j) for m in [lo, hi].
inline std::vector<rational> operator_apply_values(const polynomial& c, const canonical_exppoly& phi, std::int64_t lo,
                                                   std::int64_t hi) {
  detail::require_numeric(phi);
  std::vector<rational> out;
  for (std::int64_t m = lo; m <= hi; ++m) {
    rational v = 0;
    for (std::size_t j = 0; j < c.coeffs().size(); ++j) {
      if (c.coeffs()[j] != 0) v += c.coeffs()[j] * evaluate(phi, m + static_cast<std::int64_t>(j));
    }
    out.push_back(std::move(v));
  }
  return out;
}

// Finite combination of the basis functions eps_{lambda,k}(m) = m^k lambda^m
// over nonzero rational lambda. Zero coefficients are never stored.
class free_exppoly {
 public:
  using key = std::pair<rational, std::size_t>;  // (lambda, k)

  const std::map<key, rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  static free_exppoly basis(const rational& lambda, std::size_t k) {
    free_exppoly f;
    f.add(lambda, k, 1);
    return f;
  }

  void add(const rational& lambda, std::size_t k, const rational& c) {
    if (lambda == 0) raise(errc::zero_scalar, "exponential base 0 is not allowed");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key{lambda, k}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  rational coeff(const rational& lambda, std::size_t k) const {
    auto it = terms_.find(key{lambda, k});
    return it == terms_.end() ? rational(0) : it->second;
  }

  rational operator()(std::int64_t m) const {
    rational sum = 0;
    for (const auto& [k, c] : terms_) sum += c * power(rational(m), static_cast<std::int64_t>(k.second)) * power(k.first, m);
    return sum;
  }

  friend free_exppoly operator+(free_exppoly a, const free_exppoly& b) {
    for (const auto& [k, c] : b.terms_) a.add(k.first, k.second, c);
    return a;
  }
  friend free_exppoly operator*(const rational& s, const free_exppoly& f) {
    free_exppoly out;
    for (const auto& [k, c] : f.terms_) out.add(k.first, k.second, s * c);
    return out;
  }
  friend bool operator==(const free_exppoly&, const free_exppoly&) = default;

  /// Coefficient polynomial of eps_lambda, i.e. sum_k c_{lambda,k} m^k.
  polynomial coefficient_polynomial(const rational& lambda) const {
    std::vector<rational> coeffs;
    for (auto it = terms_.lower_bound(key{lambda, 0}); it != terms_.end() && it->first.first == lambda; ++it) {
      if (coeffs.size() <= it->first.second) coeffs.resize(it->first.second + 1);
      coeffs[it->first.second] = it->second;
    }
    return polynomial(std::move(coeffs));
  }

  std::vector<rational> bases() const {
    std::vector<rational> out;
    for (const auto& [k, c] : terms_)
      if (out.empty() || out.back() != k.first) out.push_back(k.first);
    return out;
  }

 private:
  std::map<key, rational> terms_;
};

/// (t - mu) . eps_{lambda,k} = (lambda - mu) eps_{lambda,k} + lambda sum_{j<k} C(k,j) eps_{lambda,j},
/// extended linearly.
inline free_exppoly shift_linear(const rational& mu, const free_exppoly& f) {
  free_exppoly out;
  for (const auto& [key, c] : f.terms()) {
    const auto& [lambda, k] = key;
    out.add(lambda, k, c * (lambda - mu));
    rational binom = 1;  // C(k, j)
    for (std::size_t j = 0; j < k; ++j) {
      out.add(lambda, j, c * lambda * binom);
      binom = binom * rational(static_cast<std::int64_t>(k - j)) / rational(static_cast<std::int64_t>(j + 1));
    }
  }
  return out;
}

/// Image of f under the shift-operator polynomial c(t), where t shifts m -> m+1.
inline free_exppoly shift_apply(const polynomial& c, const free_exppoly& f) {
  if (c.is_zero()) return {};
  free_exppoly acc = c.leading() * f;
  for (std::size_t j = c.coeffs().size() - 1; j-- > 0;) acc = shift_linear(0, acc) + c.coeffs()[j] * f;
  return acc;
}

/// r with <S> = rZ: the gcd of |s| over S; 0 when S = {0}.
inline std::int64_t monoid_generator(std::span<const std::int64_t> s) {
  if (s.empty()) raise(errc::invalid_argument, "monoid_generator needs a nonempty set");
  std::int64_t g = 0;
  for (std::int64_t v : s) g = std::gcd(g, v < 0 ? -v : v);
  return g;
}

/// Degree of a free exponential polynomial with rational bases: 2 if the
/// coefficient polynomials at lambda and -lambda always agree, else 1.
inline int degree_freeform(const free_exppoly& f) {
  if (f.is_zero()) raise(errc::zero_function, "degree of the zero function is undefined");
  for (const auto& lambda : f.bases()) {
    if (f.coefficient_polynomial(lambda) != f.coefficient_polynomial(-lambda)) return 1;
  }
  return 2;
}

namespace detail {

inline void require_recurrence_poly(const polynomial& c) {
  if (c.degree() < 1 || !c.is_monic()) raise(errc::invalid_argument, "recurrence polynomial must be monic of degree >= 1");
  if (c.coeff(0) == 0) raise(errc::zero_constant_term, "recurrence polynomial has zero constant term");
}

// Nonnegative divisors of |z|, for the rational-root search.
inline std::vector<std::int64_t> integer_divisors(const integer& z) {
  integer a = abs(z);
  if (a > integer(std::int64_t{1} << 50))
    raise(errc::invalid_argument, "coefficient " + a.str() + " too large for rational root search");
  return divisors(a.convert_to<std::int64_t>());
}

// Rational roots of c (c(0) != 0) with multiplicity; the part left over
// without rational roots is returned second.
inline std::pair<std::vector<std::pair<rational, std::size_t>>, polynomial> rational_roots(polynomial c) {
  std::vector<std::pair<rational, std::size_t>> roots;
  while (c.degree() >= 1) {
    // integer coefficients with the same roots
    integer l = 1;
    for (const auto& q : c.coeffs()) l = lcm(l, boost::multiprecision::denominator(q));
    const integer lead = boost::multiprecision::numerator(c.leading() * rational(l));
    const integer tail = boost::multiprecision::numerator(c.coeff(0) * rational(l));
    bool found = false;
    for (std::int64_t p : integer_divisors(tail)) {
      for (std::int64_t q : integer_divisors(lead)) {
        for (int sign : {1, -1}) {
          rational cand(integer(sign * p), integer(q));
          if (c(cand) != 0) continue;
          auto [quot, rem] = divmod(c, polynomial::linear(cand));
          c = std::move(quot);
          if (!roots.empty() && roots.back().first == cand)
            ++roots.back().second;
          else
            roots.emplace_back(cand, 1);
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  // merge repeated discoveries of the same root
  std::map<rational, std::size_t> merged;
  for (auto& [root, mult] : roots) merged[root] += mult;
  return {std::vector<std::pair<rational, std::size_t>>(merged.begin(), merged.end()), c};
}

}  // namespace detail

/// Values of the sequence with characteristic polynomial c and
/// initial values at m = 0..q-1, over the window [lo, hi].
inline std::vector<rational> recurrence_unroll(const polynomial& c, std::span<const rational> initial, std::int64_t lo,
                                               std::int64_t hi) {
  detail::require_recurrence_poly(c);
  const auto q = static_cast<std::int64_t>(c.degree());
  if (static_cast<std::int64_t>(initial.size()) != q)
    raise(errc::invalid_argument, "expected " + std::to_string(q) + " initial values");
  if (hi < lo) return {};
  const std::int64_t first = std::min<std::int64_t>(lo, 0);
  const std::int64_t last = std::max<std::int64_t>(hi, q - 1);
  std::vector<rational> values(static_cast<std::size_t>(last - first + 1));
  auto at = [&](std::int64_t m) -> rational& { return values[static_cast<std::size_t>(m - first)]; };
  for (std::int64_t m = 0; m < q; ++m) at(m) = initial[static_cast<std::size_t>(m)];
  const auto& cs = c.coeffs();
  for (std::int64_t m = q; m <= last; ++m) {
    rational v = 0;
    for (std::int64_t j = 0; j < q; ++j) v -= cs[static_cast<std::size_t>(j)] * at(m - q + j);
    at(m) = std::move(v);
  }
  for (std::int64_t m = -1; m >= first; --m) {
    rational v = 0;
    for (std::int64_t j = 1; j <= q; ++j) v += cs[static_cast<std::size_t>(j)] * at(m + j);
    at(m) = -v / cs[0];
  }
  return {values.begin() + (lo - first), values.begin() + (hi - first + 1)};
}

/// Closed form of the recurrence solution; c must split over Q.
inline free_exppoly recurrence_solve(const polynomial& c, std::span<const rational> initial) {
  detail::require_recurrence_poly(c);
  const auto q = static_cast<std::size_t>(c.degree());
  if (initial.size() != q) raise(errc::invalid_argument, "expected " + std::to_string(q) + " initial values");
  auto [roots, rest] = detail::rational_roots(c);
  if (rest.degree() >= 1)
    raise(errc::not_split_over_rationals, "factor " + rest.to_string() + " has no rational roots");

  std::vector<free_exppoly::key> basis;
  for (const auto& [lambda, mult] : roots)
    for (std::size_t k = 0; k < mult; ++k) basis.emplace_back(lambda, k);

  linalg::matrix system(q, std::vector<rational>(q));
  for (std::size_t m = 0; m < q; ++m) {
    for (std::size_t col = 0; col < q; ++col) {
      const auto& [lambda, k] = basis[col];
      system[m][col] = power(rational(static_cast<std::int64_t>(m)), static_cast<std::int64_t>(k)) *
                       power(lambda, static_cast<std::int64_t>(m));
    }
  }
  const auto x = linalg::solve(std::move(system), std::vector<rational>(initial.begin(), initial.end()));
  free_exppoly out;
  for (std::size_t col = 0; col < q; ++col) out.add(basis[col].first, basis[col].second, x[col]);
  return out;
}

namespace detail {

// "c*m^k*exp(lambda)" pieces joined with " + " / " - ".
struct term_renderer {
  std::string out;

  void add(const rational& c, std::size_t k, const std::string& base, bool base_is_one) {
    if (c == 0) return;
    const bool negative = c < 0;
    const rational mag = negative ? rational(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::vector<std::string> factors;
    if (mag != 1) factors.push_back(mag.str());
    if (k == 1) factors.push_back("m");
    if (k >= 2) factors.push_back("m^" + std::to_string(k));
    if (!base_is_one) factors.push_back("exp(" + base + ")");
    if (factors.empty()) factors.push_back("1");
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "*" : "") + factors[i];
  }

  std::string str() const { return out.empty() ? "0" : out; }
};

}  // namespace detail

/// Renders f in the expression grammar, e.g. "m*exp(2) - 1".
inline std::string to_expression(const free_exppoly& f) {
  detail::term_renderer r;
  for (const auto& [key, c] : f.terms()) r.add(c, key.second, key.first.str(), key.first == 1);
  return r.str();
}

/// Renders phi in the expression grammar, e.g. "delta(4)*(-exp(a) - exp(b))".
inline std::string to_expression(const canonical_exppoly& phi) {
  detail::term_renderer r;
  for (const auto& t : phi.terms()) {
    const bool one = t.base.is_numeric() && t.base.numeric() == 1;
    for (std::size_t k = 0; k < t.coeff.coeffs().size(); ++k) r.add(t.coeff.coeffs()[k], k, t.base.to_string(), one);
  }
  if (phi.r() == 1) return r.str();
  return "delta(" + std::to_string(phi.r()) + ")*(" + r.str() + ")";
}

}  // namespace epchar
