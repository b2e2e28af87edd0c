#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace epchar {

// Expression templates are off so that `auto` and implicit conversions see
// plain values.
using integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

inline bool is_integral(const rational& q) { return boost::multiprecision::denominator(q) == 1; }

inline integer to_integer(const rational& q) {
  if (!is_integral(q)) raise(errc::non_integer_result, "value " + q.str() + " is not an integer");
  return boost::multiprecision::numerator(q);
}

// "p" or "p/q" in lowest terms, denominator positive.
inline std::string to_string(const rational& q) { return q.str(); }
inline std::string to_string(const integer& z) { return z.str(); }

// Parses "p" or "p/q" with an optional leading sign.
inline rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return rational(integer(text));
    integer num(text.substr(0, slash));
    integer den(text.substr(slash + 1));
    if (den == 0) raise(errc::invalid_argument, "zero denominator in '" + text + "'");
    return rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const error*>(&e)) throw;
    raise(errc::invalid_argument, "not a rational number: '" + text + "'");
  }
}

// q^e for any integer e; q must be nonzero when e < 0.
inline rational power(const rational& q, std::int64_t e) {
  if (e < 0) {
    if (q == 0) raise(errc::invalid_argument, "zero raised to a negative power");
    return rational(1) / power(q, -e);
  }
  rational result = 1;
  rational base = q;
  auto n = static_cast<std::uint64_t>(e);
  while (n != 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n != 0) base *= base;
  }
  return result;
}

}  // namespace epchar
