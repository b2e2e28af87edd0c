#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace epchar {

// Dense univariate polynomial over Q, constant term first. The zero
// polynomial has no coefficients; otherwise the leading one is nonzero.
class polynomial {
 public:
  polynomial() = default;
  polynomial(std::initializer_list<rational> coeffs) : coeffs_(coeffs) { normalize(); }
  explicit polynomial(std::vector<rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static polynomial constant(const rational& c) { return polynomial(std::vector<rational>{c}); }

  // c * x^k
  static polynomial monomial(const rational& c, std::size_t k) {
    std::vector<rational> v(k + 1);
    v[k] = c;
    return polynomial(std::move(v));
  }

  // x - root
  static polynomial linear(const rational& root) { return polynomial{-root, 1}; }

  const std::vector<rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : rational(0); }
  const rational& leading() const { return coeffs_.back(); }

  rational operator()(const rational& x) const {
    rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  polynomial& operator+=(const polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }
  polynomial& operator-=(const polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }
  polynomial& operator*=(const rational& s) {
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
  }

  friend polynomial operator+(polynomial a, const polynomial& b) { return a += b; }
  friend polynomial operator-(polynomial a, const polynomial& b) { return a -= b; }
  friend polynomial operator-(polynomial a) { return a *= rational(-1); }
  friend polynomial operator*(polynomial a, const rational& s) { return a *= s; }
  friend polynomial operator*(const rational& s, polynomial a) { return a *= s; }

  friend polynomial operator*(const polynomial& a, const polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return polynomial(std::move(out));
  }
  polynomial& operator*=(const polynomial& o) { return *this = *this * o; }

  friend bool operator==(const polynomial&, const polynomial&) = default;

  /// Quotient and remainder of Euclidean division by a nonzero divisor.
  friend std::pair<polynomial, polynomial> divmod(const polynomial& a, const polynomial& b) {
    if (b.is_zero()) raise(errc::invalid_argument, "polynomial division by zero");
    if (a.degree() < b.degree()) return {polynomial{}, a};
    std::vector<rational> rem = a.coeffs_;
    std::vector<rational> quot(a.coeffs_.size() - b.coeffs_.size() + 1);
    const std::size_t db = b.coeffs_.size() - 1;
    for (std::size_t i = quot.size(); i-- > 0;) {
      rational q = rem[i + db] / b.coeffs_.back();
      quot[i] = q;
      if (q == 0) continue;
      for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= q * b.coeffs_[j];
    }
    rem.resize(db);
    return {polynomial(std::move(quot)), polynomial(std::move(rem))};
  }

  friend polynomial pow(const polynomial& p, std::size_t e) {
    polynomial result = constant(1);
    for (std::size_t i = 0; i < e; ++i) result *= p;
    return result;
  }

  /// Renders as e.g. "t^3 - 6t^2 + 12t - 8"; non-integer coefficients are
  /// parenthesised, "(1/2)t".
  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const rational& c = coeffs_[i];
      if (c == 0) continue;
      const bool negative = c < 0;
      const rational mag = negative ? rational(-c) : c;
      if (out.empty())
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      std::string num = is_integral(mag) ? mag.str() : "(" + mag.str() + ")";
      if (i == 0)
        out += mag.str();
      else if (mag != 1)
        out += num;
      if (i >= 1) out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<rational> coeffs_;
};

}  // namespace epchar
