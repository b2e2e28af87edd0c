#pragma once

// Expression syntax for exponential-polynomial functions:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' INT)?
//   primary := INT ('/' INT)? | 'm' | 'exp' '(' base ')' | 'delta' '(' INT ')' | '(' expr ')'
//   base    := '-'? INT ('/' INT)? | IDENT
//
// `m` is the polynomial variable. At most one delta(r) may appear, and only
// as a factor of the outermost product.

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "exppoly.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace epchar {

struct expr {
  enum class kind { number, variable, exp, delta, add, sub, mul, neg, pow };

  kind type = kind::number;
  rational value;                 // number
  scalar_base base{1};            // exp
  std::int64_t order = 0;         // delta
  std::uint64_t exponent = 0;     // pow
  std::vector<expr> args;

  friend bool operator==(const expr&, const expr&) = default;
};

namespace detail {

class expr_parser {
 public:
  explicit expr_parser(std::string_view src) : src_(src) {}

  expr parse() {
    expr e = parse_sum();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    raise(errc::syntax_error, msg + " at position " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_digit() {
    skip_space();
    return pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]));
  }

  bool peek_ident() {
    skip_space();
    return pos_ < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_');
  }

  integer parse_int() {
    if (!peek_digit()) fail("expected an integer");
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return integer(std::string(src_.substr(start, pos_ - start)));
  }

  rational parse_literal() {
    integer num = parse_int();
    if (!accept('/')) return rational(num);
    integer den = parse_int();
    if (den == 0) fail("zero denominator");
    return rational(num, den);
  }

  std::string parse_ident() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  static expr binary(expr::kind k, expr lhs, expr rhs) {
    expr e;
    e.type = k;
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
  }

  expr parse_sum() {
    expr lhs = parse_product();
    for (;;) {
      if (accept('+'))
        lhs = binary(expr::kind::add, std::move(lhs), parse_product());
      else if (accept('-'))
        lhs = binary(expr::kind::sub, std::move(lhs), parse_product());
      else
        return lhs;
    }
  }

  expr parse_product() {
    expr lhs = parse_unary();
    while (accept('*')) lhs = binary(expr::kind::mul, std::move(lhs), parse_unary());
    return lhs;
  }

  expr parse_unary() {
    if (accept('-')) {
      expr e;
      e.type = expr::kind::neg;
      e.args.push_back(parse_unary());
      return e;
    }
    return parse_power();
  }

  expr parse_power() {
    expr base = parse_primary();
    if (!accept('^')) return base;
    const integer n = parse_int();
    if (n > integer(1000)) fail("exponent too large");
    expr e;
    e.type = expr::kind::pow;
    e.exponent = n.convert_to<std::uint64_t>();
    e.args.push_back(std::move(base));
    return e;
  }

  expr parse_primary() {
    expr e;
    if (peek_digit()) {
      e.type = expr::kind::number;
      e.value = parse_literal();
      return e;
    }
    if (accept('(')) {
      e = parse_sum();
      expect(')');
      return e;
    }
    if (!peek_ident()) {
      skip_space();
      fail(pos_ < src_.size() ? "unexpected '" + std::string(1, src_[pos_]) + "'" : "unexpected end of input");
    }
    const std::size_t start = pos_;
    const std::string id = parse_ident();
    if (id == "m") {
      e.type = expr::kind::variable;
      return e;
    }
    if (id == "exp") {
      expect('(');
      e.type = expr::kind::exp;
      if (peek_ident()) {
        std::string name = parse_ident();
        if (name == "m" || name == "exp" || name == "delta") fail("'" + name + "' cannot name an exponential base");
        e.base = scalar_base::symbol(std::move(name));
      } else {
        const bool negative = accept('-');
        rational v = parse_literal();
        e.base = negative ? rational(-v) : v;
      }
      expect(')');
      return e;
    }
    if (id == "delta") {
      expect('(');
      const integer r = parse_int();
      if (r < 1 || r > integer(1000000)) fail("delta order must be in 1..1000000");
      e.type = expr::kind::delta;
      e.order = r.convert_to<std::int64_t>();
      expect(')');
      return e;
    }
    pos_ = start;
    fail("unknown identifier '" + id + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

inline bool contains_delta(const expr& e) {
  if (e.type == expr::kind::delta) return true;
  for (const auto& a : e.args)
    if (contains_delta(a)) return true;
  return false;
}

// Counts delta factors of the outermost product; any other delta placement
// is nested.
inline void check_delta_placement(const expr& e, int& count) {
  switch (e.type) {
    case expr::kind::delta:
      ++count;
      if (count > 1) raise(errc::multiple_delta, "more than one delta factor");
      return;
    case expr::kind::mul:
    case expr::kind::neg:
      for (const auto& a : e.args) check_delta_placement(a, count);
      return;
    default:
      if (contains_delta(e)) raise(errc::nested_delta, "delta must be a factor of the outermost product");
  }
}

}  // namespace detail

inline expr parse_expression(std::string_view src) {
  expr e = detail::expr_parser(src).parse();
  int count = 0;
  detail::check_delta_placement(e, count);
  return e;
}

namespace detail {

enum precedence { prec_sum = 1, prec_product = 2, prec_unary = 3, prec_power = 4, prec_atom = 5 };

inline std::string render(const expr& e, int context) {
  auto wrap = [&](std::string s, int own) { return own < context ? "(" + s + ")" : s; };
  switch (e.type) {
    case expr::kind::number: return e.value.str();
    case expr::kind::variable: return "m";
    case expr::kind::exp: return "exp(" + e.base.to_string() + ")";
    case expr::kind::delta: return "delta(" + std::to_string(e.order) + ")";
    case expr::kind::add:
      return wrap(render(e.args[0], prec_sum) + " + " + render(e.args[1], prec_sum + 1), prec_sum);
    case expr::kind::sub:
      return wrap(render(e.args[0], prec_sum) + " - " + render(e.args[1], prec_sum + 1), prec_sum);
    case expr::kind::mul:
      return wrap(render(e.args[0], prec_product) + "*" + render(e.args[1], prec_product + 1), prec_product);
    case expr::kind::neg: return wrap("-" + render(e.args[0], prec_unary), prec_unary);
    case expr::kind::pow:
      return wrap(render(e.args[0], prec_atom) + "^" + std::to_string(e.exponent), prec_power);
  }
  return {};
}

}  // namespace detail

/// Text that parses back to the same tree.
inline std::string render_expression(const expr& e) { return detail::render(e, detail::prec_sum); }

namespace detail {

// sum over bases lambda of (polynomial in m) * lambda^m
using lowered = std::map<scalar_base, polynomial>;

inline void accumulate(lowered& into, const scalar_base& base, const polynomial& p) {
  auto& slot = into[base];
  slot += p;
  if (slot.is_zero()) into.erase(base);
}

inline scalar_base multiply_bases(const scalar_base& a, const scalar_base& b) {
  if (a.is_numeric() && a.numeric() == 1) return b;
  if (b.is_numeric() && b.numeric() == 1) return a;
  if (a.is_numeric() && b.is_numeric()) return a.numeric() * b.numeric();
  raise(errc::mixed_base_arithmetic,
        "cannot multiply exp(" + a.to_string() + ") by exp(" + b.to_string() + ") with a symbolic base");
}

inline lowered multiply(const lowered& a, const lowered& b) {
  lowered out;
  for (const auto& [ba, pa] : a)
    for (const auto& [bb, pb] : b) accumulate(out, multiply_bases(ba, bb), pa * pb);
  return out;
}

inline lowered constant_term(const rational& c) {
  lowered out;
  if (c != 0) out.emplace(scalar_base(1), polynomial::constant(c));
  return out;
}

inline lowered lower(const expr& e, std::int64_t& r) {
  switch (e.type) {
    case expr::kind::number: return constant_term(e.value);
    case expr::kind::variable: return {{scalar_base(1), polynomial{0, 1}}};
    case expr::kind::exp:
      if (e.base.is_numeric() && e.base.numeric() == 0) raise(errc::zero_scalar, "exp(0) is not allowed");
      return {{e.base, polynomial::constant(1)}};
    case expr::kind::delta:
      r = e.order;
      return constant_term(1);
    case expr::kind::add:
    case expr::kind::sub: {
      lowered out = lower(e.args[0], r);
      const polynomial sign = polynomial::constant(e.type == expr::kind::add ? 1 : -1);
      for (const auto& [b, p] : lower(e.args[1], r)) accumulate(out, b, sign * p);
      return out;
    }
    case expr::kind::mul: return multiply(lower(e.args[0], r), lower(e.args[1], r));
    case expr::kind::neg: {
      lowered out = lower(e.args[0], r);
      for (auto& [b, p] : out) p = -p;
      return out;
    }
    case expr::kind::pow: {
      const lowered base = lower(e.args[0], r);
      lowered out = constant_term(1);
      for (std::uint64_t i = 0; i < e.exponent; ++i) out = multiply(out, base);
      return out;
    }
  }
  return {};
}

}  // namespace detail

/// Expands the tree into delta_r * sum_i a_i exp(lambda_i) with like bases
/// collected.
inline canonical_exppoly lower_to_canonical(const expr& e) {
  std::int64_t r = 1;
  const detail::lowered terms = detail::lower(e, r);
  std::vector<exp_term> out;
  for (const auto& [b, p] : terms) out.push_back({p, b});
  return make_canonical(r, std::move(out));
}

inline canonical_exppoly parse_canonical(std::string_view src) { return lower_to_canonical(parse_expression(src)); }

}  // namespace epchar
