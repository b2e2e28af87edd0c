#pragma once

// Command-line front end. run() takes the arguments after the program
// name and writes to the given streams, so it can be driven in-process.
// Exit status: 0 success, 1 usage error, 2 domain error.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "characters.hpp"
#include "error.hpp"
#include "expression.hpp"
#include "exppoly.hpp"
#include "numbers.hpp"
#include "semiinvariants.hpp"

namespace epchar::cli {

enum class table_format { text, csv, json };

inline std::string render_text(const character_array& arr) {
  std::size_t width = 1;
  for (const auto& row : arr.rows())
    for (const auto& v : row) width = std::max(width, v.str().size());
  std::ostringstream os;
  os << "# phi(0) = " << arr.phi0().str() << ", r = " << arr.r() << "\n";
  for (const auto& row : arr.rows()) {
    for (std::size_t n = 0; n < row.size(); ++n) {
      const std::string cell = row[n].str();
      if (n != 0) os << ' ';
      os << std::string(width - cell.size(), ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

inline std::string render_csv(const character_array& arr) {
  std::ostringstream os;
  os << 'k';
  for (std::int64_t n = 0; n < arr.r(); ++n) os << ",n=" << n;
  os << '\n';
  for (std::size_t k = 0; k < arr.rows().size(); ++k) {
    os << k;
    for (const auto& v : arr.rows()[k]) os << ',' << v.str();
    os << '\n';
  }
  return os.str();
}

inline std::string render_json(const character_array& arr) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : arr.rows()) {
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& v : row) {
      if (v > integer((std::numeric_limits<std::uint64_t>::max)()))
        raise(errc::invalid_argument, "entry " + v.str() + " does not fit the JSON schema");
      jr.push_back(v.convert_to<std::uint64_t>());
    }
    rows.push_back(std::move(jr));
  }
  nlohmann::json doc = {
      {"phi0", arr.phi0().str()},
      {"r", arr.r()},
      {"rows", std::move(rows)},
      {"weights", {{"alpha_coeff_at_k0", weight_of_cell(arr, 0, 0).alpha.str()}}},
  };
  return doc.dump() + "\n";
}

inline std::string render(const character_array& arr, table_format fmt) {
  switch (fmt) {
    case table_format::text: return render_text(arr);
    case table_format::csv: return render_csv(arr);
    case table_format::json: return render_json(arr);
  }
  return {};
}

namespace detail {

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty()) throw usage_error("empty entry in list '" + text + "'");
    out.push_back(item);
  }
  if (out.empty()) throw usage_error("empty list");
  return out;
}

inline std::vector<rational> rational_list(const std::string& text) {
  std::vector<rational> out;
  for (const auto& item : split_list(text)) {
    try {
      out.push_back(parse_rational(item));
    } catch (const error&) {
      throw usage_error("not a rational number: '" + item + "'");
    }
  }
  return out;
}

inline std::vector<std::uint64_t> dims_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& item : split_list(text)) {
    if (!std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }) || item.size() > 18)
      throw usage_error("not a dimension: '" + item + "'");
    out.push_back(std::stoull(item));
  }
  return out;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characters of level-zero modules attached to exponential-polynomial functions", "epchar"};
  app.require_subcommand(1);

  std::string expr_text;
  std::size_t rows = 12;
  table_format fmt = table_format::text;
  bool cross_check = false;
  auto* char_cmd = app.add_subcommand("char", "Weight-multiplicity array of phi");
  char_cmd->add_option("--expr", expr_text, "exponential-polynomial expression")->required();
  char_cmd->add_option("--rows", rows, "number of rows k = 0..rows-1")->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  char_cmd->add_option("--format", fmt, "text, csv or json")
      ->transform(CLI::CheckedTransformer(std::map<std::string, table_format>{
          {"text", table_format::text}, {"csv", table_format::csv}, {"json", table_format::json}}));
  char_cmd->add_flag("--cross-check", cross_check, "compare both computation routes");

  auto* charpoly_cmd = app.add_subcommand("charpoly", "Characteristic polynomial of phi in t");
  charpoly_cmd->add_option("--expr", expr_text, "exponential-polynomial expression")->required();

  std::int64_t at = 0;
  std::vector<std::int64_t> window;
  auto* eval_cmd = app.add_subcommand("eval", "Exact values of phi");
  eval_cmd->add_option("--expr", expr_text, "exponential-polynomial expression")->required();
  auto* at_opt = eval_cmd->add_option("--at", at, "single point m");
  auto* window_opt = eval_cmd->add_option("--window", window, "range A B")->expected(2);
  at_opt->excludes(window_opt);

  std::int64_t d = 1, n = 0;
  auto* ram_cmd = app.add_subcommand("ramanujan", "Ramanujan sum c_D(N)");
  ram_cmd->add_option("D", d, "order")->required();
  ram_cmd->add_option("N", n, "argument")->required();

  std::string dims_text;
  std::int64_t power = 1;
  std::size_t cutoff = 0;
  bool oracle = false;
  auto* poincare_cmd = app.add_subcommand("poincare", "Poincare series of a semi-invariant tensor component");
  poincare_cmd->add_option("--dims", dims_text, "d0,d1,... graded dimensions")->required();
  poincare_cmd->add_option("-r", power, "tensor power")->required();
  poincare_cmd->add_option("-n", n, "eigenvalue index")->required();
  poincare_cmd->add_option("-K", cutoff, "series cutoff")->required();
  poincare_cmd->add_flag("--oracle", oracle, "count rotation orbits by enumeration");

  std::string poly_text, init_text;
  auto* solve_cmd = app.add_subcommand("solve-recurrence", "Closed form of a linear recurrence");
  solve_cmd->add_option("--char-poly", poly_text, "c0,c1,...,1")->required();
  solve_cmd->add_option("--init", init_text, "v0,v1,...")->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*char_cmd) {
      const canonical_exppoly phi = parse_canonical(expr_text);
      if (cross_check) {
        const auto direct = make_character_array(phi, rows - 1);
        const auto via = character_array_via_semiinvariants(phi, rows - 1);
        if (!(direct == via)) raise(errc::route_mismatch, "the two character computations disagree");
        out << "routes agree on " << rows << " rows x " << phi.r() << " columns\n";
      } else {
        out << render(make_character_array(phi, rows - 1), fmt);
      }
    } else if (*charpoly_cmd) {
      out << char_poly(parse_canonical(expr_text)).to_string("t") << '\n';
    } else if (*eval_cmd) {
      if (!*at_opt && !*window_opt) throw detail::usage_error("eval needs --at or --window");
      const canonical_exppoly phi = parse_canonical(expr_text);
      if (*at_opt) {
        out << evaluate(phi, at).str() << '\n';
      } else {
        for (std::int64_t m = window[0]; m <= window[1]; ++m) out << m << ' ' << evaluate(phi, m).str() << '\n';
      }
    } else if (*ram_cmd) {
      out << ramanujan_sum(d, n) << '\n';
    } else if (*poincare_cmd) {
      const graded_dims v{detail::dims_list(dims_text)};
      const truncated_series s = oracle ? brute_force_component(v, power, n, cutoff)
                                        : tensor_component_series(v.poincare_series(cutoff), power, n);
      out << s.to_string() << '\n';
    } else if (*solve_cmd) {
      const polynomial c(detail::rational_list(poly_text));
      const auto init = detail::rational_list(init_text);
      out << to_expression(recurrence_solve(c, init)) << '\n';
    }
  } catch (const detail::usage_error& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace epchar::cli
