#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace epchar {

// Every failure the library reports carries one of these kinds. The CLI
// prints the kind name verbatim on stderr.
enum class errc {
  invalid_argument,
  distinctness_violation,
  zero_scalar,
  symbolic_evaluation,
  zero_function,
  zero_polynomial,
  zero_constant_term,
  not_split_over_rationals,
  singular_system,
  non_integer_result,
  non_integer_entry,
  negative_entry,
  not_a_divisor,
  enumeration_too_large,
  syntax_error,
  nested_delta,
  multiple_delta,
  mixed_base_arithmetic,
  route_mismatch,
};

constexpr std::string_view error_name(errc e) noexcept {
  switch (e) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::distinctness_violation: return "DistinctnessViolation";
    case errc::zero_scalar: return "ZeroScalar";
    case errc::symbolic_evaluation: return "SymbolicEvaluation";
    case errc::zero_function: return "ZeroFunction";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::zero_constant_term: return "ZeroConstantTerm";
    case errc::not_split_over_rationals: return "NotSplitOverRationals";
    case errc::singular_system: return "SingularSystem";
    case errc::non_integer_result: return "NonIntegerResult";
    case errc::non_integer_entry: return "NonIntegerEntry";
    case errc::negative_entry: return "NegativeEntry";
    case errc::not_a_divisor: return "NotADivisor";
    case errc::enumeration_too_large: return "EnumerationTooLarge";
    case errc::syntax_error: return "SyntaxError";
    case errc::nested_delta: return "NestedDelta";
    case errc::multiple_delta: return "MultipleDelta";
    case errc::mixed_base_arithmetic: return "MixedBaseArithmetic";
    case errc::route_mismatch: return "RouteMismatch";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

}  // namespace epchar
