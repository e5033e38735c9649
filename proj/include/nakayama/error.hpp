#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nakayama {

enum class errc {
  invalid_quiver,
  empty_cyclic_ideal,
  generator_out_of_range,
  non_minimal_ideal,
  length_too_short,
  zero_module,
  not_in_q_set,
  not_a_permutation,
  too_large,
  non_integral_division,
  criterion_mismatch,
  parse_error,
};

inline std::string_view to_string(errc code) {
  switch (code) {
    case errc::invalid_quiver: return "InvalidQuiver";
    case errc::empty_cyclic_ideal: return "EmptyCyclicIdeal";
    case errc::generator_out_of_range: return "GeneratorOutOfRange";
    case errc::non_minimal_ideal: return "NonMinimalIdeal";
    case errc::length_too_short: return "LengthTooShort";
    case errc::zero_module: return "ZeroModule";
    case errc::not_in_q_set: return "NotInQSet";
    case errc::not_a_permutation: return "NotAPermutation";
    case errc::too_large: return "TooLarge";
    case errc::non_integral_division: return "NonIntegralDivision";
    case errc::criterion_mismatch: return "CriterionMismatch";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Raised by the algebra file reader; carries the 1-based line of the offending input
/// (0 when the problem is not tied to a single line, e.g. a missing key).
class parse_error : public error {
 public:
  parse_error(int line, const std::string& what)
      : error(errc::parse_error,
              line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace nakayama
