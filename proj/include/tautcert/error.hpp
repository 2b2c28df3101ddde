#pragma once

#include <stdexcept>
#include <string>

namespace tautcert {

// Every domain failure carries a code so callers (and tests) can tell
// precondition violations apart without string matching.
enum class ErrorCode {
  bad_argument,
  rank_mismatch,
  parse_error,
  undeclared_generator,
  duplicate_generator,
  malformed_exponent,
  zero_polynomial,
  zero_class,
  not_primitive,
  not_integral,
  vanishing_polynomial,
  degenerate_span,
  not_even_lattice,
  empty_input,
  empty_face,
  not_on_boundary,
  point_exterior,
  point_interior,
  cone_test_failed,
  infeasible,
  division_not_exact,
  singular_matrix,
  invalid_multiplicity,
  order_mismatch,
  frontier_mismatch,
  invalid_surgery,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace tautcert
