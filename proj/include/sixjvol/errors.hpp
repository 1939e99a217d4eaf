#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sixjvol {

enum class ErrorCode {
  // validation errors: malformed or out-of-contract inputs
  invalid_argument,
  not_admissible,
  not_hyperbolic,
  invalid_link,
  parse_error,
  n_too_small,
  // numeric errors: the computation itself cannot proceed
  range,
  division_by_zero,
  phase_mismatch,
  parity,
  indeterminate_sign,
  domain,
  degenerate,
  solver,
  deformation_out_of_range,
};

std::string_view error_code_name(ErrorCode code);

// True for codes caused by bad input rather than by the numerics.
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sixjvol
