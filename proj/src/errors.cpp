#include "sixjvol/errors.hpp"

namespace sixjvol {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::not_admissible: return "not_admissible";
    case ErrorCode::not_hyperbolic: return "not_hyperbolic";
    case ErrorCode::invalid_link: return "invalid_link";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::n_too_small: return "n_too_small";
    case ErrorCode::range: return "range";
    case ErrorCode::division_by_zero: return "division_by_zero";
    case ErrorCode::phase_mismatch: return "phase_mismatch";
    case ErrorCode::parity: return "parity";
    case ErrorCode::indeterminate_sign: return "indeterminate_sign";
    case ErrorCode::domain: return "domain";
    case ErrorCode::degenerate: return "degenerate";
    case ErrorCode::solver: return "solver";
    case ErrorCode::deformation_out_of_range: return "deformation_out_of_range";
  }
  return "unknown";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument:
    case ErrorCode::not_admissible:
    case ErrorCode::not_hyperbolic:
    case ErrorCode::invalid_link:
    case ErrorCode::parse_error:
    case ErrorCode::n_too_small:
      return true;
    default:
      return false;
  }
}

}  // namespace sixjvol
