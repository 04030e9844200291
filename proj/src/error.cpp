#include "dcecon/error.hpp"

namespace dcecon {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::domain: return "domain";
    case ErrorCode::parameter: return "parameter";
    case ErrorCode::underdetermined: return "underdetermined";
    case ErrorCode::singular: return "singular";
    case ErrorCode::degenerate: return "degenerate";
    case ErrorCode::no_interior_optimum: return "no_interior_optimum";
    case ErrorCode::infeasible: return "infeasible";
    case ErrorCode::unbounded: return "unbounded";
    case ErrorCode::parse: return "parse";
    case ErrorCode::validation: return "validation";
  }
  return "unknown";
}

bool is_numerical(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::singular:
    case ErrorCode::degenerate:
    case ErrorCode::no_interior_optimum:
    case ErrorCode::infeasible:
    case ErrorCode::unbounded:
      return true;
    default:
      return false;
  }
}

}  // namespace dcecon
