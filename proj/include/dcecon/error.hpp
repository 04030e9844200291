#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dcecon {

enum class ErrorCode {
  domain,               // argument outside the function's domain
  parameter,            // configuration or model parameter out of range
  underdetermined,      // fewer observations than unknowns
  singular,             // rank-deficient or zero-denominator system
  degenerate,           // problem has no meaningful solution (e.g. zero variance)
  no_interior_optimum,  // objective unbounded or maximized on the boundary
  infeasible,
  unbounded,
  parse,
  validation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for failures that come from the numerics rather than from the input.
bool is_numerical(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

namespace detail {

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, ErrorCode code, const char* what) {
  if (!ok) throw Error(code, what);
}

}  // namespace detail
}  // namespace dcecon
