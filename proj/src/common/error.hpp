#pragma once

#include <stdexcept>
#include <string>

namespace scengen {

enum class ErrorCode {
  invalid_argument = 1,
  schema_mismatch,
  domain_violation,
  degenerate_fit,
  not_converged,
  io,
};

/// Every failure raised by the library carries a code that the C API
/// forwards unchanged.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace scengen
