#pragma once

#include <stdexcept>
#include <string>

namespace ipent {

// Stable error taxonomy shared by the C++ core, the C API and the CLI.
enum class ErrorCode {
  DimensionMismatch,
  ZeroState,
  SymmetryViolation,
  ParallelVectors,
  ParseError,
  NotHermitian,
  NotSymmetric,
  NotAntisymmetric,
  ConvergenceFailure,
  NonUnitVector,
  ClassificationConflict,
  InvalidArgument,
  IoError,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace ipent
