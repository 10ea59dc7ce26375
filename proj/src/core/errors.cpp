#include "core/errors.hpp"

namespace ipent {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroState: return "ZeroState";
    case ErrorCode::SymmetryViolation: return "SymmetryViolation";
    case ErrorCode::ParallelVectors: return "ParallelVectors";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::NonUnitVector: return "NonUnitVector";
    case ErrorCode::ClassificationConflict: return "ClassificationConflict";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace ipent
