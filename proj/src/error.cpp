#include "error.hpp"

namespace qcross {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidHistoire: return "InvalidHistoire";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::HeightMismatch: return "HeightMismatch";
    case ErrorCode::NotInC: return "NotInC";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::GuardExceeded: return "GuardExceeded";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
  }
  return "Unknown";
}

}  // namespace qcross
