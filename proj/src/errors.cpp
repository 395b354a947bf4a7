#include "kgpt/errors.hpp"

namespace kgpt {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::InadmissibleLevel: return "InadmissibleLevel";
    case ErrorCode::DegenerateLevel: return "DegenerateLevel";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::PoleError: return "PoleError";
    case ErrorCode::RecurrenceBreakdown: return "RecurrenceBreakdown";
    case ErrorCode::ShapeInvarianceViolation: return "ShapeInvarianceViolation";
  }
  return "Unknown";
}

}  // namespace kgpt
