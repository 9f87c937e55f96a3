#include "quintic/errors.hpp"

namespace quintic {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ZeroToNegativePower: return "ZeroToNegativePower";
    case ErrorCode::DegreeGuardFailure: return "DegreeGuardFailure";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::DegenerateTransform: return "DegenerateTransform";
    case ErrorCode::DegenerateLeading: return "DegenerateLeading";
    case ErrorCode::DegenerateCubic: return "DegenerateCubic";
    case ErrorCode::CancellationFailure: return "CancellationFailure";
    case ErrorCode::ResolventFailure: return "ResolventFailure";
    case ErrorCode::AmbiguousSelection: return "AmbiguousSelection";
    case ErrorCode::SeriesOutOfRange: return "SeriesOutOfRange";
    case ErrorCode::SeriesDivergence: return "SeriesDivergence";
    case ErrorCode::NearBranchPoint: return "NearBranchPoint";
    case ErrorCode::StepLimitExceeded: return "StepLimitExceeded";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::ShiftLadderExhausted: return "ShiftLadderExhausted";
  }
  return "Unknown";
}

}  // namespace quintic
