#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace quintic {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  Overflow,
  ZeroToNegativePower,
  DegreeGuardFailure,
  NotARoot,
  DegenerateTransform,
  DegenerateLeading,
  DegenerateCubic,
  CancellationFailure,
  ResolventFailure,
  AmbiguousSelection,
  SeriesOutOfRange,
  SeriesDivergence,
  NearBranchPoint,
  StepLimitExceeded,
  NoConvergence,
  PrecisionExhausted,
  ShiftLadderExhausted,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library is reported through this type. `stage` names
// the pipeline step that raised it ("tschirnhaus.solve_alpha", ...) and is
// extended by callers that re-throw with more context.
class SolverError : public std::runtime_error {
 public:
  SolverError(ErrorCode code, std::string stage, const std::string& message)
      : std::runtime_error(message), code_(code), stage_(std::move(stage)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& stage() const noexcept { return stage_; }

  SolverError with_stage(const std::string& outer) const {
    return SolverError(code_, outer + "/" + stage_, what());
  }

 private:
  ErrorCode code_;
  std::string stage_;
};

class ParseError : public SolverError {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : SolverError(ErrorCode::ParseError, "mpfield.parse",
                    message + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace quintic
