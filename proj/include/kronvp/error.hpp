#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kronvp {

enum class ErrorCode {
  InvalidToken,
  NegativePart,
  NotWeaklyDecreasing,
  PartTooLarge,
  WeightMismatch,
  LengthExceedsBound,
  NoCanonicalForm,
  WeightCapExceeded,
  NonzeroResidual,
  DimensionMismatch,
  InvalidMatrix,
  BoundTooSmall,
  UnsupportedDimension,
  IndexOutOfRange,
  OrderingViolated,
  FaceConditionViolated,
  NoFitWithinBounds,
  InsufficientData,
  TooLargeForExhaustiveCheck,
  InvalidArgument,
};

std::string_view error_name(ErrorCode code);

/// Domain error raised by every module; `code()` names the failure mode.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kronvp
