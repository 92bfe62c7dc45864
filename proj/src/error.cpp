#include "kronvp/error.hpp"

namespace kronvp {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidToken: return "InvalidToken";
    case ErrorCode::NegativePart: return "NegativePart";
    case ErrorCode::NotWeaklyDecreasing: return "NotWeaklyDecreasing";
    case ErrorCode::PartTooLarge: return "PartTooLarge";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::LengthExceedsBound: return "LengthExceedsBound";
    case ErrorCode::NoCanonicalForm: return "NoCanonicalForm";
    case ErrorCode::WeightCapExceeded: return "WeightCapExceeded";
    case ErrorCode::NonzeroResidual: return "NonzeroResidual";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::OrderingViolated: return "OrderingViolated";
    case ErrorCode::FaceConditionViolated: return "FaceConditionViolated";
    case ErrorCode::NoFitWithinBounds: return "NoFitWithinBounds";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::TooLargeForExhaustiveCheck: return "TooLargeForExhaustiveCheck";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

}  // namespace kronvp
