#include "tropical/error.hpp"

namespace tropical {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidValue: return "InvalidValue";
    case ErrorKind::DivisionByEps: return "DivisionByEps";
    case ErrorKind::NegativePowerOfEps: return "NegativePowerOfEps";
    case ErrorKind::NegationOfEps: return "NegationOfEps";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::PositiveCycle: return "PositiveCycle";
    case ErrorKind::EpsEigenvalue: return "EpsEigenvalue";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::HorizonExceeded: return "HorizonExceeded";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NonlinearProduct: return "NonlinearProduct";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NotApproximable: return "NotApproximable";
    case ErrorKind::SlopeUnstable: return "SlopeUnstable";
    case ErrorKind::FixedPointViolation: return "FixedPointViolation";
    case ErrorKind::NonpositiveAlpha: return "NonpositiveAlpha";
    case ErrorKind::InsufficientData: return "InsufficientData";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidValue:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::ShapeMismatch:
    case ErrorKind::SyntaxError:
    case ErrorKind::NonlinearProduct:
    case ErrorKind::UnboundVariable:
    case ErrorKind::UnknownName:
    case ErrorKind::ArityMismatch:
      return true;
    default:
      return false;
  }
}

SyntaxError::SyntaxError(std::size_t position, std::string expected,
                         const std::string& detail)
    : Error(ErrorKind::SyntaxError,
            "at position " + std::to_string(position) + ": expected " +
                expected + (detail.empty() ? "" : " (" + detail + ")")),
      position_(position),
      expected_(std::move(expected)),
      detail_(detail) {}

}  // namespace tropical
