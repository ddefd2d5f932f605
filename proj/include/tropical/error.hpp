#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tropical {

enum class ErrorKind {
  InvalidValue,
  DivisionByEps,
  NegativePowerOfEps,
  NegationOfEps,
  DimensionMismatch,
  ShapeMismatch,
  NotSquare,
  PositiveCycle,
  EpsEigenvalue,
  NotIrreducible,
  VerificationFailed,
  HorizonExceeded,
  TooLarge,
  SyntaxError,
  NonlinearProduct,
  UnboundVariable,
  UnknownName,
  ArityMismatch,
  NotApproximable,
  SlopeUnstable,
  FixedPointViolation,
  NonpositiveAlpha,
  InsufficientData,
};

std::string_view to_string(ErrorKind kind);

/// True for errors caused by malformed input (files, expressions, flags)
/// rather than by the analysis itself.
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with the byte offset into the source and the tokens that
/// would have been accepted there.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected,
              const std::string& detail = {});

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t position_;
  std::string expected_;
  std::string detail_;
};

/// A Jacobian entry whose tropical derivative could not be taken.
/// Row and column are 1-based.
class EntryError : public Error {
 public:
  EntryError(ErrorKind kind, std::size_t row, std::size_t col,
             const std::string& message)
      : Error(kind, "entry (" + std::to_string(row) + "," +
                        std::to_string(col) + "): " + message),
        row_(row),
        col_(col) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

}  // namespace tropical
