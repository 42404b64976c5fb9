#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pertsum {

enum class ErrorKind {
  DimensionMismatch,
  NonFiniteValue,
  NonHermitianInput,
  NoConvergence,
  ZeroVector,
  DegenerateDenominator,
  InsufficientData,
  InvalidArgument,
  ParseError,
  NotNormalized,
};

/// Stable name used in CLI diagnostics and tests.
std::string_view error_name(ErrorKind kind) noexcept;

/// Every failure in the library is reported through this type; `kind()`
/// identifies the failure, `what()` carries "<Name>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace pertsum
