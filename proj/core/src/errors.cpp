#include "pertsum/errors.hpp"

namespace pertsum {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonFiniteValue: return "NonFiniteValue";
    case ErrorKind::NonHermitianInput: return "NonHermitianInput";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotNormalized: return "NotNormalized";
  }
  return "UnknownError";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

}  // namespace pertsum
