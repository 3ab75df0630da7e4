#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace intdist {

enum class ErrorCode {
  InvalidSpec,
  IndexOutOfRange,
  NonStrictNorm,
  CollinearSites,
  UnsupportedField,
  NonPositiveDistance,
  NotIntegerDistanceSet,
  NotPythagorean,
  SlopeCollision,
  ConstructionFailed,
  DuplicatePoint,
  DegenerateLattice,
  NonPositiveRadius,
  NegativeGenus,
  InvalidArgument,
  BoundViolation,
};

std::string_view error_name(ErrorCode code);

/// Every domain failure in the library is reported as an Error carrying its
/// code; the CLI maps codes to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonStrictNorm: return "NonStrictNorm";
    case ErrorCode::CollinearSites: return "CollinearSites";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::NonPositiveDistance: return "NonPositiveDistance";
    case ErrorCode::NotIntegerDistanceSet: return "NotIntegerDistanceSet";
    case ErrorCode::NotPythagorean: return "NotPythagorean";
    case ErrorCode::SlopeCollision: return "SlopeCollision";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::DegenerateLattice: return "DegenerateLattice";
    case ErrorCode::NonPositiveRadius: return "NonPositiveRadius";
    case ErrorCode::NegativeGenus: return "NegativeGenus";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::BoundViolation: return "BoundViolation";
  }
  return "Unknown";
}

}  // namespace intdist
