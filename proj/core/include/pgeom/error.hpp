#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pgeom {

enum class ErrorCode {
  not_prime_power,
  unsupported,
  division_by_zero,
  zero_vector,
  point_in_flat,
  empty_geometry,
  field_mismatch,
  invalid_epsilon,
  duplicate_point,
  invalid_argument,
  parse_error,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_prime_power: return "NotPrimePower";
    case ErrorCode::unsupported: return "Unsupported";
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::zero_vector: return "ZeroVector";
    case ErrorCode::point_in_flat: return "PointInFlat";
    case ErrorCode::empty_geometry: return "EmptyGeometry";
    case ErrorCode::field_mismatch: return "FieldMismatch";
    case ErrorCode::invalid_epsilon: return "InvalidEpsilon";
    case ErrorCode::duplicate_point: return "DuplicatePoint";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every contract failure in the library is reported as an Error carrying a code
/// that the command-line front end maps onto its machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pgeom
