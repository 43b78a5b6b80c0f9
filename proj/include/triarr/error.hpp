#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace triarr {

enum class ErrorCode {
  NonPrimeCharacteristic,
  ReducibleModulus,
  DegreeMismatch,
  DivisionByZero,
  FieldMismatch,
  ZeroPolynomial,
  IdenticalArguments,
  InvalidCoordinates,
  DuplicateLines,
  EmptyArrangement,
  UnknownLabel,
  IndexOutOfRange,
  FieldTooLarge,
  UnsolvedAssignment,
  BudgetExceeded,
  UnknownName,
  IneligibleField,
  NonPrime,
  UnsupportedPrime,
  InvalidArgument,
  ParseError,
  IoError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::IdenticalArguments: return "IdenticalArguments";
    case ErrorCode::InvalidCoordinates: return "InvalidCoordinates";
    case ErrorCode::DuplicateLines: return "DuplicateLines";
    case ErrorCode::EmptyArrangement: return "EmptyArrangement";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::UnsolvedAssignment: return "UnsolvedAssignment";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::IneligibleField: return "IneligibleField";
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::UnsupportedPrime: return "UnsupportedPrime";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace triarr
