#pragma once

#include <stdexcept>
#include <string>

namespace taucert {

// Machine-readable failure categories; the string form is what the CLI emits.
enum class ErrorCode {
  DivisionByZero,
  NonSplitDenominator,
  Resonance,
  SingularParameter,
  MissingInitialTerms,
  Precondition,
  DimensionMismatch,
  TruncationMismatch,
  UnknownEntry,
  Parse,
  OrderTooSmall,
  Unsupported,
  Inconsistent,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "division-by-zero";
    case ErrorCode::NonSplitDenominator: return "non-split-denominator";
    case ErrorCode::Resonance: return "resonance";
    case ErrorCode::SingularParameter: return "singular-parameter";
    case ErrorCode::MissingInitialTerms: return "missing-initial-terms";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::TruncationMismatch: return "truncation-mismatch";
    case ErrorCode::UnknownEntry: return "unknown-entry";
    case ErrorCode::Parse: return "parse-error";
    case ErrorCode::OrderTooSmall: return "order-too-small";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::Inconsistent: return "inconsistent";
  }
  return "error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }
  const char* code_name() const noexcept { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace taucert
