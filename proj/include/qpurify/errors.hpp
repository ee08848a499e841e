#pragma once

#include <stdexcept>
#include <string>

namespace qpurify {

// Every failure the library can report. Validation codes mean the input
// violated a documented precondition or type invariant; numeric codes mean
// the input was well formed but the requested discretization cannot support
// the computation.
enum class ErrorCode {
  // validation
  NotHermitian,
  NotUnitTrace,
  NotPositive,
  NotNormalized,
  NotPure,
  DimMismatch,
  DimFactorMismatch,
  GridMismatch,
  InvalidGrid,
  InvalidParams,
  InvalidInput,
  PhaseCountMismatch,
  SpectraMismatch,
  InvalidDirection,
  DegenerateSuperposition,
  // numeric
  BoundaryLeak,
  GridTooCoarse,
  SupportClipped,
  NumericFailure,
};

inline const char *error_code_name(ErrorCode code) {
  switch (code) {
  case ErrorCode::NotHermitian: return "NotHermitian";
  case ErrorCode::NotUnitTrace: return "NotUnitTrace";
  case ErrorCode::NotPositive: return "NotPositive";
  case ErrorCode::NotNormalized: return "NotNormalized";
  case ErrorCode::NotPure: return "NotPure";
  case ErrorCode::DimMismatch: return "DimMismatch";
  case ErrorCode::DimFactorMismatch: return "DimFactorMismatch";
  case ErrorCode::GridMismatch: return "GridMismatch";
  case ErrorCode::InvalidGrid: return "InvalidGrid";
  case ErrorCode::InvalidParams: return "InvalidParams";
  case ErrorCode::InvalidInput: return "InvalidInput";
  case ErrorCode::PhaseCountMismatch: return "PhaseCountMismatch";
  case ErrorCode::SpectraMismatch: return "SpectraMismatch";
  case ErrorCode::InvalidDirection: return "InvalidDirection";
  case ErrorCode::DegenerateSuperposition: return "DegenerateSuperposition";
  case ErrorCode::BoundaryLeak: return "BoundaryLeak";
  case ErrorCode::GridTooCoarse: return "GridTooCoarse";
  case ErrorCode::SupportClipped: return "SupportClipped";
  case ErrorCode::NumericFailure: return "NumericFailure";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

// Input violated a precondition or type invariant. CLI exit code 1.
class ValidationError : public Error {
public:
  using Error::Error;
};

// Discretization cannot support the computation. CLI exit code 2.
class NumericError : public Error {
public:
  using Error::Error;
};

} // namespace qpurify
