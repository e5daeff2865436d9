#pragma once

#include <stdexcept>
#include <string>

namespace pptri {

enum class ErrorCode {
  NotPrime,
  DegreeZero,
  SizeBoundExceeded,
  DivisionByZero,
  CtxMismatch,
  OddCharacteristic,
  EvenCharacteristic,
  ZeroInput,
  ZeroNorm,
  ZeroSigma,
  BadExponentSplit,
  ZeroA,
  PreconditionRootSplit,
  ZeroDenominator,
  HypothesisViolated,
  MemoryBound,
  UnknownVariable,
  RangeViolation,
  OddQ,
  EvenQ,
  PreconditionViolated,
  InvalidArgument,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::SizeBoundExceeded: return "SizeBoundExceeded";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::CtxMismatch: return "CtxMismatch";
    case ErrorCode::OddCharacteristic: return "OddCharacteristic";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::ZeroNorm: return "ZeroNorm";
    case ErrorCode::ZeroSigma: return "ZeroSigma";
    case ErrorCode::BadExponentSplit: return "BadExponentSplit";
    case ErrorCode::ZeroA: return "ZeroA";
    case ErrorCode::PreconditionRootSplit: return "PreconditionRootSplit";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::MemoryBound: return "MemoryBound";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::RangeViolation: return "RangeViolation";
    case ErrorCode::OddQ: return "OddQ";
    case ErrorCode::EvenQ: return "EvenQ";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Library-wide exception; every throwing operation documents its codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace pptri
