#pragma once

#include <stdexcept>
#include <string>

namespace octomod {

enum class ErrorCode {
  DivisionByZero,
  NotImaginary,
  DependentArguments,
  RealArgument,
  ZeroElement,
  NotCyclic,
  ConjugateSlotsPresent,
  InvalidSignature,
  InternalTableInconsistent,
  InternalFormulaMismatch,
  UnknownSuite,
  ParseError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotImaginary: return "NotImaginary";
    case ErrorCode::DependentArguments: return "DependentArguments";
    case ErrorCode::RealArgument: return "RealArgument";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotCyclic: return "NotCyclic";
    case ErrorCode::ConjugateSlotsPresent: return "ConjugateSlotsPresent";
    case ErrorCode::InvalidSignature: return "InvalidSignature";
    case ErrorCode::InternalTableInconsistent: return "InternalTableInconsistent";
    case ErrorCode::InternalFormulaMismatch: return "InternalFormulaMismatch";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

/// Domain-level failure with a machine-readable code. The CLI maps these to
/// {"error": {...}} payloads and exit status 1.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace octomod
