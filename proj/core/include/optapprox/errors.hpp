#pragma once

#include <stdexcept>
#include <string>

namespace optapprox {

enum class ErrorCode {
  TailForbidden,
  NotOrthonormal,
  OutsideDisc,
  TailNotConvergent,
  ZeroAtOrigin,
  NotUnimodular,
  ZeroFunction,
  NotPositiveDefinite,
  DegreeZero,
  NotPositiveCoefficients,
  RootInOpenDisc,
  ParseError,
  InvalidArgument,
};

constexpr const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::TailForbidden: return "TailForbidden";
    case ErrorCode::NotOrthonormal: return "NotOrthonormal";
    case ErrorCode::OutsideDisc: return "OutsideDisc";
    case ErrorCode::TailNotConvergent: return "TailNotConvergent";
    case ErrorCode::ZeroAtOrigin: return "ZeroAtOrigin";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::NotPositiveCoefficients: return "NotPositiveCoefficients";
    case ErrorCode::RootInOpenDisc: return "RootInOpenDisc";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Library error with a stable machine-readable code. The CLI prints the
/// code verbatim and maps numerical failures to a distinct exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  const char* code_name() const noexcept { return error_code_name(code_); }

  /// True when the inputs were valid but the numerics gave up.
  bool numerical_failure() const noexcept {
    return code_ == ErrorCode::NotPositiveDefinite;
  }

 private:
  ErrorCode code_;
};

template <ErrorCode Code>
class CodedError : public Error {
 public:
  explicit CodedError(const std::string& message) : Error(Code, message) {}
};

using TailForbiddenError = CodedError<ErrorCode::TailForbidden>;
using NotOrthonormalError = CodedError<ErrorCode::NotOrthonormal>;
using OutsideDiscError = CodedError<ErrorCode::OutsideDisc>;
using TailNotConvergentError = CodedError<ErrorCode::TailNotConvergent>;
using ZeroAtOriginError = CodedError<ErrorCode::ZeroAtOrigin>;
using NotUnimodularError = CodedError<ErrorCode::NotUnimodular>;
using ZeroFunctionError = CodedError<ErrorCode::ZeroFunction>;
using NotPositiveDefiniteError = CodedError<ErrorCode::NotPositiveDefinite>;
using DegreeZeroError = CodedError<ErrorCode::DegreeZero>;
using NotPositiveCoefficientsError = CodedError<ErrorCode::NotPositiveCoefficients>;
using RootInOpenDiscError = CodedError<ErrorCode::RootInOpenDisc>;
using SpecParseError = CodedError<ErrorCode::ParseError>;
using InvalidArgumentError = CodedError<ErrorCode::InvalidArgument>;

}  // namespace optapprox
