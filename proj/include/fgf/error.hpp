#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fgf {

enum class ErrorCode {
  InvalidArgument,
  NotPrime,
  ReducibleModulus,
  DivisionByZero,
  FieldMismatch,
  BudgetExceeded,
  SingularCurve,
  CurveMismatch,
  SearchExhausted,
  CharTwo,
  TwistDegenerate,
  PoleOfZ,
  FactorBudgetExceeded,
  NotOrdinary,
  IncompleteFactorization,
  ZeroCoefficient,
  LengthMismatch,
  DegreeMismatch,
  PrecisionExhausted,
  UnboundPlaceholder,
  UnassignedVariable,
  UnsupportedDegree,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fgf
