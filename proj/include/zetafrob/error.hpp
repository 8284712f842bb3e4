#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zetafrob {

enum class ErrorCode {
  // input / domain errors
  NotPrime,
  EvenCharacteristic,
  ReducibleModulus,
  MissingModulus,
  InvalidArgument,
  DegreeTooSmall,
  NotSeparable,
  OddDegree,
  TooLarge,
  Unsupported,
  ParseError,
  // arithmetic
  DivisionByZero,
  FieldMismatch,
  BothZero,
  PrecisionExhausted,
  NewtonDivisionFailure,
  // internal invariant violations
  WeilBoundViolation,
  NonBasisResidual,
  NonIntegralCoefficient,
};

std::string_view error_name(ErrorCode code) noexcept;

/// True for errors caused by the caller's input rather than by a broken invariant.
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace zetafrob
