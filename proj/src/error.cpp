#include "zetafrob/error.hpp"

namespace zetafrob {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::MissingModulus: return "MissingModulus";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::NotSeparable: return "NotSeparable";
    case ErrorCode::OddDegree: return "OddDegree";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::NewtonDivisionFailure: return "NewtonDivisionFailure";
    case ErrorCode::WeilBoundViolation: return "WeilBoundViolation";
    case ErrorCode::NonBasisResidual: return "NonBasisResidual";
    case ErrorCode::NonIntegralCoefficient: return "NonIntegralCoefficient";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime:
    case ErrorCode::EvenCharacteristic:
    case ErrorCode::ReducibleModulus:
    case ErrorCode::MissingModulus:
    case ErrorCode::InvalidArgument:
    case ErrorCode::DegreeTooSmall:
    case ErrorCode::NotSeparable:
    case ErrorCode::OddDegree:
    case ErrorCode::TooLarge:
    case ErrorCode::Unsupported:
    case ErrorCode::ParseError:
      return true;
    default:
      return false;
  }
}

}  // namespace zetafrob
