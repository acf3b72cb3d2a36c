#include "plab/error.hpp"

namespace plab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InvalidProbability: return "InvalidProbability";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::ArityTooLarge: return "ArityTooLarge";
    case ErrorCode::SupportTooLarge: return "SupportTooLarge";
    case ErrorCode::UncoveredVariable: return "UncoveredVariable";
    case ErrorCode::OutputTooLong: return "OutputTooLong";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SupportMismatch: return "SupportMismatch";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownDescriptor: return "UnknownDescriptor";
  }
  return "Unknown";
}

}  // namespace plab
