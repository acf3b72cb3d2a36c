#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace plab {

enum class ErrorCode {
  ReducibleModulus,
  DegreeMismatch,
  SpecMismatch,
  LengthMismatch,
  InvalidProbability,
  ArityMismatch,
  ArityTooLarge,
  SupportTooLarge,
  UncoveredVariable,
  OutputTooLong,
  ParameterOutOfRange,
  ShapeMismatch,
  Infeasible,
  BudgetExceeded,
  SupportMismatch,
  HypothesisViolation,
  ParseError,
  UnknownDescriptor,
};

std::string_view to_string(ErrorCode code) noexcept;

/// All library failures surface as this exception; `code()` names the
/// contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace plab
