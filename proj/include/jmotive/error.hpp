#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jmotive {

enum class ErrorCode {
  InternalInconsistency,
  UnsupportedForm,
  InvalidArgument,
  ContextMismatch,
  LengthMismatch,
  IndexOutOfRange,
  BudgetExceeded,
  NotDivisible,
  NegativeCoefficient,
  NonIntegralRank,
  MissingPrime,
  SearchBudgetExceeded,
  NoDivisor,
  NotAlmostIdempotent,
  NotAFamily,
  HypothesisViolated,
  DeterminantNotOne,
  Overflow,
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

// Every domain failure in the library is reported through this type. The code
// lets callers (the CLI in particular) branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace jmotive
