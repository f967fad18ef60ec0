#pragma once

#include <stdexcept>
#include <string>

namespace experts {

enum class ErrorCode {
  // simplex / numeric validation
  NegativeEntry,
  SumNotOne,
  DimensionTooSmall,
  NonFiniteInput,
  DimensionMismatch,
  // root finding / fixed point
  NoSignChange,
  MaxIterExceeded,
  BracketViolation,
  // loss files
  MissingRow,
  OutOfRangeLoss,
  ParseError,
  // plotting
  SchemaMismatch,
  EmptyInput,
  // front end
  ConfigError,
  IoError,
  InternalError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace experts
