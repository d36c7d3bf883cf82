#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace urbip {

enum class ErrorCode {
  MalformedProblem,
  EmptyInput,
  EmptySide,
  DimensionMismatch,
  InvalidInput,
  ParseError,
  DegenerateInput,
  NumericalFailure,
  ShapeMismatch,
  PatternViolation,
  ClosureViolated,
  DegeneratePoint,
  ApexInSpan,
  IoError,
};

std::string_view toString(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(toString(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace urbip
