#pragma once

#include <stdexcept>
#include <string>

namespace nclift {

enum class ErrorCode {
  MalformedJson,
  SchemaError,
  BadField,
  BadScalar,
  AlgebraNotAssociative,
  AlgebraBadUnit,
  ComplexNotDg,
  ShapeMismatch,
  NotLocal,
  GuardTooSmall,
  NoPresentation,
  BadArgument,
};

const char* error_code_name(ErrorCode code);

/// Problem-level failure caused by the input (exit code 1 in the CLI).
class InputError : public std::runtime_error {
 public:
  InputError(ErrorCode code, std::string location, const std::string& message)
      : std::runtime_error(message), code_(code), location_(std::move(location)) {}

  ErrorCode code() const { return code_; }
  const std::string& location() const { return location_; }

 private:
  ErrorCode code_;
  std::string location_;
};

/// A mathematical invariant failed to hold on computed data (exit code 2).
/// Always signals a bug or an unsupported input, never a user typo.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nclift
