#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rootnum {

enum class ErrorKind {
  ZeroInput,
  NotPrime,
  FactorizationFailed,
  ZeroPolynomial,
  HypothesisViolated,
  UnsupportedTameCase,
  ModelSearchFailed,
  ContextTooLarge,
  NonIntegerTrace,
  MalformedFixture,
  InvalidArgument,
};

std::string_view error_name(ErrorKind kind) noexcept;

// Every failure raised by the library carries a machine-readable kind; the
// CLI maps kinds onto exit codes and the Python module onto exception types.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rootnum
