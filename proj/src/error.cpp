#include "rootnum/error.hpp"

namespace rootnum {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::FactorizationFailed: return "FactorizationFailed";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::UnsupportedTameCase: return "UnsupportedTameCase";
    case ErrorKind::ModelSearchFailed: return "ModelSearchFailed";
    case ErrorKind::ContextTooLarge: return "ContextTooLarge";
    case ErrorKind::NonIntegerTrace: return "NonIntegerTrace";
    case ErrorKind::MalformedFixture: return "MalformedFixture";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace rootnum
