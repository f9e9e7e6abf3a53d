#include "atomaton/error.hpp"

namespace atomaton {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyLanguage: return "EmptyLanguage";
    case ErrorCode::kAlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::kNotMinimal: return "NotMinimal";
    case ErrorCode::kNotTrim: return "NotTrim";
    case ErrorCode::kNotSymmetric: return "NotSymmetric";
    case ErrorCode::kStateBlowup: return "StateBlowup";
    case ErrorCode::kDerivativeBlowup: return "DerivativeBlowup";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kUnknownSymbol: return "UnknownSymbol";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      position_(position) {}

bool Error::is_input_error() const noexcept {
  switch (code_) {
    case ErrorCode::kSyntaxError:
    case ErrorCode::kUnknownSymbol:
    case ErrorCode::kAlphabetMismatch:
    case ErrorCode::kInvalidArgument:
      return true;
    default:
      return false;
  }
}

}  // namespace atomaton
