#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace atomaton {

enum class ErrorCode {
  kEmptyLanguage,
  kAlphabetMismatch,
  kNotMinimal,
  kNotTrim,
  kNotSymmetric,
  kStateBlowup,
  kDerivativeBlowup,
  kSyntaxError,
  kUnknownSymbol,
  kInvalidArgument,
};

const char* to_string(ErrorCode code);

/// Domain errors raised by the library. Violated internal invariants are
/// reported as std::logic_error instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  /// Character offset (regex) or line number (automaton text), if known.
  std::optional<std::size_t> position() const noexcept { return position_; }

  /// True for errors caused by malformed input rather than by a violated
  /// precondition of the requested operation.
  bool is_input_error() const noexcept;

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace atomaton
