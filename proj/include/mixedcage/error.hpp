#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mixedcage {

enum class ErrorCode {
  kOutOfRange,
  kSelfLoop,
  kDuplicate,
  kLengthMismatch,
  kNotAPermutation,
  kNonSquare,
  kBadToken,
  kNonzeroDiagonal,
  kOverflow,
  kCapExceeded,
  kVerificationFailed,
  kCollision,
  kTooLarge,
  kInconclusive,
  kInvalidArgument,
  kBadCheckpoint,
};

std::string_view to_string(ErrorCode code);

// Base class for every error raised by the library. The code identifies the
// error family; the message carries the details for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mixedcage
