#include "mixedcage/error.hpp"

namespace mixedcage {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicate: return "Duplicate";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNotAPermutation: return "NotAPermutation";
    case ErrorCode::kNonSquare: return "NonSquare";
    case ErrorCode::kBadToken: return "BadToken";
    case ErrorCode::kNonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kVerificationFailed: return "VerificationFailed";
    case ErrorCode::kCollision: return "Collision";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInconclusive: return "Inconclusive";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kBadCheckpoint: return "BadCheckpoint";
  }
  return "Unknown";
}

}  // namespace mixedcage
