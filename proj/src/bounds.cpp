#include "mixedcage/bounds.hpp"

#include <algorithm>
#include <string>

#include "mixedcage/error.hpp"

namespace mixedcage {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "vertex count exceeds 64 bits");
  }
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "vertex count exceeds 64 bits");
  }
  return out;
}

}  // namespace

std::uint64_t moore_bound(std::uint64_t r, std::uint64_t d) {
  if (r == 0) {
    throw Error(ErrorCode::kInvalidArgument, "Moore bound needs degree >= 1");
  }
  if (d == 0) return 1;
  // Level k (k >= 1) of the tree holds r * (r-1)^(k-1) vertices.
  std::uint64_t total = 1;
  std::uint64_t level = r;
  for (std::uint64_t k = 1; k <= d; ++k) {
    total = checked_add(total, level);
    if (level == 0) break;
    if (k < d) level = checked_mul(level, r - 1);
  }
  return total;
}

std::vector<std::uint64_t> ahm_depth_profile(std::uint64_t g) {
  std::vector<std::uint64_t> depths(g);
  for (std::uint64_t i = 0; i < g; ++i) depths[i] = std::min(i, g - 1 - i);
  return depths;
}

std::uint64_t ahm_bound(std::uint64_t r, std::uint64_t g) {
  if (g == 0) {
    throw Error(ErrorCode::kInvalidArgument, "girth must be >= 1");
  }
  std::uint64_t total = 0;
  for (std::uint64_t depth : ahm_depth_profile(g)) {
    total = checked_add(total, moore_bound(r, depth));
  }
  return total;
}

}  // namespace mixedcage
