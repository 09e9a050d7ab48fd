#pragma once

#include <cstdint>
#include <vector>

namespace mixedcage {

// Number of vertices in an undirected Moore tree of degree r and depth d:
// 1 + r * sum_{k<d} (r-1)^k. For r >= 3 this is (r(r-1)^d - 2) / (r - 2);
// r = 2 gives 2d + 1 and r = 1 saturates at 2.
// Throws Error(kOverflow) if the value does not fit in 64 bits and
// Error(kInvalidArgument) for r = 0.
std::uint64_t moore_bound(std::uint64_t r, std::uint64_t d);

// Moore-tree depths attached along a directed path of g vertices:
// min(i, g-1-i) for i = 0..g-1.
std::vector<std::uint64_t> ahm_depth_profile(std::uint64_t g);

// Lower bound on the order of an (r,1,g)-graph: the sum of moore_bound(r, depth)
// over ahm_depth_profile(g).
std::uint64_t ahm_bound(std::uint64_t r, std::uint64_t g);

}  // namespace mixedcage
