#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixedcage/error.hpp"
#include "mixedcage/graph.hpp"

namespace mixedcage {

// Target (r, z, g): edge-degree r, out-degree = in-degree z, girth g.
struct CageParams {
  std::uint32_t r = 0;
  std::uint32_t z = 1;
  std::uint32_t g = 0;
  friend bool operator==(const CageParams&, const CageParams&) = default;
};

// With z = 1 the arcs form a permutation digraph: disjoint directed cycles.
// A skeleton lists the cycle lengths in non-increasing order.
using Skeleton = std::vector<std::uint32_t>;

// Every partition of n into parts >= max(g, 2), each exactly once, in
// lexicographically decreasing order. Cycles shorter than g would already be
// cycles of the mixed graph; length 1 would be a loop.
std::vector<Skeleton> arc_skeletons(std::uint32_t n, std::uint32_t g);

// Arcs of the skeleton: cycle c occupies a consecutive block of vertices
// s, s+1, ..., s+len-1 with arcs s+i -> s+(i+1 mod len).
MixedGraph skeleton_graph(const Skeleton& skeleton);

enum class SearchMode { kDecide, kEnumerate };

struct SearchLimits {
  std::optional<std::uint64_t> max_nodes;  // per call, not cumulative
  std::optional<double> max_seconds;
};

struct SearchSpec {
  CageParams params;
  std::uint32_t n = 0;
  SearchMode mode = SearchMode::kDecide;
  SearchLimits limits;
  // Only graphs whose girth is exactly g count as witnesses; regular graphs
  // of larger girth are tallied in SearchStats::girth_exceeded.
  bool exact_girth = true;
  unsigned threads = 1;
};

struct SearchStats {
  std::uint64_t nodes = 0;              // search-tree nodes visited
  std::uint64_t girth_prunes = 0;       // some vertex lacks girth-safe partners
  std::uint64_t canonicity_prunes = 0;  // completions rejected as non-canonical
  std::uint64_t completions = 0;        // regular graphs of girth >= g reached
  std::uint64_t girth_exceeded = 0;     // completions with girth > g (exact mode)
  std::uint64_t skeletons_finished = 0;

  SearchStats& operator+=(const SearchStats& o);
  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct Witness {
  MixedGraph graph;
  Skeleton skeleton;
  std::size_t girth = 0;
};

// Everything needed to continue an interrupted search. `path` is the branch
// sequence (0 = take edge, 1 = forbid edge) from the root of skeleton
// `skeleton_index` down to the first node not yet visited.
struct SearchCheckpoint {
  static constexpr int kVersion = 1;

  CageParams params;
  std::uint32_t n = 0;
  SearchMode mode = SearchMode::kDecide;
  bool exact_girth = true;
  std::size_t skeleton_index = 0;
  std::string path;
  SearchStats stats;
  std::vector<Witness> witnesses;

  std::string to_json() const;
  // Throws Error(kBadCheckpoint) on malformed or foreign input.
  static SearchCheckpoint from_json(std::string_view text);
};

enum class SearchStatus { kFound, kExhaustedNone, kBudgetExceeded };

std::string_view to_string(SearchStatus status);
std::string_view to_string(SearchMode mode);

struct SearchOutcome {
  SearchStatus status = SearchStatus::kExhaustedNone;
  std::vector<Witness> witnesses;  // one per isomorphism class in enumerate mode
  SearchStats stats;
  std::optional<SearchCheckpoint> checkpoint;  // set iff kBudgetExceeded
};

// Searches for (r,1,g)-graphs on n vertices (n <= 64): for each skeleton,
// completes the edge-degrees by branching on the vertex with the fewest
// girth-safe partners. In enumerate mode a completed graph is kept only if its
// edge set is lexicographically greatest among its images under the
// skeleton's automorphism group, so each isomorphism class appears once.
// Results do not depend on spec.threads. Throws Error(kInvalidArgument) for
// z != 1, n > 64, or a resume checkpoint from a different spec.
SearchOutcome search_order(const SearchSpec& spec,
                           const SearchCheckpoint* resume = nullptr);

// Whether `g` is canonical (lexicographically greatest edge set, pairs
// ordered by larger endpoint then smaller) among its relabelings by
// automorphisms of its skeleton. `g` must have the arcs of skeleton_graph.
bool is_skeleton_canonical(const MixedGraph& g, const Skeleton& skeleton);

enum class CageProvenance { kBoundMatched, kSearchDetermined };

struct OrderAttempt {
  std::uint32_t n = 0;
  SearchStatus status = SearchStatus::kExhaustedNone;
  SearchStats stats;
};

struct CageNumber {
  CageParams params;
  std::uint32_t value = 0;
  CageProvenance provenance = CageProvenance::kBoundMatched;
  Witness witness;
  std::uint64_t lower_bound = 0;  // ahm_bound(r, g); smaller orders are not searched
  std::vector<OrderAttempt> attempts;
};

class Inconclusive : public Error {
 public:
  Inconclusive(const std::string& message, std::vector<OrderAttempt> attempts)
      : Error(ErrorCode::kInconclusive, message), attempts_(std::move(attempts)) {}
  const std::vector<OrderAttempt>& attempts() const noexcept { return attempts_; }

 private:
  std::vector<OrderAttempt> attempts_;
};

// Searches n = ahm_bound(r,g), ahm_bound(r,g)+1, ..., n_max in decide mode
// until a graph of girth exactly g turns up. Throws Inconclusive when the cap
// or a budget is hit first.
CageNumber determine_cage_number(const CageParams& params, std::uint32_t n_max,
                                 const SearchLimits& limits_per_order = {},
                                 unsigned threads = 1);

}  // namespace mixedcage
