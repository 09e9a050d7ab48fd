#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mixedcage/graph.hpp"

namespace mixedcage {

enum class StepKind { kEdge, kArc };

// A closed walk v_0, ..., v_k = v_0 together with the incidence used for each
// step. A valid witness repeats no vertex other than v_0 = v_k, uses every
// edge and arc at most once, and follows arcs only forward.
struct CycleWitness {
  std::vector<Vertex> vertices;
  std::vector<StepKind> steps;

  std::size_t length() const noexcept { return steps.size(); }
  std::string to_string() const;
  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

struct GirthResult {
  std::optional<std::size_t> girth;  // nullopt means acyclic (infinite girth)
  std::optional<CycleWitness> witness;

  bool is_infinite() const noexcept { return !girth.has_value(); }
};

// Checks `w` against the cycle definition on host graph `g`. On failure the
// reason is written to `why` when provided.
bool validate_cycle(const MixedGraph& g, const CycleWitness& w,
                    std::string* why = nullptr);

// Shortest cycle. Ties go to the smallest root, then the smallest closing
// neighbor (edge before arc), then BFS order over sorted neighbor lists.
GirthResult girth(const MixedGraph& g);

// Literal enumeration of vertex sequences up to `max_len` steps. Meant for
// small graphs. If nothing is found and max_len >= n the graph is acyclic and
// an infinite result is returned; otherwise throws Error(kCapExceeded).
GirthResult girth_bruteforce(const MixedGraph& g, std::size_t max_len);

struct GirthCheck {
  bool ok = true;
  std::optional<CycleWitness> violation;  // a cycle shorter than the target
};

GirthCheck has_girth_at_least(const MixedGraph& g, std::size_t target);

// A connection about to be added to a graph.
struct Incidence {
  StepKind kind = StepKind::kEdge;
  Vertex from = 0;  // arc tail, or either endpoint of an edge
  Vertex to = 0;
};

// Assumes `g` already has girth >= target and checks only the cycles that
// pass through `added`. Equivalent to has_girth_at_least on g + added under
// that assumption. The witness refers to g + added.
// Throws Error(kDuplicate) if `added` is already present, kSelfLoop for a loop.
GirthCheck has_girth_at_least_after_adding(const MixedGraph& g,
                                           const Incidence& added,
                                           std::size_t target);

// g with `added` inserted.
MixedGraph with_incidence(const MixedGraph& g, const Incidence& added);

}  // namespace mixedcage
