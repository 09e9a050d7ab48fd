#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mixedcage/graph.hpp"

namespace mixedcage {

// Relabeling-invariant encoding of a mixed graph. `encoding` lists, row-major
// over canonical labels (i, j), one byte per ordered pair with bit 0 = edge,
// bit 1 = arc i->j, bit 2 = arc j->i; it is the lexicographic minimum over
// the search tree. `labeling` maps each vertex to its canonical label.
struct CanonicalForm {
  std::vector<std::uint8_t> encoding;
  Permutation labeling;

  // Graph relabeled by `labeling`; equal for isomorphic inputs.
  MixedGraph canonical_graph(const MixedGraph& g) const {
    return apply_permutation(g, labeling);
  }
};

CanonicalForm canonical_form(const MixedGraph& g);

struct IsomorphismResult {
  bool isomorphic = false;
  std::optional<Permutation> witness;  // maps g onto h
};

IsomorphismResult is_isomorphic(const MixedGraph& g, const MixedGraph& h);

struct AutGroup {
  std::size_t degree = 0;  // number of points acted on
  std::vector<Permutation> generators;
  // Orbit lengths along the stabilizer chain; their product is the order.
  std::vector<std::uint64_t> orbit_lengths;

  std::optional<std::uint64_t> order() const;  // nullopt past 2^64
  std::string order_string() const;            // exact decimal
};

// Generators and exact order via a stabilizer chain built on the first path
// of the individualization-refinement tree.
AutGroup automorphism_group(const MixedGraph& g);

// All elements of the group generated by `generators` (closure by
// composition). Throws Error(kTooLarge) past `cap` elements.
std::vector<Permutation> enumerate_group(const std::vector<Permutation>& generators,
                                         std::size_t degree, std::size_t cap);

struct GroupFingerprint {
  std::uint64_t order = 0;
  bool abelian = false;
  std::uint64_t max_element_order = 0;
  std::map<std::uint64_t, std::uint64_t> element_orders;  // order -> count
  std::string structure;  // e.g. "Z2 x Z10", "S3", "D5"
};

// Enumerates the group (Error(kTooLarge) past `cap`), checks the element count
// against the stabilizer-chain order, and names abelian groups by their
// invariant factors.
GroupFingerprint group_fingerprint(const AutGroup& group, std::size_t cap = 1000);

}  // namespace mixedcage
