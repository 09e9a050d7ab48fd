#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mixedcage/permutation.hpp"

namespace mixedcage {

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Directed arc tail -> head.
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

using VertexPair = std::pair<Vertex, Vertex>;

// A simple mixed graph on vertices 0..n-1: a set of edges and a set of arcs,
// no loops, no duplicate edge, no duplicate arc. An edge and an arc on the
// same pair may coexist. Immutable once built.
class MixedGraph {
 public:
  MixedGraph() = default;

  // Validates and normalizes. Throws Error with kOutOfRange, kSelfLoop or
  // kDuplicate; duplicates are rejected rather than merged.
  MixedGraph(std::size_t n, std::span<const VertexPair> edges,
             std::span<const VertexPair> arcs);

  std::size_t order() const noexcept { return n_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  bool has_edge(Vertex a, Vertex b) const;
  bool has_arc(Vertex tail, Vertex head) const;

  // Sorted neighbor lists.
  std::span<const Vertex> edge_neighbors(Vertex v) const { return edge_adj_[v]; }
  std::span<const Vertex> out_neighbors(Vertex v) const { return out_adj_[v]; }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_adj_[v]; }

  // Same vertex set with every arc reversed.
  MixedGraph converse() const;

  std::vector<VertexPair> edge_pairs() const;
  std::vector<VertexPair> arc_pairs() const;

  friend bool operator==(const MixedGraph& a, const MixedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.arcs_ == b.arcs_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> edge_adj_;
  std::vector<std::vector<Vertex>> out_adj_;
  std::vector<std::vector<Vertex>> in_adj_;
};

struct RegularWitness {
  std::size_t r = 0;  // edge-degree
  std::size_t z = 0;  // out-degree = in-degree
  friend bool operator==(const RegularWitness&, const RegularWitness&) = default;
};

struct DegreeProfile {
  std::vector<std::size_t> deg;
  std::vector<std::size_t> outdeg;
  std::vector<std::size_t> indeg;
  std::optional<RegularWitness> regular;

  bool is_regular(std::size_t r, std::size_t z) const {
    return regular && regular->r == r && regular->z == z;
  }
};

DegreeProfile degree_profile(const MixedGraph& g);

// Edge {u,v} -> {p(u),p(v)}, arc (u,v) -> (p(u),p(v)).
// Throws Error(kLengthMismatch) if p.size() != g.order().
MixedGraph apply_permutation(const MixedGraph& g, const Permutation& p);

// Adjacency-matrix text: row i, column j is 1 when i has an edge or an arc to j.
// A symmetric pair of ones is an edge, a lone one is an arc.
struct MatrixReadOptions {
  // Leading lines that are not matrix rows are skipped and reported instead
  // of raising BadToken.
  bool allow_header = false;
};

struct MatrixReadResult {
  MixedGraph graph;
  std::vector<std::string> skipped_header_lines;
};

// Rows may be whitespace-separated tokens ("0 1 0") or contiguous digits
// ("010"). Throws Error with kNonSquare, kBadToken or kNonzeroDiagonal.
MatrixReadResult read_adjacency_matrix(std::string_view text,
                                       const MatrixReadOptions& options = {});

// Space-separated 0/1 entries, one newline-terminated line per row.
// The format has one bit per ordered pair, so antiparallel arcs and an edge
// coexisting with an arc are not expressible (both would read back as a
// plain edge); such graphs throw Error(kInvalidArgument).
bool is_matrix_representable(const MixedGraph& g);
std::string write_adjacency_matrix(const MixedGraph& g);

// Graphviz digraph. Arcs are plain `u -> v;` statements, edges carry
// `[dir=none]`. Output is deterministic.
std::string export_dot(const MixedGraph& g, std::string_view name = "G");

}  // namespace mixedcage
