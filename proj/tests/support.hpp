#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mixedcage/error.hpp"
#include "mixedcage/graph.hpp"
#include "mixedcage/permutation.hpp"

namespace testing_support {

using mixedcage::MixedGraph;
using mixedcage::Permutation;
using mixedcage::Vertex;
using mixedcage::VertexPair;

// Each ordered pair independently gets an arc with probability p_arc, each
// unordered pair an edge with probability p_edge.
inline MixedGraph random_graph(std::mt19937_64& rng, std::size_t n, double p_edge,
                               double p_arc) {
  std::bernoulli_distribution edge(p_edge), arc(p_arc);
  std::vector<VertexPair> edges, arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      if (u < v && edge(rng)) edges.emplace_back(u, v);
      if (arc(rng)) arcs.emplace_back(u, v);
    }
  }
  return MixedGraph(n, edges, arcs);
}

// Same, but without antiparallel arcs or an edge sharing a pair with an arc,
// so the graph survives the adjacency-matrix format.
inline MixedGraph random_representable(std::mt19937_64& rng, std::size_t n, double p_edge,
                                       double p_arc) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::vector<VertexPair> edges, arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double x = u01(rng);
      if (x < p_edge) {
        edges.emplace_back(u, v);
      } else if (x < p_edge + p_arc / 2) {
        arcs.emplace_back(u, v);
      } else if (x < p_edge + p_arc) {
        arcs.emplace_back(v, u);
      }
    }
  }
  return MixedGraph(n, edges, arcs);
}

inline Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), Vertex{0});
  std::shuffle(image.begin(), image.end(), rng);
  return Permutation(std::move(image));
}

// All permutations of 0..n-1 in lexicographic order.
inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), Vertex{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

// Code of the Error thrown by f, or nullopt if it returns normally.
template <typename F>
std::optional<mixedcage::ErrorCode> code_of(F&& f) {
  try {
    f();
  } catch (const mixedcage::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline std::string source_path(const std::string& rel) {
  return std::string(MIXEDCAGE_SOURCE_DIR) + "/" + rel;
}

}  // namespace testing_support
