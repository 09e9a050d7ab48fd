#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "mixedcage/constructions.hpp"
#include "mixedcage/graph.hpp"
#include "mixedcage/permutation.hpp"
#include "support.hpp"

using namespace mixedcage;
using testing_support::code_of;

TEST_CASE("permutation basics") {
  CHECK(code_of([] { Permutation({0, 0, 1}); }) == ErrorCode::kNotAPermutation);
  CHECK(code_of([] { Permutation({0, 3}); }) == ErrorCode::kNotAPermutation);
  const Permutation p({1, 2, 0, 4, 3});
  CHECK(p.order() == 6);
  CHECK(p.cycle_notation() == "(0 1 2)(3 4)");
  CHECK(Permutation::identity(4).cycle_notation() == "()");
  CHECK(p.after(p.inverse()).is_identity());
  CHECK(code_of([&] { p.after(Permutation::identity(3)); }) == ErrorCode::kLengthMismatch);
}

TEST_CASE("composition applies the right factor first") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const auto p = testing_support::random_permutation(rng, n);
    const auto q = testing_support::random_permutation(rng, n);
    const auto pq = p.after(q);
    for (Vertex v = 0; v < n; ++v) CHECK(pq(v) == p(q(v)));
    // order is the least k with p^k = id
    Permutation power = p;
    std::uint64_t k = 1;
    while (!power.is_identity()) {
      power = power.after(p);
      ++k;
    }
    CHECK(p.order() == k);
  }
}

TEST_CASE("construction validation") {
  using P = std::vector<VertexPair>;
  CHECK(code_of([] { MixedGraph(3, P{{0, 3}}, P{}); }) == ErrorCode::kOutOfRange);
  CHECK(code_of([] { MixedGraph(3, P{}, P{{2, 2}}); }) == ErrorCode::kSelfLoop);
  CHECK(code_of([] { MixedGraph(3, P{{0, 1}, {1, 0}}, P{}); }) == ErrorCode::kDuplicate);
  CHECK(code_of([] { MixedGraph(3, P{}, P{{0, 1}, {0, 1}}); }) == ErrorCode::kDuplicate);
  // An edge and an arc may share a pair; so may two opposite arcs.
  const MixedGraph g(2, P{{1, 0}}, P{{0, 1}, {1, 0}});
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(g.has_arc(0, 1));
  CHECK(g.has_arc(1, 0));
  CHECK(g.edges().size() == 1);
}

TEST_CASE("degree sums") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = testing_support::random_graph(rng, 1 + trial % 15, 0.3, 0.2);
    const auto p = degree_profile(g);
    CHECK(std::accumulate(p.deg.begin(), p.deg.end(), std::size_t{0}) == 2 * g.edges().size());
    CHECK(std::accumulate(p.outdeg.begin(), p.outdeg.end(), std::size_t{0}) == g.arcs().size());
    CHECK(std::accumulate(p.indeg.begin(), p.indeg.end(), std::size_t{0}) == g.arcs().size());
    bool regular = true;
    for (Vertex v = 0; v < g.order(); ++v) {
      regular = regular && p.deg[v] == p.deg[0] && p.outdeg[v] == p.outdeg[0] &&
                p.indeg[v] == p.outdeg[0];
    }
    CHECK(p.regular.has_value() == regular);
  }
  CHECK_FALSE(degree_profile(MixedGraph()).regular.has_value());
}

TEST_CASE("relabeling") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 10;
    const auto g = testing_support::random_graph(rng, n, 0.3, 0.3);
    const auto p = testing_support::random_permutation(rng, n);
    const auto q = testing_support::random_permutation(rng, n);
    const auto h = apply_permutation(g, p);
    for (const Edge& e : g.edges()) CHECK(h.has_edge(p(e.u), p(e.v)));
    for (const Arc& a : g.arcs()) CHECK(h.has_arc(p(a.tail), p(a.head)));
    CHECK(h.edges().size() == g.edges().size());
    CHECK(h.arcs().size() == g.arcs().size());
    CHECK(apply_permutation(apply_permutation(g, q), p) == apply_permutation(g, p.after(q)));
    CHECK(apply_permutation(h, p.inverse()) == g);
    CHECK(g.converse().converse() == g);
  }
  CHECK(code_of([] { apply_permutation(MixedGraph(3, {}, {}), Permutation::identity(2)); }) ==
        ErrorCode::kLengthMismatch);
}

TEST_CASE("matrix round trip on representable graphs") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = testing_support::random_representable(rng, trial % 14, 0.3, 0.3);
    REQUIRE(is_matrix_representable(g));
    const auto text = write_adjacency_matrix(g);
    CHECK(read_adjacency_matrix(text).graph == g);
  }
}

TEST_CASE("matrix writer rejects two-cycle pairs") {
  using P = std::vector<VertexPair>;
  CHECK_FALSE(is_matrix_representable(MixedGraph(2, P{}, P{{0, 1}, {1, 0}})));
  CHECK_FALSE(is_matrix_representable(MixedGraph(2, P{{0, 1}}, P{{0, 1}})));
  CHECK(code_of([] { write_adjacency_matrix(MixedGraph(2, P{{0, 1}}, P{{1, 0}})); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("matrix reader layouts and errors") {
  const auto spaced = read_adjacency_matrix("0 1 0\n1 0 1\n0 0 0\n").graph;
  const auto packed = read_adjacency_matrix("010\r\n101\r\n\r\n000").graph;
  CHECK(spaced == packed);
  CHECK(spaced.edges().size() == 1);
  CHECK(spaced.has_arc(1, 2));
  CHECK_FALSE(spaced.has_arc(2, 1));
  CHECK(write_adjacency_matrix(spaced) == "0 1 0\n1 0 1\n0 0 0\n");
  CHECK(read_adjacency_matrix("").graph.order() == 0);
  CHECK(write_adjacency_matrix(MixedGraph()) == "");

  CHECK(code_of([] { read_adjacency_matrix("0 1\n1 0 0\n"); }) == ErrorCode::kNonSquare);
  CHECK(code_of([] { read_adjacency_matrix("1 0\n0 0\n"); }) == ErrorCode::kNonzeroDiagonal);
  CHECK(code_of([] { read_adjacency_matrix("0 2\n0 0\n"); }) == ErrorCode::kBadToken);
  CHECK(code_of([] { read_adjacency_matrix("order 2\n01\n10\n"); }) == ErrorCode::kBadToken);

  const auto lenient = read_adjacency_matrix("order 2\n# x\n01\n10\n", {.allow_header = true});
  CHECK(lenient.skipped_header_lines == std::vector<std::string>{"order 2", "# x"});
  CHECK(lenient.graph.edges().size() == 1);
  // Only leading lines count as a header.
  CHECK(code_of([] { read_adjacency_matrix("01\nfoo\n10\n", {.allow_header = true}); }) ==
        ErrorCode::kBadToken);
}

TEST_CASE("dot export") {
  CHECK(export_dot(MixedGraph()) == "digraph G {\n}\n");
  using P = std::vector<VertexPair>;
  const auto small = export_dot(MixedGraph(3, P{{0, 1}}, P{{2, 0}}), "T");
  CHECK(small == "digraph T {\n  0;\n  1;\n  2;\n  2 -> 0;\n  0 -> 1 [dir=none];\n}\n");

  const auto dot = export_dot(build_g30());
  std::size_t edge_lines = 0, arc_lines = 0, pos = 0;
  while ((pos = dot.find(" -> ", pos)) != std::string::npos) {
    const auto eol = dot.find('\n', pos);
    (dot.substr(pos, eol - pos).find("dir=none") != std::string::npos ? edge_lines : arc_lines)++;
    pos = eol;
  }
  CHECK(edge_lines == 45);
  CHECK(arc_lines == 30);
}
