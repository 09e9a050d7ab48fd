#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "mixedcage/constructions.hpp"
#include "mixedcage/isomorphism.hpp"
#include "support.hpp"

using namespace mixedcage;
using P = std::vector<VertexPair>;

namespace {

// Automorphisms by trying every permutation.
std::vector<Permutation> brute_automorphisms(const MixedGraph& g) {
  std::vector<Permutation> out;
  for (const auto& p : testing_support::all_permutations(g.order())) {
    if (apply_permutation(g, p) == g) out.push_back(p);
  }
  return out;
}

bool brute_isomorphic(const MixedGraph& g, const MixedGraph& h) {
  if (g.order() != h.order()) return false;
  for (const auto& p : testing_support::all_permutations(g.order())) {
    if (apply_permutation(g, p) == h) return true;
  }
  return false;
}

MixedGraph directed_cycle(std::size_t n) {
  P arcs;
  for (Vertex v = 0; v < n; ++v) arcs.emplace_back(v, (v + 1) % n);
  return MixedGraph(n, {}, arcs);
}

}  // namespace

TEST_CASE("canonical form of relabeled order-30 graph") {
  const auto g = build_g30();
  const auto ref = canonical_form(g);
  const auto ref_graph = ref.canonical_graph(g);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    const auto h = apply_permutation(g, testing_support::random_permutation(rng, 30));
    const auto c = canonical_form(h);
    REQUIRE(c.encoding == ref.encoding);
    REQUIRE(c.canonical_graph(h) == ref_graph);
  }
}

TEST_CASE("canonical form of relabeled random graphs") {
  std::mt19937_64 rng(32);
  for (int graph = 0; graph < 100; ++graph) {
    const std::size_t n = 1 + graph % 16;
    const auto g = testing_support::random_graph(rng, n, 0.25, 0.2);
    const auto ref = canonical_form(g);
    for (int i = 0; i < 10; ++i) {
      const auto h = apply_permutation(g, testing_support::random_permutation(rng, n));
      REQUIRE(canonical_form(h).encoding == ref.encoding);
    }
  }
}

TEST_CASE("isomorphism verdicts match brute force") {
  std::mt19937_64 rng(33);
  int same = 0, different = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto g = testing_support::random_graph(rng, n, 0.4, 0.3);
    // Half the time a relabeled copy with one arc toggled.
    auto h = apply_permutation(g, testing_support::random_permutation(rng, n));
    if (trial % 2 && n >= 2) {
      P edges = h.edge_pairs(), arcs = h.arc_pairs();
      std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
      Vertex a = pick(rng), b = pick(rng);
      if (a != b) {
        const VertexPair arc{a, b};
        auto it = std::find(arcs.begin(), arcs.end(), arc);
        if (it != arcs.end()) {
          arcs.erase(it);
        } else {
          arcs.push_back(arc);
        }
        h = MixedGraph(n, edges, arcs);
      }
    }
    const auto res = is_isomorphic(g, h);
    REQUIRE(res.isomorphic == brute_isomorphic(g, h));
    if (res.isomorphic) {
      ++same;
      REQUIRE(res.witness);
      CHECK(apply_permutation(g, *res.witness) == h);
    } else {
      ++different;
      CHECK_FALSE(res.witness);
    }
  }
  CHECK(same > 50);
  CHECK(different > 50);
}

TEST_CASE("group order matches brute force") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const auto g = testing_support::random_graph(rng, n, trial % 3 == 0 ? 0.5 : 0.3,
                                                 trial % 4 == 0 ? 0.0 : 0.2);
    const auto expected = brute_automorphisms(g);
    const auto group = automorphism_group(g);
    REQUIRE(group.order() == expected.size());
    for (const auto& p : group.generators) CHECK(apply_permutation(g, p) == g);
    auto elements = enumerate_group(group.generators, n, 10000);
    std::sort(elements.begin(), elements.end());
    CHECK(elements == expected);
  }
}

TEST_CASE("small named groups") {
  const MixedGraph triangle(3, P{{0, 1}, {1, 2}, {0, 2}}, P{});
  auto fp = group_fingerprint(automorphism_group(triangle));
  CHECK(fp.order == 6);
  CHECK_FALSE(fp.abelian);
  CHECK(fp.structure == "S3");

  fp = group_fingerprint(automorphism_group(directed_cycle(3)));
  CHECK(fp.order == 3);
  CHECK(fp.structure == "Z3");

  fp = group_fingerprint(automorphism_group(directed_cycle(10)));
  CHECK(fp.order == 10);
  CHECK(fp.abelian);
  CHECK(fp.max_element_order == 10);
  CHECK(fp.structure == "Z10");

  P c5;
  for (Vertex v = 0; v < 5; ++v) c5.emplace_back(v, (v + 1) % 5);
  fp = group_fingerprint(automorphism_group(MixedGraph(5, c5, {})));
  CHECK(fp.order == 10);
  CHECK(fp.structure == "D5");

  CHECK(automorphism_group(MixedGraph()).order() == 1u);
  CHECK(automorphism_group(MixedGraph(12, {}, {})).order_string() == "479001600");
}

TEST_CASE("order-30 graph group") {
  const auto g = build_g30();
  const auto group = automorphism_group(g);
  CHECK(group.order() == 20u);
  const auto fp = group_fingerprint(group);
  CHECK(fp.abelian);
  CHECK(fp.max_element_order == 10);
  CHECK(fp.structure == "Z2 x Z10");
  const auto elements = enumerate_group(group.generators, 30, 1000);
  CHECK(elements.size() == 20);
  const auto rho = g30_rotation();
  const auto tau = g30_row_swap();
  CHECK(std::find(elements.begin(), elements.end(), rho) != elements.end());
  CHECK(std::find(elements.begin(), elements.end(), tau) != elements.end());
  CHECK(tau.after(tau).is_identity());
  CHECK(rho.after(tau) == tau.after(rho));
  // rho and tau generate the whole group.
  CHECK(enumerate_group({rho, tau}, 30, 1000).size() == 20);
}

TEST_CASE("order-30 graph versus its converse") {
  const auto g = build_g30();
  const auto res = is_isomorphic(g, g.converse());
  CHECK(res.isomorphic);
  REQUIRE(res.witness);
  CHECK(apply_permutation(g, *res.witness) == g.converse());
}

TEST_CASE("group enumeration cap") {
  const MixedGraph empty(8, {}, {});
  CHECK(testing_support::code_of([&] {
          enumerate_group(automorphism_group(empty).generators, 8, 100);
        }) == ErrorCode::kTooLarge);
}
