#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mixedcage/constructions.hpp"
#include "mixedcage/girth.hpp"
#include "support.hpp"

using namespace mixedcage;
using P = std::vector<VertexPair>;

namespace {

std::optional<std::size_t> g_of(std::size_t n, P edges, P arcs) {
  return girth(MixedGraph(n, edges, arcs)).girth;
}

}  // namespace

TEST_CASE("edge semantics") {
  CHECK(g_of(2, {{0, 1}}, {}) == std::nullopt);
  CHECK(g_of(2, {{0, 1}}, {{0, 1}}) == 2u);
  CHECK(g_of(2, {}, {{0, 1}, {1, 0}}) == 2u);
  CHECK(g_of(2, {}, {{0, 1}}) == std::nullopt);
  CHECK(g_of(3, {{0, 1}, {1, 2}, {0, 2}}, {}) == 3u);
  CHECK(g_of(3, {}, {{0, 1}, {1, 2}, {2, 0}}) == 3u);
  // An arc cannot be walked backwards.
  CHECK(g_of(3, {}, {{0, 1}, {1, 2}, {0, 2}}) == std::nullopt);
  CHECK(g_of(3, {{1, 2}, {2, 0}}, {{0, 1}}) == 3u);
  CHECK(g_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {}) == std::nullopt);
  CHECK(g_of(0, {}, {}) == std::nullopt);
}

TEST_CASE("witness cycles obey the definition") {
  const MixedGraph g(3, P{{0, 1}, {1, 2}}, P{{2, 0}});
  std::string why;
  CHECK(validate_cycle(g, {{0, 1, 2, 0}, {StepKind::kEdge, StepKind::kEdge, StepKind::kArc}},
                       &why));
  // Reusing an edge.
  CHECK_FALSE(validate_cycle(g, {{0, 1, 0}, {StepKind::kEdge, StepKind::kEdge}}, &why));
  // Arc against its direction.
  CHECK_FALSE(validate_cycle(g, {{0, 2, 1, 0}, {StepKind::kArc, StepKind::kEdge, StepKind::kEdge}},
                             &why));
  // Repeated inner vertex.
  const MixedGraph bow(5, P{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}, P{});
  const std::vector<StepKind> six(6, StepKind::kEdge);
  CHECK_FALSE(validate_cycle(bow, {{0, 1, 2, 3, 4, 2, 0}, six}, &why));
  // Not closed.
  CHECK_FALSE(validate_cycle(g, {{0, 1, 2}, {StepKind::kEdge, StepKind::kEdge}}, &why));
}

TEST_CASE("girth agrees with brute force on random graphs") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> density(0.0, 0.45);
  int finite = 0, infinite = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 1 + trial % 10;
    const auto g = testing_support::random_graph(rng, n, density(rng), density(rng) / 2);
    const auto fast = girth(g);
    const auto slow = girth_bruteforce(g, n);
    REQUIRE(fast.girth == slow.girth);
    if (fast.girth) {
      ++finite;
      REQUIRE(fast.witness);
      CHECK(fast.witness->length() == *fast.girth);
      CHECK(validate_cycle(g, *fast.witness, nullptr));
      CHECK(validate_cycle(g, *slow.witness, nullptr));
    } else {
      ++infinite;
      CHECK_FALSE(fast.witness);
    }
  }
  CHECK(finite > 500);
  CHECK(infinite > 100);
}

TEST_CASE("girth is invariant under relabeling and never grows with more incidences") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + trial % 9;
    const auto g = testing_support::random_graph(rng, n, 0.2, 0.15);
    const auto base = girth(g).girth;
    CHECK(girth(apply_permutation(g, testing_support::random_permutation(rng, n))).girth == base);
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    const Vertex a = pick(rng), b = pick(rng);
    if (a == b) continue;
    const bool as_edge = trial % 2 == 0;
    if (as_edge ? g.has_edge(a, b) : g.has_arc(a, b)) continue;
    const auto bigger =
        girth(with_incidence(g, {as_edge ? StepKind::kEdge : StepKind::kArc, a, b})).girth;
    if (base) {
      REQUIRE(bigger);
      CHECK(*bigger <= *base);
    }
  }
}

TEST_CASE("incremental check matches a full recomputation") {
  std::mt19937_64 rng(23);
  int rejected = 0, accepted = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 3 + trial % 9;
    const std::size_t target = 2 + trial % 5;
    const auto g = testing_support::random_graph(rng, n, 0.2, 0.1);
    if (!has_girth_at_least(g, target).ok) continue;
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    const Vertex a = pick(rng), b = pick(rng);
    if (a == b) continue;
    const Incidence inc{trial % 3 ? StepKind::kEdge : StepKind::kArc, a, b};
    if (inc.kind == StepKind::kEdge ? g.has_edge(a, b) : g.has_arc(a, b)) continue;
    const auto quick = has_girth_at_least_after_adding(g, inc, target);
    const auto gi = with_incidence(g, inc);
    const auto full = girth(gi).girth;
    const bool expected = !full || *full >= target;
    REQUIRE(quick.ok == expected);
    if (!quick.ok) {
      ++rejected;
      REQUIRE(quick.violation);
      CHECK(quick.violation->length() < target);
      CHECK(validate_cycle(gi, *quick.violation, nullptr));
    } else {
      ++accepted;
    }
  }
  CHECK(rejected > 100);
  CHECK(accepted > 100);
}

TEST_CASE("incremental check argument errors") {
  const MixedGraph g(3, P{{0, 1}}, P{{1, 2}});
  using testing_support::code_of;
  CHECK(code_of([&] { has_girth_at_least_after_adding(g, {StepKind::kEdge, 1, 0}, 3); }) ==
        ErrorCode::kDuplicate);
  CHECK(code_of([&] { has_girth_at_least_after_adding(g, {StepKind::kArc, 2, 2}, 3); }) ==
        ErrorCode::kSelfLoop);
  CHECK(code_of([&] { has_girth_at_least_after_adding(g, {StepKind::kArc, 0, 7}, 3); }) ==
        ErrorCode::kOutOfRange);
}

TEST_CASE("brute force cap") {
  const MixedGraph c5(5, P{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}, P{});
  CHECK(testing_support::code_of([&] { girth_bruteforce(c5, 3); }) == ErrorCode::kCapExceeded);
  CHECK(girth_bruteforce(c5, 5).girth == 5u);
}

TEST_CASE("order-30 graph has girth 6") {
  const auto g = build_g30();
  const auto r = girth(g);
  CHECK(r.girth == 6u);
  CHECK(has_girth_at_least(g, 6).ok);
  CHECK_FALSE(has_girth_at_least(g, 7).ok);
}
