#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "mixedcage/bounds.hpp"
#include "mixedcage/error.hpp"
#include "support.hpp"

using namespace mixedcage;

namespace {

// (r(r-1)^d - 2) / (r - 2), valid for r >= 3.
unsigned __int128 closed_form(std::uint64_t r, std::uint64_t d) {
  unsigned __int128 p = 1;
  for (std::uint64_t i = 0; i < d; ++i) p *= (r - 1);
  return (r * p - 2) / (r - 2);
}

}  // namespace

TEST_CASE("ahm bound reference values") {
  CHECK(ahm_bound(3, 6) == 30);
  CHECK(ahm_bound(6, 6) == 90);
  CHECK(ahm_bound(3, 1) == 1);
  CHECK(ahm_bound(3, 3) == 6);
  CHECK(ahm_bound(3, 4) == 10);
  CHECK(ahm_bound(3, 5) == 20);
}

TEST_CASE("moore bound small cases") {
  CHECK(moore_bound(3, 0) == 1);
  CHECK(moore_bound(3, 1) == 4);
  CHECK(moore_bound(3, 2) == 10);
  CHECK(moore_bound(6, 2) == 37);
  for (std::uint64_t d = 0; d < 50; ++d) {
    CHECK(moore_bound(2, d) == 2 * d + 1);
    CHECK(moore_bound(1, d) == (d == 0 ? 1 : 2));
  }
}

TEST_CASE("level sum matches the closed form for d <= 12") {
  for (std::uint64_t r = 3; r <= 40; ++r) {
    for (std::uint64_t d = 0; d <= 12; ++d) {
      const unsigned __int128 expected = closed_form(r, d);
      if (expected > UINT64_MAX) {
        CHECK_THROWS_AS(moore_bound(r, d), Error);
        continue;
      }
      CHECK(moore_bound(r, d) == static_cast<std::uint64_t>(expected));
    }
  }
}

TEST_CASE("moore bound is strictly increasing") {
  for (std::uint64_t r = 3; r <= 12; ++r) {
    for (std::uint64_t d = 0; d < 10; ++d) {
      CHECK(moore_bound(r, d) < moore_bound(r, d + 1));
      if (d >= 1) CHECK(moore_bound(r, d) < moore_bound(r + 1, d));
    }
  }
}

TEST_CASE("depth profile is a palindrome") {
  for (std::uint64_t g = 1; g <= 30; ++g) {
    const auto p = ahm_depth_profile(g);
    REQUIRE(p.size() == g);
    CHECK(std::equal(p.begin(), p.end(), p.rbegin()));
    CHECK(p.front() == 0);
    CHECK(*std::max_element(p.begin(), p.end()) == (g - 1) / 2);
    std::uint64_t sum = 0;
    for (auto d : p) sum += moore_bound(4, d);
    CHECK(ahm_bound(4, g) == sum);
    // Mirror halves plus the middle term when g is odd.
    std::uint64_t half = 0;
    for (std::uint64_t i = 0; i < g / 2; ++i) half += moore_bound(4, p[i]);
    CHECK(ahm_bound(4, g) == 2 * half + (g % 2 ? moore_bound(4, p[g / 2]) : 0));
  }
}

TEST_CASE("checked arithmetic and argument errors") {
  using testing_support::code_of;
  CHECK(code_of([] { moore_bound(1000, 10); }) == ErrorCode::kOverflow);
  CHECK(code_of([] { ahm_bound(1000, 30); }) == ErrorCode::kOverflow);
  CHECK(code_of([] { moore_bound(0, 3); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { ahm_bound(3, 0); }) == ErrorCode::kInvalidArgument);
  CHECK(moore_bound(2, 1000000) == 2000001);
}
