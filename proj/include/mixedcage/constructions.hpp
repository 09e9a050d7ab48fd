#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixedcage/error.hpp"
#include "mixedcage/girth.hpp"
#include "mixedcage/graph.hpp"

namespace mixedcage {

// Vertex v(row, pos) of a three-row circulant layout with rows of length m
// has index m * row + pos.
struct RowLabeling {
  std::uint32_t m = 10;

  Vertex vertex(std::uint32_t row, std::int64_t pos) const;
  std::uint32_t row(Vertex v) const { return v / m; }
  std::uint32_t pos(Vertex v) const { return v % m; }
};

// Edges v(from_row, j) -- v(to_row, j + offset) for every j mod m.
struct EdgeFamily {
  std::uint32_t from_row = 0;
  std::uint32_t to_row = 0;
  std::int64_t offset = 0;

  std::string to_string() const;
  friend bool operator==(const EdgeFamily&, const EdgeFamily&) = default;
};

struct ThreeRowRecipe {
  std::uint32_t m = 10;
  // Row i carries the directed cycle v(i,j) -> v(i,j+1) when set.
  std::array<bool, 3> arc_rows{true, true, true};
  std::vector<EdgeFamily> families;

  // Listed edge rules of the order-30 cage, scaled to row length m:
  // v(0,j)--v(1,j), v(0,j)--v(2,j+half), v(1,j)--v(2,j+d), v(1,j)--v(2,j+e).
  static ThreeRowRecipe listed_rules(std::uint32_t m, std::int64_t half,
                                     std::int64_t d, std::int64_t e);
};

// Builds the 3m-vertex graph. Offsets are reduced mod m; a same-row family
// whose offset is m/2 contributes each edge once. Throws Error(kCollision)
// when two families produce the same edge, Error(kSelfLoop) for a same-row
// family with offset 0, and Error(kInvalidArgument) for m < 3 or row > 2.
MixedGraph build_three_row(const ThreeRowRecipe& recipe);

// Regularity and girth of a candidate (3,1,6) construction.
struct GateReport {
  DegreeProfile profile;
  GirthResult girth;
  bool passed = false;
  std::string summary() const;
};

GateReport run_g30_gate(const MixedGraph& g);

// Raised when the listed construction rules do not produce a (3,1,6)-graph
// and no single-family completion repairs them.
class VerificationFailed : public Error {
 public:
  explicit VerificationFailed(GateReport report);
  const GateReport& report() const noexcept { return report_; }

 private:
  GateReport report_;
};

// Outcome of completing the listed rules to a (3,1,6)-graph.
struct G30Derivation {
  ThreeRowRecipe listed;            // rules as listed, arcs on all three rows
  GateReport listed_gate;           // what the listed rules alone achieve
  std::vector<EdgeFamily> candidates_tried;
  std::vector<EdgeFamily> passing;  // completions that pass the gate
  ThreeRowRecipe completed;         // listed + the unique passing family
};

// Tries every single extra edge family incident to row 0 (row 0 to row 0,
// 1 or 2, every offset) on top of the listed rules and keeps those that
// pass the gate.
G30Derivation derive_g30();

// The order-30 (3,1,6)-graph: vertex 10*i + j is v(i,j). Runs the gate on
// the result and throws VerificationFailed if it does not hold.
MixedGraph build_g30();

// Rotation v(i,j) -> v(i,j+1) and the row swap v(0,j) -> v(0,j),
// v(1,j) -> v(2,j+5), v(2,j) -> v(1,j+5).
Permutation g30_rotation();
Permutation g30_row_swap();

}  // namespace mixedcage
