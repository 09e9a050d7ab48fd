#include "mixedcage/constructions.hpp"

#include <algorithm>
#include <set>

#include "mixedcage/error.hpp"

namespace mixedcage {

namespace {

std::int64_t reduce(std::int64_t x, std::uint32_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  return ((x % mm) + mm) % mm;
}

}  // namespace

Vertex RowLabeling::vertex(std::uint32_t row, std::int64_t pos) const {
  return static_cast<Vertex>(row * m + reduce(pos, m));
}

std::string EdgeFamily::to_string() const {
  return "v(" + std::to_string(from_row) + ",j)--v(" + std::to_string(to_row) +
         ",j" + (offset < 0 ? "" : "+") + std::to_string(offset) + ")";
}

ThreeRowRecipe ThreeRowRecipe::listed_rules(std::uint32_t m, std::int64_t half,
                                            std::int64_t d, std::int64_t e) {
  ThreeRowRecipe r;
  r.m = m;
  r.families = {{0, 1, 0}, {0, 2, half}, {1, 2, d}, {1, 2, e}};
  return r;
}

MixedGraph build_three_row(const ThreeRowRecipe& recipe) {
  const std::uint32_t m = recipe.m;
  if (m < 3) {
    throw Error(ErrorCode::kInvalidArgument, "row length must be >= 3");
  }
  const RowLabeling lab{m};
  std::vector<VertexPair> arcs;
  for (std::uint32_t row = 0; row < 3; ++row) {
    if (!recipe.arc_rows[row]) continue;
    for (std::uint32_t j = 0; j < m; ++j) {
      arcs.emplace_back(lab.vertex(row, j), lab.vertex(row, j + 1));
    }
  }

  std::set<VertexPair> seen;
  std::vector<VertexPair> edges;
  for (const EdgeFamily& f : recipe.families) {
    if (f.from_row > 2 || f.to_row > 2) {
      throw Error(ErrorCode::kInvalidArgument, "row index above 2 in " +
                                                   f.to_string());
    }
    const std::int64_t off = reduce(f.offset, m);
    if (f.from_row == f.to_row && off == 0) {
      throw Error(ErrorCode::kSelfLoop, f.to_string());
    }
    std::set<VertexPair> own;
    for (std::uint32_t j = 0; j < m; ++j) {
      Vertex a = lab.vertex(f.from_row, j);
      Vertex b = lab.vertex(f.to_row, j + off);
      VertexPair key{std::min(a, b), std::max(a, b)};
      // A same-row family with offset m/2 meets each edge twice.
      if (!own.insert(key).second) continue;
      if (!seen.insert(key).second) {
        throw Error(ErrorCode::kCollision,
                    f.to_string() + " repeats edge {" +
                        std::to_string(key.first) + "," +
                        std::to_string(key.second) + "}");
      }
      edges.push_back(key);
    }
  }
  return MixedGraph(3 * m, edges, arcs);
}

std::string GateReport::summary() const {
  std::string out = "order " + std::to_string(profile.deg.size());
  if (profile.regular) {
    out += ", regular r=" + std::to_string(profile.regular->r) +
           " z=" + std::to_string(profile.regular->z);
  } else {
    auto [dmin, dmax] = std::minmax_element(profile.deg.begin(), profile.deg.end());
    out += ", not regular";
    if (dmin != profile.deg.end()) {
      out += " (edge-degree " + std::to_string(*dmin) + ".." +
             std::to_string(*dmax) + ")";
    }
  }
  out += ", girth ";
  out += girth.is_infinite() ? "infinite" : std::to_string(*girth.girth);
  if (girth.witness) out += " [" + girth.witness->to_string() + "]";
  return out;
}

GateReport run_g30_gate(const MixedGraph& g) {
  GateReport report;
  report.profile = degree_profile(g);
  report.girth = girth(g);
  report.passed = g.order() == 30 && report.profile.is_regular(3, 1) &&
                  report.girth.girth == std::optional<std::size_t>(6);
  return report;
}

VerificationFailed::VerificationFailed(GateReport report)
    : Error(ErrorCode::kVerificationFailed, report.summary()),
      report_(std::move(report)) {}

G30Derivation derive_g30() {
  G30Derivation out;
  out.listed = ThreeRowRecipe::listed_rules(10, 5, 2, -2);
  out.listed_gate = run_g30_gate(build_three_row(out.listed));
  if (out.listed_gate.passed) {
    out.completed = out.listed;
    return out;
  }

  std::vector<EdgeFamily> candidates;
  for (std::int64_t k = 1; k <= 5; ++k) candidates.push_back({0, 0, k});
  for (std::uint32_t row = 1; row <= 2; ++row) {
    for (std::int64_t k = 0; k < 10; ++k) candidates.push_back({0, row, k});
  }
  for (const EdgeFamily& extra : candidates) {
    out.candidates_tried.push_back(extra);
    ThreeRowRecipe recipe = out.listed;
    recipe.families.push_back(extra);
    try {
      if (run_g30_gate(build_three_row(recipe)).passed) {
        out.passing.push_back(extra);
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kCollision) throw;
    }
  }
  if (out.passing.size() != 1) throw VerificationFailed(out.listed_gate);
  out.completed = out.listed;
  out.completed.families.push_back(out.passing.front());
  return out;
}

MixedGraph build_g30() {
  MixedGraph g = build_three_row(derive_g30().completed);
  GateReport report = run_g30_gate(g);
  if (!report.passed) throw VerificationFailed(std::move(report));
  return g;
}

Permutation g30_rotation() {
  const RowLabeling lab{10};
  std::vector<Vertex> image(30);
  for (Vertex v = 0; v < 30; ++v) image[v] = lab.vertex(lab.row(v), lab.pos(v) + 1);
  return Permutation(std::move(image));
}

Permutation g30_row_swap() {
  const RowLabeling lab{10};
  std::vector<Vertex> image(30);
  for (Vertex v = 0; v < 30; ++v) {
    const std::uint32_t i = lab.row(v);
    const std::int64_t j = lab.pos(v);
    image[v] = i == 0 ? v : lab.vertex(3 - i, j + 5);
  }
  return Permutation(std::move(image));
}

}  // namespace mixedcage
