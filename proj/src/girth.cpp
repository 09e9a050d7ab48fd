#include "mixedcage/girth.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <tuple>

#include "mixedcage/error.hpp"

namespace mixedcage {

namespace {

struct Step {
  Vertex to;
  StepKind kind;
};

// Outgoing steps of every vertex: edges both ways, arcs forward. Sorted by
// target vertex, edge before arc on the same target.
std::vector<std::vector<Step>> step_lists(const MixedGraph& g) {
  std::vector<std::vector<Step>> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    auto edges = g.edge_neighbors(v);
    auto arcs = g.out_neighbors(v);
    auto& list = out[v];
    list.reserve(edges.size() + arcs.size());
    std::size_t i = 0, j = 0;
    while (i < edges.size() || j < arcs.size()) {
      if (j == arcs.size() || (i < edges.size() && edges[i] <= arcs[j])) {
        list.push_back({edges[i++], StepKind::kEdge});
      } else {
        list.push_back({arcs[j++], StepKind::kArc});
      }
    }
  }
  return out;
}

struct Path {
  std::vector<Vertex> vertices;
  std::vector<StepKind> steps;
};

// Shortest path source -> target using at most `max_steps` steps, optionally
// without the edge {source, target}.
std::optional<Path> shortest_path(const std::vector<std::vector<Step>>& steps,
                                  Vertex source, Vertex target,
                                  bool skip_direct_edge,
                                  std::size_t max_steps) {
  const std::size_t n = steps.size();
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n, kUnseen);
  std::vector<Vertex> parent(n, 0);
  std::vector<StepKind> via(n, StepKind::kEdge);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty() && dist[target] == kUnseen) {
    Vertex x = queue.front();
    queue.pop_front();
    if (dist[x] >= max_steps) break;
    for (const Step& s : steps[x]) {
      if (dist[s.to] != kUnseen) continue;
      if (skip_direct_edge && s.kind == StepKind::kEdge &&
          ((x == source && s.to == target) || (x == target && s.to == source))) {
        continue;
      }
      dist[s.to] = dist[x] + 1;
      parent[s.to] = x;
      via[s.to] = s.kind;
      queue.push_back(s.to);
    }
  }
  if (dist[target] == kUnseen || target == source) return std::nullopt;
  Path p;
  for (Vertex v = target; v != source; v = parent[v]) {
    p.vertices.push_back(v);
    p.steps.push_back(via[v]);
  }
  p.vertices.push_back(source);
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.steps.begin(), p.steps.end());
  return p;
}

CycleWitness close_path(Path path, StepKind closing) {
  CycleWitness w;
  w.vertices = std::move(path.vertices);
  w.vertices.push_back(w.vertices.front());
  w.steps = std::move(path.steps);
  w.steps.push_back(closing);
  return w;
}

std::optional<CycleWitness> find_two_cycle(const MixedGraph& g) {
  for (Vertex r = 0; r < g.order(); ++r) {
    // Closing steps into r ordered by neighbor, edge before arc.
    auto edges = g.edge_neighbors(r);
    auto ins = g.in_neighbors(r);
    std::vector<Step> closings;
    for (Vertex u : edges) closings.push_back({u, StepKind::kEdge});
    for (Vertex u : ins) closings.push_back({u, StepKind::kArc});
    std::stable_sort(closings.begin(), closings.end(),
                     [](const Step& a, const Step& b) { return a.to < b.to; });
    for (const Step& c : closings) {
      const Vertex u = c.to;
      std::optional<StepKind> out;
      if (c.kind == StepKind::kEdge) {
        if (g.has_arc(r, u)) out = StepKind::kArc;
      } else if (g.has_edge(r, u)) {
        out = StepKind::kEdge;
      } else if (g.has_arc(r, u)) {
        out = StepKind::kArc;
      }
      if (out) return CycleWitness{{r, u, r}, {*out, c.kind}};
    }
  }
  return std::nullopt;
}

}  // namespace

std::string CycleWitness::to_string() const {
  if (vertices.empty()) return "";
  std::string out = std::to_string(vertices[0]);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    out += steps[i] == StepKind::kEdge ? " -- " : " -> ";
    out += std::to_string(vertices[i + 1]);
  }
  return out;
}

bool validate_cycle(const MixedGraph& g, const CycleWitness& w,
                    std::string* why) {
  auto fail = [&](std::string reason) {
    if (why) *why = std::move(reason);
    return false;
  };
  const std::size_t k = w.steps.size();
  if (k < 1) return fail("cycle has no steps");
  if (w.vertices.size() != k + 1) return fail("vertex and step counts disagree");
  if (w.vertices.front() != w.vertices.back()) return fail("cycle is not closed");
  std::set<Vertex> seen;
  for (std::size_t i = 0; i < k; ++i) {
    if (w.vertices[i] >= g.order()) return fail("vertex out of range");
    if (!seen.insert(w.vertices[i]).second) {
      return fail("vertex " + std::to_string(w.vertices[i]) + " repeats");
    }
  }
  std::set<std::tuple<int, Vertex, Vertex>> used;
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex a = w.vertices[i];
    const Vertex b = w.vertices[i + 1];
    if (w.steps[i] == StepKind::kEdge) {
      if (!g.has_edge(a, b)) return fail("step " + std::to_string(i) + " is not an edge");
      if (!used.emplace(0, std::min(a, b), std::max(a, b)).second) {
        return fail("edge reused at step " + std::to_string(i));
      }
    } else {
      if (!g.has_arc(a, b)) return fail("step " + std::to_string(i) + " is not an arc");
      if (!used.emplace(1, a, b).second) {
        return fail("arc reused at step " + std::to_string(i));
      }
    }
  }
  return true;
}

GirthResult girth(const MixedGraph& g) {
  if (auto two = find_two_cycle(g)) return GirthResult{2, std::move(two)};

  const auto steps = step_lists(g);
  GirthResult best;
  for (Vertex r = 0; r < g.order(); ++r) {
    std::vector<Step> closings;
    for (Vertex u : g.edge_neighbors(r)) closings.push_back({u, StepKind::kEdge});
    for (Vertex u : g.in_neighbors(r)) closings.push_back({u, StepKind::kArc});
    std::stable_sort(closings.begin(), closings.end(),
                     [](const Step& a, const Step& b) { return a.to < b.to; });
    for (const Step& c : closings) {
      // A strictly shorter cycle needs a path of at most best - 2 steps.
      std::size_t limit = g.order();
      if (best.girth) {
        if (*best.girth <= 3) return best;
        limit = *best.girth - 2;
      }
      auto path = shortest_path(steps, r, c.to,
                                /*skip_direct_edge=*/c.kind == StepKind::kEdge,
                                limit);
      if (!path) continue;
      const std::size_t len = path->steps.size() + 1;
      if (!best.girth || len < *best.girth) {
        best.girth = len;
        best.witness = close_path(std::move(*path), c.kind);
      }
    }
  }
  return best;
}

namespace {

class BruteForce {
 public:
  explicit BruteForce(const MixedGraph& g)
      : g_(g), steps_(step_lists(g)), on_path_(g.order(), false) {}

  std::optional<CycleWitness> find(std::size_t length) {
    length_ = length;
    for (Vertex v0 = 0; v0 < g_.order(); ++v0) {
      root_ = v0;
      vertices_ = {v0};
      kinds_.clear();
      on_path_[v0] = true;
      bool found = extend(v0);
      on_path_[v0] = false;
      if (found) return CycleWitness{vertices_, kinds_};
    }
    return std::nullopt;
  }

 private:
  using Key = std::tuple<int, Vertex, Vertex>;

  static Key key(Vertex a, Vertex b, StepKind kind) {
    if (kind == StepKind::kEdge) return {0, std::min(a, b), std::max(a, b)};
    return {1, a, b};
  }

  bool extend(Vertex x) {
    const std::size_t taken = kinds_.size();
    for (const Step& s : steps_[x]) {
      const Key k = key(x, s.to, s.kind);
      if (used_.count(k)) continue;
      if (s.to == root_) {
        if (taken + 1 != length_) continue;
        vertices_.push_back(s.to);
        kinds_.push_back(s.kind);
        return true;
      }
      if (on_path_[s.to] || taken + 1 >= length_) continue;
      used_.insert(k);
      on_path_[s.to] = true;
      vertices_.push_back(s.to);
      kinds_.push_back(s.kind);
      if (extend(s.to)) return true;
      vertices_.pop_back();
      kinds_.pop_back();
      on_path_[s.to] = false;
      used_.erase(k);
    }
    return false;
  }

  const MixedGraph& g_;
  std::vector<std::vector<Step>> steps_;
  std::vector<bool> on_path_;
  std::set<Key> used_;
  std::vector<Vertex> vertices_;
  std::vector<StepKind> kinds_;
  std::size_t length_ = 0;
  Vertex root_ = 0;
};

}  // namespace

GirthResult girth_bruteforce(const MixedGraph& g, std::size_t max_len) {
  BruteForce search(g);
  for (std::size_t len = 1; len <= max_len; ++len) {
    if (auto w = search.find(len)) return GirthResult{len, std::move(w)};
  }
  if (max_len >= g.order()) return GirthResult{};
  throw Error(ErrorCode::kCapExceeded,
              "no cycle of length <= " + std::to_string(max_len));
}

GirthCheck has_girth_at_least(const MixedGraph& g, std::size_t target) {
  GirthResult r = girth(g);
  if (r.is_infinite() || *r.girth >= target) return GirthCheck{};
  return GirthCheck{false, std::move(r.witness)};
}

MixedGraph with_incidence(const MixedGraph& g, const Incidence& added) {
  auto edges = g.edge_pairs();
  auto arcs = g.arc_pairs();
  if (added.kind == StepKind::kEdge) {
    edges.emplace_back(added.from, added.to);
  } else {
    arcs.emplace_back(added.from, added.to);
  }
  return MixedGraph(g.order(), edges, arcs);
}

GirthCheck has_girth_at_least_after_adding(const MixedGraph& g,
                                           const Incidence& added,
                                           std::size_t target) {
  const Vertex a = added.from;
  const Vertex b = added.to;
  if (a >= g.order() || b >= g.order()) {
    throw Error(ErrorCode::kOutOfRange, "incidence endpoint outside the graph");
  }
  if (a == b) throw Error(ErrorCode::kSelfLoop, "incidence is a loop");
  if (added.kind == StepKind::kEdge ? g.has_edge(a, b) : g.has_arc(a, b)) {
    throw Error(ErrorCode::kDuplicate, "incidence already present");
  }
  if (target <= 2) return GirthCheck{};  // loop-free graphs never go below 2
  const auto steps = step_lists(g);
  const std::size_t limit = target - 2;

  // Cycles through the new incidence: traverse it a -> b and return along a
  // path of g; an edge may also be traversed b -> a.
  std::optional<CycleWitness> best;
  auto consider = [&](Vertex from, Vertex to) {
    auto path = shortest_path(steps, to, from, false, limit);
    if (!path) return;
    if (best && path->steps.size() + 1 >= best->length()) return;
    CycleWitness w;
    w.vertices.push_back(from);
    w.steps.push_back(added.kind);
    w.vertices.insert(w.vertices.end(), path->vertices.begin(),
                      path->vertices.end());
    w.steps.insert(w.steps.end(), path->steps.begin(), path->steps.end());
    best = std::move(w);
  };
  consider(a, b);
  if (added.kind == StepKind::kEdge) consider(b, a);
  if (!best) return GirthCheck{};
  return GirthCheck{false, std::move(best)};
}

}  // namespace mixedcage
