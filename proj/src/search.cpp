#include "mixedcage/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "json.hpp"
#include "mixedcage/bounds.hpp"
#include "mixedcage/girth.hpp"

namespace mixedcage {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr std::uint32_t kMaxOrder = 64;

Mask bit(std::uint32_t v) { return Mask{1} << v; }

struct Layout {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> start;
  std::vector<std::uint32_t> length;
  std::vector<Vertex> succ;
  std::vector<Vertex> pred;
};

Layout layout_of(const Skeleton& skeleton) {
  Layout l;
  for (std::uint32_t len : skeleton) {
    l.start.push_back(l.n);
    l.length.push_back(len);
    l.n += len;
  }
  l.succ.resize(l.n);
  l.pred.resize(l.n);
  for (std::size_t c = 0; c < skeleton.size(); ++c) {
    for (std::uint32_t i = 0; i < l.length[c]; ++i) {
      const Vertex v = l.start[c] + i;
      const Vertex w = l.start[c] + (i + 1) % l.length[c];
      l.succ[v] = w;
      l.pred[w] = v;
    }
  }
  return l;
}

// Lexicographic-maximum test for an edge set under the skeleton group
// (rotate each cycle, permute cycles of equal length). Images are built one
// target cycle at a time; the pairs inside the first j target cycles form a
// prefix of the (larger endpoint, smaller endpoint) order, so each partial
// image can be compared with the original as soon as its block is placed.
class CanonicityTest {
 public:
  CanonicityTest(const Layout& layout, const std::vector<Mask>& adj)
      : l_(layout),
        adj_(adj),
        src_(layout.n, 0),
        dst_(layout.n, kUnset),
        used_(layout.length.size(), false) {}

  bool run() { return place(0); }

 private:
  static constexpr std::uint32_t kUnset = 0xffffffffu;

  bool place(std::size_t j) {
    if (j == l_.length.size()) return true;
    const std::uint32_t len = l_.length[j];
    const std::uint32_t base = l_.start[j];
    for (std::size_t c = 0; c < l_.length.size(); ++c) {
      if (used_[c] || l_.length[c] != len) continue;
      for (std::uint32_t t = 0; t < len; ++t) {
        for (std::uint32_t q = 0; q < len; ++q) {
          const Vertex from = l_.start[c] + (q + t) % len;
          src_[base + q] = from;
          dst_[from] = base + q;
        }
        const int cmp = compare_block(base, len);
        bool ok = true;
        if (cmp > 0) {
          ok = false;
        } else if (cmp == 0) {
          used_[c] = true;
          ok = place(j + 1);
          used_[c] = false;
        }
        for (std::uint32_t q = 0; q < len; ++q) dst_[l_.start[c] + q] = kUnset;
        if (!ok) return false;
      }
    }
    return true;
  }

  // +1 if the image beats the original on the pairs whose larger endpoint
  // lies in [base, base+len), -1 if it loses, 0 on a tie.
  int compare_block(std::uint32_t base, std::uint32_t len) const {
    for (std::uint32_t b = base; b < base + len; ++b) {
      const Mask below = bit(b) - 1;
      const Mask original = adj_[b] & below;
      Mask image = 0;
      for (Mask m = adj_[src_[b]]; m; m &= m - 1) {
        const std::uint32_t a = dst_[static_cast<std::uint32_t>(__builtin_ctzll(m))];
        if (a != kUnset && a < b) image |= bit(a);
      }
      if (image != original) {
        const Mask first = (image ^ original) & -(image ^ original);
        return (image & first) ? 1 : -1;
      }
    }
    return 0;
  }

  const Layout& l_;
  const std::vector<Mask>& adj_;
  std::vector<Vertex> src_;          // image vertex -> original vertex
  std::vector<std::uint32_t> dst_;   // original vertex -> image vertex
  std::vector<bool> used_;
};

struct RunControl {
  std::optional<std::uint64_t> node_limit;
  std::optional<Clock::time_point> deadline;
  std::function<bool()> cancelled;
};

struct SkeletonRun {
  bool found = false;
  bool stopped = false;           // interrupted before finishing
  bool stopped_by_nodes = false;  // ... because of the node limit
  std::string stop_path;
  SearchStats stats;
  std::vector<Witness> witnesses;
};

class SkeletonSearch {
 public:
  SkeletonSearch(const Skeleton& skeleton, const SearchSpec& spec)
      : skeleton_(skeleton),
        layout_(layout_of(skeleton)),
        n_(layout_.n),
        r_(spec.params.r),
        g_(spec.params.g),
        mode_(spec.mode),
        exact_(spec.exact_girth),
        adj_(n_, 0),
        excl_(n_, 0),
        deg_(n_, 0) {}

  SkeletonRun run(const RunControl& control, std::string_view resume_path) {
    control_ = &control;
    resume_ = std::string(resume_path);
    replaying_ = !resume_.empty();
    out_ = SkeletonRun{};
    path_.clear();
    visit(0);
    if (!out_.stopped) ++out_.stats.skeletons_finished;
    return std::move(out_);
  }

 private:
  // Vertices reachable from v in at most g-2 steps, forward (edges and arcs
  // forward) or backward (edges and arcs reversed).
  Mask ball(Vertex v, bool forward) const {
    Mask seen = bit(v);
    Mask frontier = seen;
    for (std::uint32_t d = 2; d < g_ && frontier; ++d) {
      Mask next = 0;
      for (Mask m = frontier; m; m &= m - 1) {
        const auto x = static_cast<Vertex>(__builtin_ctzll(m));
        next |= adj_[x] | bit(forward ? layout_.succ[x] : layout_.pred[x]);
      }
      frontier = next & ~seen;
      seen |= frontier;
    }
    return seen;
  }

  bool interrupted() {
    const auto nodes = out_.stats.nodes;
    if (control_->node_limit && nodes >= *control_->node_limit) {
      out_.stopped_by_nodes = true;
      return true;
    }
    if ((nodes & 4095) == 0) {
      if (control_->deadline && Clock::now() >= *control_->deadline) return true;
      if (control_->cancelled && control_->cancelled()) return true;
    }
    return false;
  }

  // Returns true when the whole search should unwind.
  bool visit(std::size_t depth) {
    if (replaying_ && depth == resume_.size()) replaying_ = false;
    if (!replaying_) {
      if (interrupted()) {
        out_.stopped = true;
        out_.stop_path = path_;
        return true;
      }
      ++out_.stats.nodes;
    }

    Mask open = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (deg_[v] < r_) open |= bit(v);
    }
    if (open == 0) {
      complete();
      return out_.found;
    }

    // Most constrained vertex: fewest spare girth-safe partners.
    Vertex best = 0;
    Mask best_candidates = 0;
    int best_slack = 1 << 30;
    for (Mask m = open; m; m &= m - 1) {
      const auto w = static_cast<Vertex>(__builtin_ctzll(m));
      const Mask blocked = ball(w, true) | ball(w, false) | excl_[w] | adj_[w] | bit(w);
      const Mask candidates = open & ~blocked;
      const int slack = __builtin_popcountll(candidates) - static_cast<int>(r_ - deg_[w]);
      if (slack < 0) {
        ++out_.stats.girth_prunes;
        return false;
      }
      if (slack < best_slack) {
        best_slack = slack;
        best = w;
        best_candidates = candidates;
      }
    }
    const Vertex w = best;
    const auto v = static_cast<Vertex>(__builtin_ctzll(best_candidates));

    if (!replaying_ || resume_[depth] == '0') {
      adj_[w] |= bit(v);
      adj_[v] |= bit(w);
      ++deg_[w];
      ++deg_[v];
      path_.push_back('0');
      const bool stop = visit(depth + 1);
      path_.pop_back();
      adj_[w] &= ~bit(v);
      adj_[v] &= ~bit(w);
      --deg_[w];
      --deg_[v];
      if (stop) return true;
    }
    excl_[w] |= bit(v);
    excl_[v] |= bit(w);
    path_.push_back('1');
    const bool stop = visit(depth + 1);
    path_.pop_back();
    excl_[w] &= ~bit(v);
    excl_[v] &= ~bit(w);
    return stop;
  }

  void complete() {
    ++out_.stats.completions;
    if (mode_ == SearchMode::kEnumerate && !CanonicityTest(layout_, adj_).run()) {
      ++out_.stats.canonicity_prunes;
      return;
    }
    std::vector<VertexPair> edges;
    for (Vertex a = 0; a < n_; ++a) {
      for (Mask m = adj_[a]; m; m &= m - 1) {
        const auto b = static_cast<Vertex>(__builtin_ctzll(m));
        if (b > a) edges.emplace_back(a, b);
      }
    }
    std::vector<VertexPair> arcs;
    for (Vertex a = 0; a < n_; ++a) arcs.emplace_back(a, layout_.succ[a]);
    MixedGraph graph(n_, edges, arcs);
    const GirthResult gr = girth(graph);
    const std::size_t value = gr.girth.value_or(0);
    if (exact_ && value != g_) {
      ++out_.stats.girth_exceeded;
      return;
    }
    out_.witnesses.push_back(Witness{std::move(graph), skeleton_, value});
    if (mode_ == SearchMode::kDecide) out_.found = true;
  }

  Skeleton skeleton_;
  Layout layout_;
  std::uint32_t n_;
  std::uint32_t r_;
  std::uint32_t g_;
  SearchMode mode_;
  bool exact_;
  std::vector<Mask> adj_;
  std::vector<Mask> excl_;
  std::vector<std::uint32_t> deg_;

  const RunControl* control_ = nullptr;
  std::string resume_;
  bool replaying_ = false;
  std::string path_;
  SkeletonRun out_;
};

void partitions(std::uint32_t remaining, std::uint32_t min_part, std::uint32_t max_part,
                Skeleton& prefix, std::vector<Skeleton>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::uint32_t p = std::min(remaining, max_part); p >= min_part; --p) {
    prefix.push_back(p);
    partitions(remaining - p, min_part, p, prefix, out);
    prefix.pop_back();
  }
}

void validate(const SearchSpec& spec) {
  const auto& p = spec.params;
  if (p.z != 1) {
    throw Error(ErrorCode::kInvalidArgument, "search supports out-degree z = 1 only");
  }
  if (p.r < 1 || p.g < 1) {
    throw Error(ErrorCode::kInvalidArgument, "search needs r >= 1 and g >= 1");
  }
  if (spec.n > kMaxOrder) {
    throw Error(ErrorCode::kInvalidArgument,
                "search supports n <= " + std::to_string(kMaxOrder));
  }
}

SearchCheckpoint make_checkpoint(const SearchSpec& spec, std::size_t index,
                                 std::string path, const SearchStats& stats,
                                 const std::vector<Witness>& witnesses) {
  SearchCheckpoint cp;
  cp.params = spec.params;
  cp.n = spec.n;
  cp.mode = spec.mode;
  cp.exact_girth = spec.exact_girth;
  cp.skeleton_index = index;
  cp.path = std::move(path);
  cp.stats = stats;
  cp.witnesses = witnesses;
  return cp;
}

}  // namespace

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  nodes += o.nodes;
  girth_prunes += o.girth_prunes;
  canonicity_prunes += o.canonicity_prunes;
  completions += o.completions;
  girth_exceeded += o.girth_exceeded;
  skeletons_finished += o.skeletons_finished;
  return *this;
}

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::kFound: return "Found";
    case SearchStatus::kExhaustedNone: return "ExhaustedNone";
    case SearchStatus::kBudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

std::string_view to_string(SearchMode mode) {
  return mode == SearchMode::kDecide ? "decide" : "enumerate";
}

std::vector<Skeleton> arc_skeletons(std::uint32_t n, std::uint32_t g) {
  std::vector<Skeleton> out;
  Skeleton prefix;
  if (n == 0) return out;
  partitions(n, std::max<std::uint32_t>(g, 2), n, prefix, out);
  return out;
}

MixedGraph skeleton_graph(const Skeleton& skeleton) {
  const Layout l = layout_of(skeleton);
  std::vector<VertexPair> arcs;
  for (Vertex v = 0; v < l.n; ++v) arcs.emplace_back(v, l.succ[v]);
  return MixedGraph(l.n, {}, arcs);
}

bool is_skeleton_canonical(const MixedGraph& g, const Skeleton& skeleton) {
  const Layout l = layout_of(skeleton);
  if (g.order() != l.n || l.n > kMaxOrder) {
    throw Error(ErrorCode::kInvalidArgument, "graph does not match the skeleton");
  }
  for (Vertex v = 0; v < l.n; ++v) {
    auto out = g.out_neighbors(v);
    if (out.size() != 1 || out[0] != l.succ[v]) {
      throw Error(ErrorCode::kInvalidArgument, "arcs do not match the skeleton");
    }
  }
  std::vector<Mask> adj(l.n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= bit(e.v);
    adj[e.v] |= bit(e.u);
  }
  return CanonicityTest(l, adj).run();
}

SearchOutcome search_order(const SearchSpec& spec, const SearchCheckpoint* resume) {
  validate(spec);
  if (resume && (resume->params != spec.params || resume->n != spec.n ||
                 resume->mode != spec.mode || resume->exact_girth != spec.exact_girth)) {
    throw Error(ErrorCode::kInvalidArgument, "checkpoint belongs to a different search");
  }

  SearchOutcome outcome;
  std::size_t first = 0;
  std::string first_path;
  if (resume) {
    first = resume->skeleton_index;
    first_path = resume->path;
    outcome.stats = resume->stats;
    outcome.witnesses = resume->witnesses;
  }

  const auto& p = spec.params;
  // Edge-degree sum n*r must be even.
  std::vector<Skeleton> skeletons;
  if ((static_cast<std::uint64_t>(spec.n) * p.r) % 2 == 0) {
    skeletons = arc_skeletons(spec.n, p.g);
  }
  if (first > skeletons.size()) {
    throw Error(ErrorCode::kInvalidArgument, "checkpoint skeleton index out of range");
  }

  std::optional<Clock::time_point> deadline;
  if (spec.limits.max_seconds) {
    deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(*spec.limits.max_seconds));
  }
  const auto budget = spec.limits.max_nodes;
  const bool decide = spec.mode == SearchMode::kDecide;
  const std::size_t count = skeletons.size();

  auto run_one = [&](std::size_t k, std::optional<std::uint64_t> limit,
                     std::function<bool()> cancelled, bool use_deadline) {
    RunControl control{limit, use_deadline ? deadline : std::nullopt, std::move(cancelled)};
    return SkeletonSearch(skeletons[k], spec).run(control, k == first ? first_path : "");
  };

  // Parallel runs explore skeletons speculatively; merging below walks them in
  // order so the outcome matches a sequential run.
  std::vector<std::optional<SkeletonRun>> runs(count);
  const unsigned threads = std::max(1u, spec.threads);
  if (threads > 1 && count - first > 1) {
    std::atomic<std::size_t> next{first};
    std::atomic<std::size_t> found_at{count};
    auto worker = [&] {
      while (true) {
        const std::size_t k = next.fetch_add(1);
        if (k >= count) return;
        if (decide && k > found_at.load()) continue;
        auto cancelled = [&found_at, k, decide] { return decide && found_at.load() < k; };
        SkeletonRun run = run_one(k, budget, cancelled, true);
        if (run.found) {
          std::size_t cur = found_at.load();
          while (k < cur && !found_at.compare_exchange_weak(cur, k)) {
          }
        }
        runs[k] = std::move(run);
      }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::uint64_t used = 0;
  for (std::size_t k = first; k < count; ++k) {
    const std::optional<std::uint64_t> remaining =
        budget ? std::optional<std::uint64_t>(*budget - used) : std::nullopt;
    SkeletonRun run;
    if (runs[k] && !(runs[k]->stopped && !runs[k]->stopped_by_nodes && !deadline)) {
      run = std::move(*runs[k]);
      // A speculative run that overshoots the remaining budget is redone with
      // the exact limit so the checkpoint lands where a sequential run stops.
      if (remaining && (run.stopped_by_nodes || run.stats.nodes > *remaining)) {
        run = run_one(k, remaining, {}, false);
      }
    } else {
      run = run_one(k, remaining, {}, true);
    }
    used += run.stats.nodes;
    outcome.stats += run.stats;
    for (auto& w : run.witnesses) outcome.witnesses.push_back(std::move(w));
    if (run.stopped) {
      outcome.status = SearchStatus::kBudgetExceeded;
      outcome.checkpoint =
          make_checkpoint(spec, k, run.stop_path, outcome.stats, outcome.witnesses);
      return outcome;
    }
    if (decide && run.found) {
      outcome.status = SearchStatus::kFound;
      return outcome;
    }
  }
  outcome.status = outcome.witnesses.empty() ? SearchStatus::kExhaustedNone
                                             : SearchStatus::kFound;
  return outcome;
}

CageNumber determine_cage_number(const CageParams& params, std::uint32_t n_max,
                                 const SearchLimits& limits_per_order, unsigned threads) {
  if (params.z != 1) {
    throw Error(ErrorCode::kInvalidArgument, "cage search supports z = 1 only");
  }
  CageNumber result;
  result.params = params;
  result.lower_bound = ahm_bound(params.r, params.g);
  for (std::uint64_t n = result.lower_bound; n <= n_max; ++n) {
    SearchSpec spec;
    spec.params = params;
    spec.n = static_cast<std::uint32_t>(n);
    spec.mode = SearchMode::kDecide;
    spec.limits = limits_per_order;
    spec.threads = threads;
    SearchOutcome outcome = search_order(spec);
    result.attempts.push_back(OrderAttempt{spec.n, outcome.status, outcome.stats});
    if (outcome.status == SearchStatus::kBudgetExceeded) {
      throw Inconclusive("budget exhausted at order " + std::to_string(n),
                         std::move(result.attempts));
    }
    if (outcome.status == SearchStatus::kFound) {
      result.value = spec.n;
      result.provenance = n == result.lower_bound ? CageProvenance::kBoundMatched
                                                  : CageProvenance::kSearchDetermined;
      result.witness = std::move(outcome.witnesses.front());
      return result;
    }
  }
  throw Inconclusive("no graph found up to order " + std::to_string(n_max) +
                         " (lower bound " + std::to_string(result.lower_bound) + ")",
                     std::move(result.attempts));
}

// Checkpoint serialization.

namespace {

using json = nlohmann::ordered_json;

json stats_json(const SearchStats& s) {
  return {{"nodes", s.nodes},
          {"girth_prunes", s.girth_prunes},
          {"canonicity_prunes", s.canonicity_prunes},
          {"completions", s.completions},
          {"girth_exceeded", s.girth_exceeded},
          {"skeletons_finished", s.skeletons_finished}};
}

SearchStats stats_from(const json& j) {
  SearchStats s;
  s.nodes = j.at("nodes").get<std::uint64_t>();
  s.girth_prunes = j.at("girth_prunes").get<std::uint64_t>();
  s.canonicity_prunes = j.at("canonicity_prunes").get<std::uint64_t>();
  s.completions = j.at("completions").get<std::uint64_t>();
  s.girth_exceeded = j.at("girth_exceeded").get<std::uint64_t>();
  s.skeletons_finished = j.at("skeletons_finished").get<std::uint64_t>();
  return s;
}

}  // namespace

std::string SearchCheckpoint::to_json() const {
  json witnesses_json = json::array();
  for (const auto& w : witnesses) {
    witnesses_json.push_back({{"order", w.graph.order()},
                              {"edges", w.graph.edge_pairs()},
                              {"arcs", w.graph.arc_pairs()},
                              {"skeleton", w.skeleton},
                              {"girth", w.girth}});
  }
  json j = {{"format", "mixedcage-search-checkpoint"},
            {"version", kVersion},
            {"params", {{"r", params.r}, {"z", params.z}, {"g", params.g}}},
            {"n", n},
            {"mode", std::string(mixedcage::to_string(mode))},
            {"exact_girth", exact_girth},
            {"frontier", {{"skeleton_index", skeleton_index}, {"path", path}}},
            {"stats", stats_json(stats)},
            {"witnesses", witnesses_json}};
  return j.dump(2) + "\n";
}

SearchCheckpoint SearchCheckpoint::from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (j.at("format") != "mixedcage-search-checkpoint") {
      throw Error(ErrorCode::kBadCheckpoint, "not a search checkpoint");
    }
    if (j.at("version").get<int>() != kVersion) {
      throw Error(ErrorCode::kBadCheckpoint,
                  "unsupported checkpoint version " + j.at("version").dump());
    }
    SearchCheckpoint cp;
    cp.params.r = j.at("params").at("r").get<std::uint32_t>();
    cp.params.z = j.at("params").at("z").get<std::uint32_t>();
    cp.params.g = j.at("params").at("g").get<std::uint32_t>();
    cp.n = j.at("n").get<std::uint32_t>();
    const auto mode = j.at("mode").get<std::string>();
    if (mode != "decide" && mode != "enumerate") {
      throw Error(ErrorCode::kBadCheckpoint, "unknown mode " + mode);
    }
    cp.mode = mode == "decide" ? SearchMode::kDecide : SearchMode::kEnumerate;
    cp.exact_girth = j.at("exact_girth").get<bool>();
    cp.skeleton_index = j.at("frontier").at("skeleton_index").get<std::size_t>();
    cp.path = j.at("frontier").at("path").get<std::string>();
    if (cp.path.find_first_not_of("01") != std::string::npos) {
      throw Error(ErrorCode::kBadCheckpoint, "frontier path must be 0/1 characters");
    }
    cp.stats = stats_from(j.at("stats"));
    for (const auto& w : j.at("witnesses")) {
      auto edges = w.at("edges").get<std::vector<VertexPair>>();
      auto arcs = w.at("arcs").get<std::vector<VertexPair>>();
      cp.witnesses.push_back(Witness{MixedGraph(w.at("order").get<std::size_t>(), edges, arcs),
                                     w.at("skeleton").get<Skeleton>(),
                                     w.at("girth").get<std::size_t>()});
    }
    return cp;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kBadCheckpoint, e.what());
  }
}

}  // namespace mixedcage
