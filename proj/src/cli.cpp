#include "mixedcage/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mixedcage/bounds.hpp"
#include "mixedcage/constructions.hpp"
#include "mixedcage/girth.hpp"
#include "mixedcage/graph.hpp"
#include "mixedcage/isomorphism.hpp"
#include "mixedcage/search.hpp"

namespace mixedcage::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_text(const std::string& path, Io& io) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(io.in), {});
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputFailure("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  if (f.bad()) throw InputFailure("cannot read " + path);
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text) || !f.flush()) throw InputFailure("cannot write " + path);
}

// Header lines are skipped only when not strict, and always reported on
// stderr so they never go unnoticed.
MatrixReadResult load_graph(const std::string& path, bool strict, Io& io) {
  const std::string text = read_text(path, io);
  MatrixReadResult res = read_adjacency_matrix(text, MatrixReadOptions{!strict});
  for (const auto& line : res.skipped_header_lines) {
    io.err << "note: " << (path == "-" ? "<stdin>" : path)
           << ": skipped header line: " << line << "\n";
  }
  return res;
}

json graph_json(const MixedGraph& g) {
  return {{"order", g.order()}, {"edges", g.edge_pairs()}, {"arcs", g.arc_pairs()}};
}

json cycle_json(const CycleWitness& w) {
  json steps = json::array();
  for (StepKind k : w.steps) steps.push_back(k == StepKind::kEdge ? "edge" : "arc");
  return {{"length", w.length()},
          {"vertices", w.vertices},
          {"steps", steps},
          {"text", w.to_string()}};
}

json stats_json(const SearchStats& s) {
  return {{"nodes", s.nodes},
          {"girth_prunes", s.girth_prunes},
          {"canonicity_prunes", s.canonicity_prunes},
          {"completions", s.completions},
          {"girth_exceeded", s.girth_exceeded},
          {"skeletons_finished", s.skeletons_finished}};
}

json witness_json(const Witness& w) {
  return {{"skeleton", w.skeleton}, {"girth", w.girth}, {"graph", graph_json(w.graph)}};
}

std::string girth_text(const GirthResult& r) {
  return r.is_infinite() ? "infinite" : std::to_string(*r.girth);
}

std::string join(const std::vector<std::uint32_t>& xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

void print_graph(std::ostream& out, const MixedGraph& g) {
  if (is_matrix_representable(g)) {
    out << write_adjacency_matrix(g);
    return;
  }
  out << "edges:";
  for (const auto& [u, v] : g.edge_pairs()) out << " " << u << "--" << v;
  out << "\narcs:";
  for (const auto& [u, v] : g.arc_pairs()) out << " " << u << "->" << v;
  out << "\n";
}

void emit(Io& io, bool as_json, const json& report, const std::string& human) {
  if (as_json) {
    io.out << report.dump(2) << "\n";
  } else {
    io.out << human;
  }
}

// bounds ------------------------------------------------------------------

int cmd_bounds(std::uint64_t r, std::uint64_t g, bool as_json, Io& io) {
  std::ostringstream h;
  json table = json::array();
  h << "moore_bound(" << r << ", d)\n";
  for (std::uint64_t d = 0; d <= g; ++d) {
    const auto value = moore_bound(r, d);
    table.push_back({{"d", d}, {"value", value}});
    h << "  d=" << d << "  " << value << "\n";
  }
  const auto profile = ahm_depth_profile(g);
  const auto bound = ahm_bound(r, g);
  h << "depth profile:";
  for (auto p : profile) h << " " << p;
  h << "\nahm_bound(" << r << "," << g << ") = " << bound << "\n";
  json report = {{"command", "bounds"},  {"r", r},
                 {"g", g},               {"moore", table},
                 {"depth_profile", profile}, {"ahm_bound", bound}};
  emit(io, as_json, report, h.str());
  return kPass;
}

// build -------------------------------------------------------------------

std::string render(const MixedGraph& g, const std::string& format, const std::string& name) {
  return format == "dot" ? export_dot(g, name) : write_adjacency_matrix(g);
}

int cmd_build(const std::string& format, bool as_json, Io& io) {
  const G30Derivation d = derive_g30();
  const MixedGraph g = build_g30();
  const GateReport gate = run_g30_gate(g);
  const std::string text = render(g, format, "G30");
  json families = json::array();
  for (const auto& f : d.completed.families) families.push_back(f.to_string());
  json report = {{"command", "build"},
                 {"name", "g30"},
                 {"families", families},
                 {"listed_rules_gate", d.listed_gate.summary()},
                 {"gate", gate.summary()},
                 {"graph", graph_json(g)},
                 {"format", format},
                 {"text", text}};
  emit(io, as_json, report, text);
  return kPass;
}

// verify ------------------------------------------------------------------

int cmd_verify(std::size_t r, std::size_t z, std::size_t target, const std::string& path,
               bool strict, bool as_json, Io& io) {
  const MatrixReadResult in = load_graph(path, strict, io);
  const MixedGraph& g = in.graph;
  const DegreeProfile prof = degree_profile(g);
  const GirthResult gr = girth(g);

  std::vector<std::string> reasons;
  json degree_violation = nullptr;
  for (Vertex v = 0; v < g.order() && degree_violation.is_null(); ++v) {
    const std::pair<const char*, std::size_t> checks[] = {
        {"edge-degree", prof.deg[v]}, {"out-degree", prof.outdeg[v]}, {"in-degree", prof.indeg[v]}};
    for (auto [kind, value] : checks) {
      const std::size_t want = std::string_view(kind) == "edge-degree" ? r : z;
      if (value != want) {
        degree_violation = {{"vertex", v}, {"kind", kind}, {"value", value}, {"expected", want}};
        reasons.push_back(std::string(kind) + " of vertex " + std::to_string(v) + " is " +
                          std::to_string(value) + ", expected " + std::to_string(want));
        break;
      }
    }
  }
  if (g.order() == 0) reasons.push_back("empty graph");
  if (gr.is_infinite()) {
    reasons.push_back("graph is acyclic, expected girth " + std::to_string(target));
  } else if (*gr.girth != target) {
    reasons.push_back("girth " + std::to_string(*gr.girth) + " differs from " +
                      std::to_string(target) + ": " + gr.witness->to_string());
  }
  const bool pass = reasons.empty();

  std::ostringstream h;
  h << "order " << g.order() << "\n";
  h << "regular (r=" << r << ", z=" << z << "): " << (degree_violation.is_null() ? "yes" : "no")
    << "\n";
  h << "girth " << girth_text(gr);
  if (gr.witness) h << ", cycle " << gr.witness->to_string();
  h << "\n";
  for (const auto& why : reasons) h << "  " << why << "\n";
  h << (pass ? "PASS" : "FAIL") << "\n";

  json report = {{"command", "verify"},
                 {"file", path},
                 {"expected", {{"r", r}, {"z", z}, {"g", target}}},
                 {"order", g.order()},
                 {"skipped_header_lines", in.skipped_header_lines},
                 {"regular", degree_violation.is_null()},
                 {"degree_violation", degree_violation},
                 {"girth", gr.girth ? json(*gr.girth) : json(nullptr)},
                 {"witness", gr.witness ? cycle_json(*gr.witness) : json(nullptr)},
                 {"verdict", pass ? "PASS" : "FAIL"},
                 {"reasons", reasons}};
  emit(io, as_json, report, h.str());
  return pass ? kPass : kFail;
}

// girth -------------------------------------------------------------------

int cmd_girth(const std::string& path, bool strict, bool as_json, Io& io) {
  const MixedGraph g = load_graph(path, strict, io).graph;
  const GirthResult gr = girth(g);
  std::ostringstream h;
  h << "girth " << girth_text(gr) << "\n";
  if (gr.witness) h << "cycle " << gr.witness->to_string() << "\n";
  json report = {{"command", "girth"},
                 {"order", g.order()},
                 {"girth", gr.girth ? json(*gr.girth) : json(nullptr)},
                 {"witness", gr.witness ? cycle_json(*gr.witness) : json(nullptr)}};
  emit(io, as_json, report, h.str());
  return kPass;
}

// aut ---------------------------------------------------------------------

int cmd_aut(const std::string& path, std::size_t cap, bool strict, bool as_json, Io& io) {
  const MixedGraph g = load_graph(path, strict, io).graph;
  const AutGroup group = automorphism_group(g);
  std::optional<GroupFingerprint> fp;
  if (auto order = group.order(); order && *order <= cap) fp = group_fingerprint(group, cap);

  std::ostringstream h;
  h << "order " << group.order_string() << "\n";
  h << "generators " << group.generators.size() << "\n";
  json gens = json::array();
  for (const auto& p : group.generators) {
    gens.push_back(p.cycle_notation());
    h << "  " << p.cycle_notation() << "\n";
  }
  json fp_json = nullptr;
  if (fp) {
    json orders = json::object();
    for (auto [o, c] : fp->element_orders) orders[std::to_string(o)] = c;
    fp_json = {{"abelian", fp->abelian},
               {"max_element_order", fp->max_element_order},
               {"element_orders", orders},
               {"structure", fp->structure}};
    h << "abelian " << (fp->abelian ? "yes" : "no") << "\n";
    h << "max element order " << fp->max_element_order << "\n";
    h << "structure " << fp->structure << "\n";
  } else {
    h << "fingerprint skipped (order above " << cap << ")\n";
  }
  json report = {{"command", "aut"},
                 {"graph_order", g.order()},
                 {"group_order", group.order_string()},
                 {"generators", gens},
                 {"orbit_lengths", group.orbit_lengths},
                 {"fingerprint", fp_json}};
  emit(io, as_json, report, h.str());
  return kPass;
}

// iso ---------------------------------------------------------------------

int cmd_iso(const std::string& a, const std::string& b, bool strict, bool as_json, Io& io) {
  if (a == "-" && b == "-") throw UsageFailure("at most one FILE may be '-'");
  const MixedGraph g = load_graph(a, strict, io).graph;
  const MixedGraph h = load_graph(b, strict, io).graph;
  const IsomorphismResult res = is_isomorphic(g, h);
  std::ostringstream text;
  text << (res.isomorphic ? "isomorphic" : "not isomorphic") << "\n";
  if (res.witness) text << "map " << res.witness->cycle_notation() << "\n";
  json report = {{"command", "iso"},
                 {"isomorphic", res.isomorphic},
                 {"witness", res.witness ? json(res.witness->image()) : json(nullptr)},
                 {"witness_cycles",
                  res.witness ? json(res.witness->cycle_notation()) : json(nullptr)}};
  emit(io, as_json, report, text.str());
  return res.isomorphic ? kPass : kFail;
}

// search ------------------------------------------------------------------

struct SearchArgs {
  std::uint32_t r = 0;
  std::uint32_t z = 1;
  std::uint32_t g = 0;
  std::optional<std::uint32_t> n;
  bool automatic = false;
  std::optional<std::uint32_t> n_max;
  bool enumerate = false;
  bool any_girth = false;
  std::optional<std::uint64_t> budget_nodes;
  std::optional<double> budget_secs;
  std::string checkpoint;
  std::string resume;
  unsigned threads = 1;
  bool as_json = false;
};

int cmd_search_auto(const SearchArgs& a, Io& io) {
  const CageParams params{a.r, a.z, a.g};
  const std::uint32_t n_max = *a.n_max;
  const SearchLimits limits{a.budget_nodes, a.budget_secs};
  auto attempts_json = [](const std::vector<OrderAttempt>& attempts) {
    json out = json::array();
    for (const auto& t : attempts) {
      out.push_back({{"n", t.n},
                     {"status", std::string(to_string(t.status))},
                     {"stats", stats_json(t.stats)}});
    }
    return out;
  };
  auto attempts_text = [](std::ostream& h, const std::vector<OrderAttempt>& attempts) {
    for (const auto& t : attempts) {
      h << "  n=" << t.n << "  " << to_string(t.status) << "  nodes " << t.stats.nodes << "\n";
    }
  };
  json base = {{"command", "search"},
               {"auto", true},
               {"params", {{"r", a.r}, {"z", a.z}, {"g", a.g}}},
               {"n_max", n_max}};
  try {
    const CageNumber c = determine_cage_number(params, n_max, limits, a.threads);
    std::ostringstream h;
    h << "f(" << a.r << "," << a.z << "," << a.g << ") = " << c.value << "\n";
    h << "lower bound " << c.lower_bound << ", "
      << (c.provenance == CageProvenance::kBoundMatched ? "bound matched" : "search determined")
      << "\n";
    attempts_text(h, c.attempts);
    h << "witness (skeleton " << join(c.witness.skeleton) << ", girth " << c.witness.girth
      << ")\n";
    print_graph(h, c.witness.graph);
    json report = base;
    report["status"] = "Determined";
    report["value"] = c.value;
    report["lower_bound"] = c.lower_bound;
    report["provenance"] =
        c.provenance == CageProvenance::kBoundMatched ? "bound_matched" : "search_determined";
    report["attempts"] = attempts_json(c.attempts);
    report["witness"] = witness_json(c.witness);
    emit(io, a.as_json, report, h.str());
    return kPass;
  } catch (const Inconclusive& e) {
    std::ostringstream h;
    h << "inconclusive: " << e.what() << "\n";
    attempts_text(h, e.attempts());
    json report = base;
    report["status"] = "Inconclusive";
    report["message"] = e.what();
    report["attempts"] = attempts_json(e.attempts());
    emit(io, a.as_json, report, h.str());
    const bool budget = !e.attempts().empty() &&
                        e.attempts().back().status == SearchStatus::kBudgetExceeded;
    return budget ? kBudgetExceeded : kFail;
  }
}

int cmd_search(const SearchArgs& a, Io& io) {
  if (a.automatic == a.n.has_value()) throw UsageFailure("give exactly one of --n or --auto");
  if (a.automatic) {
    if (!a.n_max) throw UsageFailure("--auto needs --n-max");
    if (a.enumerate || !a.checkpoint.empty() || !a.resume.empty() || a.any_girth) {
      throw UsageFailure("--auto does not combine with --enumerate, --any-girth, "
                         "--checkpoint or --resume");
    }
    return cmd_search_auto(a, io);
  }
  if (a.n_max) throw UsageFailure("--n-max needs --auto");

  SearchSpec spec;
  spec.params = {a.r, a.z, a.g};
  spec.n = *a.n;
  spec.mode = a.enumerate ? SearchMode::kEnumerate : SearchMode::kDecide;
  spec.limits = {a.budget_nodes, a.budget_secs};
  spec.exact_girth = !a.any_girth;
  spec.threads = a.threads;

  std::optional<SearchCheckpoint> resume;
  if (!a.resume.empty()) resume = SearchCheckpoint::from_json(read_text(a.resume, io));
  const SearchOutcome o = search_order(spec, resume ? &*resume : nullptr);
  if (o.checkpoint && !a.checkpoint.empty()) write_text(a.checkpoint, o.checkpoint->to_json());

  // Both reasons an order can be hopeless, reported independently.
  std::vector<std::string> notes;
  if (static_cast<std::uint64_t>(spec.n) * a.r % 2 != 0) {
    notes.push_back("n*r is odd: no r-regular edge set exists on n vertices");
  }
  if (const auto bound = ahm_bound(a.r, a.g); spec.n < bound) {
    notes.push_back("n is below ahm_bound(" + std::to_string(a.r) + "," + std::to_string(a.g) +
                    ") = " + std::to_string(bound));
  }

  std::ostringstream h;
  h << "search (" << a.r << "," << a.z << "," << a.g << ") n=" << spec.n << " "
    << to_string(spec.mode) << "\n";
  for (const auto& note : notes) h << "note: " << note << "\n";
  h << "status " << to_string(o.status) << "\n";
  h << "nodes " << o.stats.nodes << ", girth prunes " << o.stats.girth_prunes
    << ", canonicity prunes " << o.stats.canonicity_prunes << ", completions "
    << o.stats.completions << ", girth exceeded " << o.stats.girth_exceeded
    << ", skeletons finished " << o.stats.skeletons_finished << "\n";
  if (o.checkpoint) {
    h << "stopped at skeleton " << o.checkpoint->skeleton_index << ", path '"
      << o.checkpoint->path << "'\n";
    h << (a.checkpoint.empty() ? "checkpoint not saved (no --checkpoint)"
                               : "checkpoint written to " + a.checkpoint)
      << "\n";
  }
  json witnesses = json::array();
  for (std::size_t i = 0; i < o.witnesses.size(); ++i) {
    const Witness& w = o.witnesses[i];
    witnesses.push_back(witness_json(w));
    h << "witness " << i + 1 << " (skeleton " << join(w.skeleton) << ", girth " << w.girth
      << ")\n";
    print_graph(h, w.graph);
  }
  json frontier = nullptr;
  if (o.checkpoint) {
    frontier = {{"skeleton_index", o.checkpoint->skeleton_index},
                {"path", o.checkpoint->path}};
  }
  json report = {{"command", "search"},
                 {"auto", false},
                 {"params", {{"r", a.r}, {"z", a.z}, {"g", a.g}}},
                 {"n", spec.n},
                 {"mode", std::string(to_string(spec.mode))},
                 {"exact_girth", spec.exact_girth},
                 {"notes", notes},
                 {"status", std::string(to_string(o.status))},
                 {"stats", stats_json(o.stats)},
                 {"witnesses", witnesses},
                 {"frontier", frontier},
                 {"checkpoint_file",
                  o.checkpoint && !a.checkpoint.empty() ? json(a.checkpoint) : json(nullptr)}};
  emit(io, a.as_json, report, h.str());
  switch (o.status) {
    case SearchStatus::kFound: return kPass;
    case SearchStatus::kExhaustedNone: return kFail;
    case SearchStatus::kBudgetExceeded: return kBudgetExceeded;
  }
  return kInternal;
}

// ingest / export -----------------------------------------------------------

int cmd_ingest(const std::string& path, bool strict, bool as_json, Io& io) {
  const MatrixReadResult in = load_graph(path, strict, io);
  const MixedGraph& g = in.graph;
  const DegreeProfile p = degree_profile(g);
  auto range = [](const std::vector<std::size_t>& xs) -> json {
    if (xs.empty()) return nullptr;
    auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
    return {{"min", *lo}, {"max", *hi}};
  };
  std::ostringstream h;
  h << "order " << g.order() << "\n";
  h << "edges " << g.edges().size() << ", arcs " << g.arcs().size() << "\n";
  if (p.regular) {
    h << "regular r=" << p.regular->r << " z=" << p.regular->z << "\n";
  } else {
    h << "not regular\n";
  }
  if (!in.skipped_header_lines.empty()) {
    h << "skipped header lines " << in.skipped_header_lines.size() << "\n";
  }
  json regular = nullptr;
  if (p.regular) regular = {{"r", p.regular->r}, {"z", p.regular->z}};
  json report = {{"command", "ingest"},
                 {"file", path},
                 {"order", g.order()},
                 {"edge_count", g.edges().size()},
                 {"arc_count", g.arcs().size()},
                 {"skipped_header_lines", in.skipped_header_lines},
                 {"regular", regular},
                 {"edge_degree", range(p.deg)},
                 {"out_degree", range(p.outdeg)},
                 {"in_degree", range(p.indeg)},
                 {"graph", graph_json(g)}};
  emit(io, as_json, report, h.str());
  return kPass;
}

int cmd_export(const std::string& path, const std::string& format, const std::string& name,
               bool strict, bool as_json, Io& io) {
  const MixedGraph g = load_graph(path, strict, io).graph;
  const std::string text = render(g, format, name);
  json report = {{"command", "export"}, {"format", format}, {"text", text}};
  emit(io, as_json, report, text);
  return kPass;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kOverflow:
    case ErrorCode::kCapExceeded:
      return kUsage;
    case ErrorCode::kOutOfRange:
    case ErrorCode::kSelfLoop:
    case ErrorCode::kDuplicate:
    case ErrorCode::kNonSquare:
    case ErrorCode::kBadToken:
    case ErrorCode::kNonzeroDiagonal:
    case ErrorCode::kBadCheckpoint:
      return kInput;
    case ErrorCode::kVerificationFailed:
      return kFail;
    case ErrorCode::kInconclusive:
      return kBudgetExceeded;
    default:
      return kInternal;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"Mixed cage toolkit: bounds, constructions, girth, automorphisms, search",
               "mixedcage"};
  app.require_subcommand(1);

  bool as_json = false;
  bool strict = false;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", as_json, "Emit a JSON report on stdout");
  };
  auto add_reader = [&](CLI::App* cmd) {
    add_common(cmd);
    cmd->add_flag("--strict", strict, "Reject header lines instead of skipping them");
  };

  std::uint64_t b_r = 0, b_g = 0;
  auto* bounds = app.add_subcommand("bounds", "Moore bound table and AHM bound");
  bounds->add_option("--r", b_r, "Edge-degree")->required()->check(CLI::PositiveNumber);
  bounds->add_option("--g", b_g, "Girth")->required()->check(CLI::PositiveNumber);
  add_common(bounds);

  std::string build_name, format = "matrix";
  auto* build = app.add_subcommand("build", "Emit a verified construction");
  build->add_option("name", build_name, "Construction name")
      ->required()
      ->check(CLI::IsMember({"g30"}));
  build->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"matrix", "dot"}));
  add_common(build);

  std::size_t v_r = 0, v_z = 0, v_g = 0;
  std::string file, file2;
  auto* verify = app.add_subcommand("verify", "Check regularity and girth of a matrix");
  verify->add_option("--r", v_r, "Edge-degree")->required();
  verify->add_option("--z", v_z, "Out- and in-degree")->required();
  verify->add_option("--g", v_g, "Girth")->required()->check(CLI::PositiveNumber);
  verify->add_option("FILE", file, "Adjacency matrix, - for stdin")->required();
  add_reader(verify);

  auto* girth_cmd = app.add_subcommand("girth", "Girth and a shortest cycle");
  girth_cmd->add_option("FILE", file, "Adjacency matrix, - for stdin")->required();
  add_reader(girth_cmd);

  std::size_t cap = 1000;
  auto* aut = app.add_subcommand("aut", "Automorphism group");
  aut->add_option("FILE", file, "Adjacency matrix, - for stdin")->required();
  aut->add_option("--cap", cap, "Largest group order to fingerprint");
  add_reader(aut);

  auto* iso = app.add_subcommand("iso", "Isomorphism test");
  iso->add_option("FILE1", file, "First matrix, - for stdin")->required();
  iso->add_option("FILE2", file2, "Second matrix, - for stdin")->required();
  add_reader(iso);

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Exhaustive search for (r,1,g)-graphs");
  search->add_option("--r", sa.r, "Edge-degree")->required()->check(CLI::PositiveNumber);
  search->add_option("--z", sa.z, "Out-degree (only 1 is supported)")
      ->check(CLI::Range(1u, 1u));
  search->add_option("--g", sa.g, "Girth")->required()->check(CLI::PositiveNumber);
  auto* n_opt = search->add_option("--n", sa.n, "Order to search");
  auto* auto_opt = search->add_flag("--auto", sa.automatic,
                                    "Search orders from the AHM bound upwards");
  n_opt->excludes(auto_opt);
  search->add_option("--n-max", sa.n_max, "Largest order tried by --auto");
  search->add_flag("--enumerate", sa.enumerate, "List every isomorphism class");
  search->add_flag("--any-girth", sa.any_girth, "Accept girth above g as well");
  search->add_option("--budget-nodes", sa.budget_nodes, "Node budget for this run");
  search->add_option("--budget-secs", sa.budget_secs, "Time budget in seconds")
      ->check(CLI::PositiveNumber);
  search->add_option("--checkpoint", sa.checkpoint, "Write a checkpoint here on budget stop");
  search->add_option("--resume", sa.resume, "Continue from a checkpoint");
  search->add_option("--threads", sa.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  add_common(search);

  std::string name = "G";
  std::string export_format = "dot";
  auto* ingest = app.add_subcommand("ingest", "Parse a matrix and summarize it");
  ingest->add_option("FILE", file, "Adjacency matrix, - for stdin")->required();
  add_reader(ingest);

  auto* exp = app.add_subcommand("export", "Convert a matrix to DOT or normalized matrix");
  exp->add_option("FILE", file, "Adjacency matrix, - for stdin")->required();
  exp->add_option("--format", export_format, "Output format")
      ->check(CLI::IsMember({"matrix", "dot"}));
  exp->add_option("--name", name, "DOT graph name");
  add_reader(exp);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*bounds) return cmd_bounds(b_r, b_g, as_json, io);
    if (*build) return cmd_build(format, as_json, io);
    if (*verify) return cmd_verify(v_r, v_z, v_g, file, strict, as_json, io);
    if (*girth_cmd) return cmd_girth(file, strict, as_json, io);
    if (*aut) return cmd_aut(file, cap, strict, as_json, io);
    if (*iso) return cmd_iso(file, file2, strict, as_json, io);
    if (*search) {
      sa.as_json = as_json;
      return cmd_search(sa, io);
    }
    if (*ingest) return cmd_ingest(file, strict, as_json, io);
    if (*exp) return cmd_export(file, export_format, name, strict, as_json, io);
  } catch (const UsageFailure& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputFailure& e) {
    err << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace mixedcage::cli
