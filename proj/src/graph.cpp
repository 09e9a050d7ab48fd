#include "mixedcage/graph.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "mixedcage/error.hpp"

namespace mixedcage {

namespace {

std::string pair_string(Vertex a, Vertex b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void check_endpoints(std::size_t n, Vertex a, Vertex b) {
  if (a >= n || b >= n) {
    throw Error(ErrorCode::kOutOfRange, pair_string(a, b) +
                                            " has an endpoint outside 0.." +
                                            std::to_string(n));
  }
  if (a == b) {
    throw Error(ErrorCode::kSelfLoop, pair_string(a, b));
  }
}

}  // namespace

MixedGraph::MixedGraph(std::size_t n, std::span<const VertexPair> edges,
                       std::span<const VertexPair> arcs)
    : n_(n), edge_adj_(n), out_adj_(n), in_adj_(n) {
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    check_endpoints(n, a, b);
    edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  arcs_.reserve(arcs.size());
  for (const auto& [a, b] : arcs) {
    check_endpoints(n, a, b);
    arcs_.push_back(Arc{a, b});
  }
  std::sort(edges_.begin(), edges_.end());
  std::sort(arcs_.begin(), arcs_.end());
  if (auto it = std::adjacent_find(edges_.begin(), edges_.end());
      it != edges_.end()) {
    throw Error(ErrorCode::kDuplicate, "edge " + pair_string(it->u, it->v));
  }
  if (auto it = std::adjacent_find(arcs_.begin(), arcs_.end());
      it != arcs_.end()) {
    throw Error(ErrorCode::kDuplicate,
                "arc " + pair_string(it->tail, it->head));
  }
  // Sorted input order keeps every adjacency list sorted.
  for (const Edge& e : edges_) {
    edge_adj_[e.u].push_back(e.v);
    edge_adj_[e.v].push_back(e.u);
  }
  for (auto& list : edge_adj_) std::sort(list.begin(), list.end());
  for (const Arc& a : arcs_) {
    out_adj_[a.tail].push_back(a.head);
    in_adj_[a.head].push_back(a.tail);
  }
  for (auto& list : in_adj_) std::sort(list.begin(), list.end());
}

bool MixedGraph::has_edge(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_) return false;
  const auto& list = edge_adj_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

bool MixedGraph::has_arc(Vertex tail, Vertex head) const {
  if (tail >= n_ || head >= n_) return false;
  const auto& list = out_adj_[tail];
  return std::binary_search(list.begin(), list.end(), head);
}

MixedGraph MixedGraph::converse() const {
  std::vector<VertexPair> reversed;
  reversed.reserve(arcs_.size());
  for (const Arc& a : arcs_) reversed.emplace_back(a.head, a.tail);
  return MixedGraph(n_, edge_pairs(), reversed);
}

std::vector<VertexPair> MixedGraph::edge_pairs() const {
  std::vector<VertexPair> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<VertexPair> MixedGraph::arc_pairs() const {
  std::vector<VertexPair> out;
  out.reserve(arcs_.size());
  for (const Arc& a : arcs_) out.emplace_back(a.tail, a.head);
  return out;
}

DegreeProfile degree_profile(const MixedGraph& g) {
  const std::size_t n = g.order();
  DegreeProfile p;
  p.deg.resize(n);
  p.outdeg.resize(n);
  p.indeg.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    p.deg[v] = g.edge_neighbors(v).size();
    p.outdeg[v] = g.out_neighbors(v).size();
    p.indeg[v] = g.in_neighbors(v).size();
  }
  auto constant = [](const std::vector<std::size_t>& xs) {
    return std::adjacent_find(xs.begin(), xs.end(), std::not_equal_to<>()) ==
           xs.end();
  };
  // The empty graph is vacuously regular; there is no value to report.
  if (n > 0 && constant(p.deg) && constant(p.outdeg) && constant(p.indeg) &&
      p.outdeg[0] == p.indeg[0]) {
    p.regular = RegularWitness{p.deg[0], p.outdeg[0]};
  }
  return p;
}

MixedGraph apply_permutation(const MixedGraph& g, const Permutation& p) {
  if (p.size() != g.order()) {
    throw Error(ErrorCode::kLengthMismatch,
                "permutation of size " + std::to_string(p.size()) +
                    " applied to graph of order " + std::to_string(g.order()));
  }
  std::vector<VertexPair> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) edges.emplace_back(p(e.u), p(e.v));
  std::vector<VertexPair> arcs;
  arcs.reserve(g.arcs().size());
  for (const Arc& a : g.arcs()) arcs.emplace_back(p(a.tail), p(a.head));
  return MixedGraph(g.order(), edges, arcs);
}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

bool is_blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

// Parses one matrix row in either layout; nullopt on any non-0/1 content.
std::optional<std::vector<std::uint8_t>> parse_row(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  std::vector<std::uint8_t> row;
  if (tokens.size() == 1) {
    for (char c : tokens[0]) {
      if (c != '0' && c != '1') return std::nullopt;
      row.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return row;
  }
  for (const auto& tok : tokens) {
    if (tok != "0" && tok != "1") return std::nullopt;
    row.push_back(static_cast<std::uint8_t>(tok[0] - '0'));
  }
  return row;
}

}  // namespace

MatrixReadResult read_adjacency_matrix(std::string_view text,
                                       const MatrixReadOptions& options) {
  MatrixReadResult result;
  std::vector<std::vector<std::uint8_t>> rows;
  bool in_matrix = false;
  std::size_t line_no = 0;
  for (const std::string& line : split_lines(text)) {
    ++line_no;
    if (is_blank(line)) continue;
    auto row = parse_row(line);
    if (!row) {
      if (!in_matrix && options.allow_header) {
        result.skipped_header_lines.push_back(line);
        continue;
      }
      throw Error(ErrorCode::kBadToken,
                  "line " + std::to_string(line_no) + ": \"" + line + "\"");
    }
    in_matrix = true;
    rows.push_back(std::move(*row));
  }
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error(ErrorCode::kNonSquare,
                  "row " + std::to_string(i) + " has " +
                      std::to_string(rows[i].size()) + " entries, expected " +
                      std::to_string(n));
    }
  }
  std::vector<VertexPair> edges;
  std::vector<VertexPair> arcs;
  for (Vertex i = 0; i < n; ++i) {
    if (rows[i][i] != 0) {
      throw Error(ErrorCode::kNonzeroDiagonal, "entry (" + std::to_string(i) +
                                                   "," + std::to_string(i) +
                                                   ")");
    }
    for (Vertex j = 0; j < n; ++j) {
      if (rows[i][j] == 0) continue;
      if (rows[j][i] == 1) {
        if (i < j) edges.emplace_back(i, j);
      } else {
        arcs.emplace_back(i, j);
      }
    }
  }
  result.graph = MixedGraph(n, edges, arcs);
  return result;
}

bool is_matrix_representable(const MixedGraph& g) {
  for (const Arc& a : g.arcs()) {
    if (g.has_arc(a.head, a.tail) || g.has_edge(a.tail, a.head)) return false;
  }
  return true;
}

std::string write_adjacency_matrix(const MixedGraph& g) {
  if (!is_matrix_representable(g)) {
    throw Error(ErrorCode::kInvalidArgument,
                "graph has antiparallel arcs or an edge sharing a pair with "
                "an arc; the 0/1 matrix cannot express it");
  }
  const std::size_t n = g.order();
  std::vector<std::uint8_t> cells(n * n, 0);
  for (const Edge& e : g.edges()) {
    cells[e.u * n + e.v] = 1;
    cells[e.v * n + e.u] = 1;
  }
  for (const Arc& a : g.arcs()) cells[a.tail * n + a.head] = 1;
  std::string out;
  out.reserve(2 * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) out += ' ';
      out += static_cast<char>('0' + cells[i * n + j]);
    }
    out += '\n';
  }
  return out;
}

std::string export_dot(const MixedGraph& g, std::string_view name) {
  std::string out = "digraph " + std::string(name) + " {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out += "  " + std::to_string(v) + ";\n";
  }
  for (const Arc& a : g.arcs()) {
    out += "  " + std::to_string(a.tail) + " -> " + std::to_string(a.head) +
           ";\n";
  }
  for (const Edge& e : g.edges()) {
    out += "  " + std::to_string(e.u) + " -> " + std::to_string(e.v) +
           " [dir=none];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace mixedcage
