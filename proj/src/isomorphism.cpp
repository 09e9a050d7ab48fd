#include "mixedcage/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mixedcage/error.hpp"

namespace mixedcage {

namespace {

using Coloring = std::vector<std::uint32_t>;  // color = start of the vertex's cell

// Ordered-partition refinement over the edge, arc-out and arc-in relations.
class Refiner {
 public:
  explicit Refiner(const MixedGraph& g) : g_(g), n_(g.order()), code_(n_ * n_, 0) {
    for (const Edge& e : g.edges()) {
      code_[e.u * n_ + e.v] |= 1;
      code_[e.v * n_ + e.u] |= 1;
    }
    for (const Arc& a : g.arcs()) {
      code_[a.tail * n_ + a.head] |= 2;
      code_[a.head * n_ + a.tail] |= 4;
    }
  }

  std::size_t order() const { return n_; }

  Coloring unit() const {
    Coloring c(n_, 0);
    refine(c);
    return c;
  }

  // Splits cells until every vertex in a cell sees the same multiset of
  // colors through each relation. New cells stay inside their parent cell,
  // ordered by signature.
  void refine(Coloring& color) const {
    std::size_t cells = count_cells(color);
    std::vector<std::vector<std::uint32_t>> sig(n_);
    std::vector<Vertex> order(n_);
    while (true) {
      for (Vertex v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(color[v]);
        append_sorted(s, g_.edge_neighbors(v), color);
        append_sorted(s, g_.out_neighbors(v), color);
        append_sorted(s, g_.in_neighbors(v), color);
      }
      std::iota(order.begin(), order.end(), Vertex{0});
      std::sort(order.begin(), order.end(),
                [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
      std::uint32_t start = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) {
          start = static_cast<std::uint32_t>(i);
        }
        color[order[i]] = start;
      }
      const std::size_t now = count_cells(color);
      if (now == cells) return;
      cells = now;
    }
  }

  Coloring individualize(const Coloring& color, Vertex v) const {
    Coloring out = color;
    const std::uint32_t c = color[v];
    for (Vertex u = 0; u < n_; ++u) {
      if (u != v && color[u] == c) out[u] = c + 1;
    }
    refine(out);
    return out;
  }

  // Members of the first non-singleton cell, ascending; empty when discrete.
  std::vector<Vertex> target_cell(const Coloring& color) const {
    std::vector<std::uint32_t> size(n_, 0);
    for (auto c : color) ++size[c];
    for (std::uint32_t c = 0; c < n_; ++c) {
      if (size[c] > 1) {
        std::vector<Vertex> members;
        for (Vertex v = 0; v < n_; ++v) {
          if (color[v] == c) members.push_back(v);
        }
        return members;
      }
    }
    return {};
  }

  std::vector<std::uint8_t> encode(const Coloring& discrete) const {
    std::vector<Vertex> at(n_);
    for (Vertex v = 0; v < n_; ++v) at[discrete[v]] = v;
    std::vector<std::uint8_t> enc(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) enc[i * n_ + j] = code_[at[i] * n_ + at[j]];
    }
    return enc;
  }

 private:
  static std::size_t count_cells(const Coloring& color) {
    std::size_t cells = 0;
    std::vector<bool> seen(color.size(), false);
    for (auto c : color) {
      if (!seen[c]) {
        seen[c] = true;
        ++cells;
      }
    }
    return cells;
  }

  static void append_sorted(std::vector<std::uint32_t>& s,
                            std::span<const Vertex> nbrs, const Coloring& color) {
    const std::size_t from = s.size();
    s.push_back(static_cast<std::uint32_t>(nbrs.size()));
    for (Vertex u : nbrs) s.push_back(color[u]);
    std::sort(s.begin() + static_cast<std::ptrdiff_t>(from) + 1, s.end());
  }

  const MixedGraph& g_;
  std::size_t n_;
  std::vector<std::uint8_t> code_;
};

// gamma(v) = vertex of `to` carrying the label that `from` gives v.
Permutation leaf_map(const Coloring& from, const Coloring& to) {
  std::vector<Vertex> at(to.size());
  for (Vertex v = 0; v < to.size(); ++v) at[to[v]] = v;
  std::vector<Vertex> image(from.size());
  for (Vertex v = 0; v < from.size(); ++v) image[v] = at[from[v]];
  return Permutation(std::move(image));
}

std::size_t common_prefix(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::size_t d = 0;
  while (d < a.size() && d < b.size() && a[d] == b[d]) ++d;
  return d;
}

// Orbit of `v` under the generators that fix every vertex of `fixed`.
std::vector<bool> orbit_under_stabilizer(const std::vector<Permutation>& gens,
                                         const std::vector<Vertex>& fixed,
                                         Vertex v, std::size_t n) {
  std::vector<const Permutation*> usable;
  for (const auto& p : gens) {
    if (std::all_of(fixed.begin(), fixed.end(), [&](Vertex x) { return p(x) == x; })) {
      usable.push_back(&p);
    }
  }
  std::vector<bool> in(n, false);
  std::vector<Vertex> stack{v};
  in[v] = true;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (const Permutation* p : usable) {
      Vertex y = (*p)(x);
      if (!in[y]) {
        in[y] = true;
        stack.push_back(y);
      }
    }
  }
  return in;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const MixedGraph& g) : refiner_(g) {}

  CanonicalForm run() {
    std::vector<Vertex> path;
    dfs(refiner_.unit(), path);
    return CanonicalForm{std::move(best_enc_), Permutation(best_lab_)};
  }

 private:
  static constexpr std::size_t kNoJump = static_cast<std::size_t>(-1);

  void dfs(const Coloring& color, std::vector<Vertex>& path) {
    auto cell = refiner_.target_cell(color);
    if (cell.empty()) {
      leaf(color, path);
      return;
    }
    std::vector<Vertex> explored;
    for (Vertex w : cell) {
      if (!explored.empty()) {
        auto orbit = orbit_under_stabilizer(autos_, path, w, refiner_.order());
        if (std::any_of(explored.begin(), explored.end(),
                        [&](Vertex e) { return orbit[e]; })) {
          continue;
        }
      }
      path.push_back(w);
      dfs(refiner_.individualize(color, w), path);
      path.pop_back();
      if (jump_to_ != kNoJump) {
        if (jump_to_ < path.size()) return;
        jump_to_ = kNoJump;
      }
      explored.push_back(w);
    }
  }

  void leaf(const Coloring& color, const std::vector<Vertex>& path) {
    auto enc = refiner_.encode(color);
    if (!have_first_) {
      have_first_ = true;
      first_enc_ = best_enc_ = std::move(enc);
      first_lab_ = best_lab_ = color;
      first_path_ = best_path_ = path;
      return;
    }
    if (enc == first_enc_) {
      add_auto(leaf_map(first_lab_, color));
      jump_to_ = common_prefix(first_path_, path);
      return;
    }
    if (enc == best_enc_) {
      add_auto(leaf_map(best_lab_, color));
      jump_to_ = common_prefix(best_path_, path);
      return;
    }
    if (enc < best_enc_) {
      best_enc_ = std::move(enc);
      best_lab_ = color;
      best_path_ = path;
    }
  }

  void add_auto(Permutation p) {
    if (p.is_identity()) return;
    if (std::find(autos_.begin(), autos_.end(), p) == autos_.end()) {
      autos_.push_back(std::move(p));
    }
  }

  Refiner refiner_;
  std::vector<Permutation> autos_;
  bool have_first_ = false;
  std::vector<std::uint8_t> first_enc_, best_enc_;
  Coloring first_lab_, best_lab_;
  std::vector<Vertex> first_path_, best_path_;
  std::size_t jump_to_ = kNoJump;
};

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const MixedGraph& g) : refiner_(g), n_(g.order()) {}

  AutGroup run() {
    AutGroup out;
    out.degree = n_;
    // First path down to a discrete leaf.
    std::vector<Coloring> nodes{refiner_.unit()};
    std::vector<Vertex> path;
    while (true) {
      auto cell = refiner_.target_cell(nodes.back());
      if (cell.empty()) break;
      path.push_back(cell.front());
      nodes.push_back(refiner_.individualize(nodes.back(), cell.front()));
    }
    for (const auto& c : nodes) {
      Coloring s = c;
      std::sort(s.begin(), s.end());
      shapes_.push_back(std::move(s));
    }
    leaf_lab_ = nodes.back();
    leaf_enc_ = refiner_.encode(leaf_lab_);

    const std::size_t depth = path.size();
    out.orbit_lengths.assign(depth, 1);
    for (std::size_t level = depth; level-- > 0;) {
      std::vector<Vertex> fixed(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(level));
      auto orbit = orbit_under_stabilizer(out.generators, fixed, path[level], n_);
      for (Vertex w : refiner_.target_cell(nodes[level])) {
        if (orbit[w]) continue;
        auto gamma = find_equivalent(refiner_.individualize(nodes[level], w), level + 1);
        if (!gamma) continue;
        out.generators.push_back(std::move(*gamma));
        orbit = orbit_under_stabilizer(out.generators, fixed, path[level], n_);
      }
      out.orbit_lengths[level] =
          static_cast<std::uint64_t>(std::count(orbit.begin(), orbit.end(), true));
    }
    return out;
  }

 private:
  // Searches the subtree rooted at `color` (at tree depth `depth`) for a leaf
  // with the first leaf's encoding. Nodes whose cell structure differs from
  // the first path at the same depth cannot contain one.
  std::optional<Permutation> find_equivalent(const Coloring& color, std::size_t depth) {
    if (depth >= shapes_.size()) return std::nullopt;
    Coloring shape = color;
    std::sort(shape.begin(), shape.end());
    if (shape != shapes_[depth]) return std::nullopt;
    auto cell = refiner_.target_cell(color);
    if (cell.empty()) {
      if (refiner_.encode(color) == leaf_enc_) return leaf_map(leaf_lab_, color);
      return std::nullopt;
    }
    for (Vertex w : cell) {
      if (auto p = find_equivalent(refiner_.individualize(color, w), depth + 1)) return p;
    }
    return std::nullopt;
  }

  Refiner refiner_;
  std::size_t n_;
  std::vector<Coloring> shapes_;
  Coloring leaf_lab_;
  std::vector<std::uint8_t> leaf_enc_;
};

// Decimal digits of a product of small factors.
std::string decimal_product(const std::vector<std::uint64_t>& factors) {
  std::vector<std::uint32_t> limbs{1};  // base 1e9, little-endian
  constexpr std::uint64_t kBase = 1000000000;
  for (std::uint64_t f : factors) {
    unsigned __int128 carry = 0;
    for (auto& limb : limbs) {
      unsigned __int128 cur = static_cast<unsigned __int128>(limb) * f + carry;
      limb = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    while (carry > 0) {
      limbs.push_back(static_cast<std::uint32_t>(carry % kBase));
      carry /= kBase;
    }
  }
  std::string out = std::to_string(limbs.back());
  for (std::size_t i = limbs.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t x) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= x; ++p) {
    int e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (x > 1) out.emplace_back(x, 1);
  return out;
}

// Invariant factors of a finite abelian group from its element-order counts.
std::vector<std::uint64_t> invariant_factors(
    std::uint64_t order, const std::map<std::uint64_t, std::uint64_t>& element_orders) {
  // exponents[p] lists the exponents of the cyclic p-power factors, descending.
  std::vector<std::vector<std::uint64_t>> prime_powers;
  for (auto [p, e] : factorize(order)) {
    // log_p |{x : x^(p^k) = 1}| for k = 0..e
    std::vector<int> s(static_cast<std::size_t>(e) + 1, 0);
    std::uint64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      std::uint64_t count = 0;
      for (auto [ord, c] : element_orders) {
        if (pk % ord == 0) count += c;
      }
      int lg = 0;
      for (std::uint64_t t = count; t > 1; t /= p) ++lg;
      s[static_cast<std::size_t>(k)] = lg;
    }
    // #{factors with exponent >= k} = s[k] - s[k-1]
    std::vector<std::uint64_t> powers;
    for (int k = e; k >= 1; --k) {
      const int at_least_k = s[static_cast<std::size_t>(k)] - s[static_cast<std::size_t>(k) - 1];
      const int at_least_next =
          k < e ? s[static_cast<std::size_t>(k) + 1] - s[static_cast<std::size_t>(k)] : 0;
      std::uint64_t pw = 1;
      for (int i = 0; i < k; ++i) pw *= p;
      for (int i = 0; i < at_least_k - at_least_next; ++i) powers.push_back(pw);
    }
    prime_powers.push_back(std::move(powers));
  }
  // Combine the largest powers of every prime into the largest factor, etc.
  std::vector<std::uint64_t> factors;
  for (std::size_t i = 0;; ++i) {
    std::uint64_t f = 1;
    bool any = false;
    for (const auto& powers : prime_powers) {
      if (i < powers.size()) {
        f *= powers[i];
        any = true;
      }
    }
    if (!any) break;
    factors.push_back(f);
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

}  // namespace

CanonicalForm canonical_form(const MixedGraph& g) {
  if (g.order() == 0) return CanonicalForm{{}, Permutation::identity(0)};
  return CanonicalSearch(g).run();
}

IsomorphismResult is_isomorphic(const MixedGraph& g, const MixedGraph& h) {
  if (g.order() != h.order() || g.edges().size() != h.edges().size() ||
      g.arcs().size() != h.arcs().size()) {
    return {};
  }
  CanonicalForm cg = canonical_form(g);
  CanonicalForm ch = canonical_form(h);
  if (cg.encoding != ch.encoding) return {};
  Permutation witness = ch.labeling.inverse().after(cg.labeling);
  if (apply_permutation(g, witness) != h) {
    throw Error(ErrorCode::kVerificationFailed,
                "canonical forms agree but the derived map is not an isomorphism");
  }
  return IsomorphismResult{true, std::move(witness)};
}

std::optional<std::uint64_t> AutGroup::order() const {
  std::uint64_t total = 1;
  for (std::uint64_t len : orbit_lengths) {
    if (__builtin_mul_overflow(total, len, &total)) return std::nullopt;
  }
  return total;
}

std::string AutGroup::order_string() const { return decimal_product(orbit_lengths); }

AutGroup automorphism_group(const MixedGraph& g) {
  AutGroup group = AutomorphismSearch(g).run();
  for (const auto& p : group.generators) {
    if (apply_permutation(g, p) != g) {
      throw Error(ErrorCode::kVerificationFailed,
                  "generator " + p.cycle_notation() + " is not an automorphism");
    }
  }
  return group;
}

std::vector<Permutation> enumerate_group(const std::vector<Permutation>& generators,
                                         std::size_t degree, std::size_t cap) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> elements{Permutation::identity(degree)};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& gen : generators) {
      Permutation next = gen.after(elements[i]);
      if (seen.insert(next).second) {
        if (elements.size() >= cap) {
          throw Error(ErrorCode::kTooLarge,
                      "group has more than " + std::to_string(cap) + " elements");
        }
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

GroupFingerprint group_fingerprint(const AutGroup& group, std::size_t cap) {
  auto order = group.order();
  if (!order || *order > cap) {
    throw Error(ErrorCode::kTooLarge,
                "group order " + group.order_string() + " exceeds cap " + std::to_string(cap));
  }
  auto elements = enumerate_group(group.generators, group.degree, cap);
  if (elements.size() != *order) {
    throw Error(ErrorCode::kVerificationFailed,
                "enumeration found " + std::to_string(elements.size()) +
                    " elements, stabilizer chain says " + group.order_string());
  }
  GroupFingerprint fp;
  fp.order = *order;
  fp.abelian = true;
  for (std::size_t i = 0; i < elements.size() && fp.abelian; ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (elements[i].after(elements[j]) != elements[j].after(elements[i])) {
        fp.abelian = false;
        break;
      }
    }
  }
  for (const auto& e : elements) {
    const std::uint64_t o = e.order();
    ++fp.element_orders[o];
    fp.max_element_order = std::max(fp.max_element_order, o);
  }

  if (fp.order == 1) {
    fp.structure = "1";
  } else if (fp.abelian) {
    for (auto f : invariant_factors(fp.order, fp.element_orders)) {
      if (!fp.structure.empty()) fp.structure += " x ";
      fp.structure += "Z" + std::to_string(f);
    }
  } else {
    // Dihedral: a cyclic subgroup of index 2 whose complement is all involutions.
    const std::uint64_t half = fp.order / 2;
    bool dihedral = false;
    for (const auto& a : elements) {
      if (a.order() != half) continue;
      std::set<Permutation> rotations{Permutation::identity(group.degree)};
      Permutation x = a;
      while (!x.is_identity()) {
        rotations.insert(x);
        x = a.after(x);
      }
      dihedral = std::all_of(elements.begin(), elements.end(), [&](const Permutation& e) {
        return rotations.count(e) > 0 || e.order() == 2;
      });
      break;
    }
    if (dihedral) {
      fp.structure = half == 3 ? "S3" : "D" + std::to_string(half);
    } else {
      fp.structure = "non-abelian of order " + std::to_string(fp.order);
    }
  }
  return fp;
}

}  // namespace mixedcage
