#include "permring/coeff_graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace permring {

namespace {

void require_same_set(const BlockPerm& a, const BlockPerm& b, const char* what) {
  if (!a.same_set(b)) throw std::invalid_argument(std::string(what) + ": permutations on different index sets");
}

bool in_block(const BlockPerm& y, std::size_t block, Label v) { return y[2 * block] == v || y[2 * block + 1] == v; }

// Every (σ, τ) pair of a k-block permutation, indexed by a bit mask: the low
// k-1 bits choose junction swaps, the next k bits choose block swaps.
FaceDecomposition decomposition_from_bits(std::size_t k, Mask bits) {
  FaceDecomposition d;
  d.junction_swaps.resize(k > 0 ? k - 1 : 0);
  d.block_swaps.resize(k);
  for (std::size_t j = 0; j + 1 < k; ++j) d.junction_swaps[j] = (bits >> j) & 1;
  for (std::size_t b = 0; b < k; ++b) {
    d.block_swaps[b] = (bits >> (k - 1 + b)) & 1;
    if (d.block_swaps[b]) d.tau_odd = !d.tau_odd;
  }
  return d;
}

BlockPerm apply_inverse(const FaceDecomposition& d, const BlockPerm& y) {
  std::vector<Label> e(y.entries().begin(), y.entries().end());
  for (std::size_t b = 0; b < d.block_swaps.size(); ++b)
    if (d.block_swaps[b]) std::swap(e[2 * b], e[2 * b + 1]);
  for (std::size_t j = 0; j < d.junction_swaps.size(); ++j)
    if (d.junction_swaps[j]) std::swap(e[2 * j + 1], e[2 * j + 2]);
  return BlockPerm::from_entries(std::move(e));
}

}  // namespace

BlockPerm apply(const FaceDecomposition& d, const BlockPerm& x) {
  std::vector<Label> e(x.entries().begin(), x.entries().end());
  for (std::size_t j = 0; j < d.junction_swaps.size(); ++j)
    if (d.junction_swaps[j]) std::swap(e[2 * j + 1], e[2 * j + 2]);
  for (std::size_t b = 0; b < d.block_swaps.size(); ++b)
    if (d.block_swaps[b]) std::swap(e[2 * b], e[2 * b + 1]);
  return BlockPerm::from_entries(std::move(e));
}

std::optional<FaceDecomposition> face_decompose(const BlockPerm& x, const BlockPerm& y) {
  require_same_set(x, y, "face_decompose");
  const std::size_t k = x.blocks();
  if (k == 0) return FaceDecomposition{};
  FaceDecomposition d;
  d.junction_swaps.assign(k - 1, false);
  d.block_swaps.assign(k, false);
  // Junction j: either x_{2j+1} stays in block j and x_{2j+2} in block j+1,
  // or the two are exchanged (0-based positions).
  for (std::size_t j = 0; j + 1 < k; ++j) {
    const Label left = x[2 * j + 1], right = x[2 * j + 2];
    if (in_block(y, j, left) && in_block(y, j + 1, right)) {
      d.junction_swaps[j] = false;
    } else if (in_block(y, j + 1, left) && in_block(y, j, right)) {
      d.junction_swaps[j] = true;
    } else {
      return std::nullopt;
    }
  }
  std::vector<Label> e(x.entries().begin(), x.entries().end());
  for (std::size_t j = 0; j + 1 < k; ++j)
    if (d.junction_swaps[j]) std::swap(e[2 * j + 1], e[2 * j + 2]);
  for (std::size_t b = 0; b < k; ++b) {
    if (e[2 * b] == y[2 * b] && e[2 * b + 1] == y[2 * b + 1]) continue;
    if (e[2 * b] == y[2 * b + 1] && e[2 * b + 1] == y[2 * b]) {
      d.block_swaps[b] = true;
      d.tau_odd = !d.tau_odd;
      continue;
    }
    return std::nullopt;
  }
  return d;
}

int s_weight(const BlockPerm& alpha, const BlockPerm& x) {
  if (!is_alternating(alpha)) throw std::invalid_argument("s_weight: " + to_string(alpha) + " is not alternating");
  auto d = face_decompose(alpha, x);
  if (!d) throw std::invalid_argument("s_weight: phi(" + to_string(alpha) + ") is not a face of Delta(" + to_string(x) + ")");
  return d->tau_odd ? 0 : 1;
}

std::vector<Arc> out_arcs(const BlockPerm& alpha) {
  std::vector<Arc> arcs;
  if (!is_alternating(alpha) || alpha.empty()) return arcs;
  const std::size_t k = alpha.blocks();
  const Mask total = Mask{1} << (2 * k - 1);
  arcs.reserve(total);
  for (Mask bits = 0; bits < total; ++bits) {
    auto d = decomposition_from_bits(k, bits);
    arcs.push_back({apply(d, alpha), d.tau_odd ? 0 : 1});
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return CanonicalOrder{}(a.target, b.target); });
  return arcs;
}

std::vector<BlockPerm> in_sources(const BlockPerm& x) {
  std::vector<BlockPerm> out;
  if (x.empty()) return out;
  const std::size_t k = x.blocks();
  const Mask total = Mask{1} << (2 * k - 1);
  for (Mask bits = 0; bits < total; ++bits) {
    BlockPerm src = apply_inverse(decomposition_from_bits(k, bits), x);
    if (is_alternating(src)) out.push_back(std::move(src));
  }
  std::sort(out.begin(), out.end(), CanonicalOrder{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::set<BlockPerm> walk_ancestors(const BlockPerm& x) {
  std::set<BlockPerm> seen;
  std::deque<BlockPerm> frontier{x};
  while (!frontier.empty()) {
    BlockPerm v = std::move(frontier.front());
    frontier.pop_front();
    for (auto& src : in_sources(v)) {
      if (src == v || src == x) continue;
      if (seen.insert(src).second) frontier.push_back(src);
    }
  }
  return seen;
}

std::set<BlockPerm> walk_descendants(const BlockPerm& alpha) {
  std::set<BlockPerm> seen;
  std::deque<BlockPerm> frontier{alpha};
  while (!frontier.empty()) {
    BlockPerm v = std::move(frontier.front());
    frontier.pop_front();
    for (auto& arc : out_arcs(v)) {
      if (arc.target == v || arc.target == alpha) continue;
      if (seen.insert(arc.target).second) frontier.push_back(arc.target);
    }
  }
  return seen;
}

std::size_t CoeffGraph::loop_count() const {
  return static_cast<std::size_t>(
      std::count_if(arcs.begin(), arcs.end(), [](const auto& a) { return a.first.first == a.first.second; }));
}

CoeffGraph build_graph(const IndexSet& index_set) {
  if (index_set.size() < 2) throw std::invalid_argument("build_graph needs |I| >= 2");
  CoeffGraph g{index_set, {}};
  for (const auto& alpha : alt_basis(index_set))
    for (auto& arc : out_arcs(alpha)) g.arcs.emplace(std::make_pair(alpha, std::move(arc.target)), arc.weight);
  return g;
}

void for_each_walk(const BlockPerm& alpha, const BlockPerm& x, const std::function<void(const Walk&)>& visit) {
  require_same_set(alpha, x, "for_each_walk");
  if (!is_alternating(alpha)) return;
  const auto ancestors = walk_ancestors(x);
  const bool x_alternating = is_alternating(x);
  Walk walk{{alpha}, 0};
  auto step = [&](auto&& self, const BlockPerm& v) -> void {
    for (const auto& arc : out_arcs(v)) {
      const BlockPerm& w = arc.target;
      if (w == v) {
        // A loop may only close the walk, and only at x.
        if (v == x) {
          walk.vertices.push_back(w);
          walk.weight += arc.weight;
          visit(walk);
          walk.weight -= arc.weight;
          walk.vertices.pop_back();
        }
        continue;
      }
      const bool to_target = (w == x);
      if (!to_target && !ancestors.contains(w)) continue;
      walk.vertices.push_back(w);
      walk.weight += arc.weight;
      if (to_target) {
        visit(walk);
        if (x_alternating) self(self, w);
      } else {
        self(self, w);
      }
      walk.weight -= arc.weight;
      walk.vertices.pop_back();
    }
  };
  step(step, alpha);
}

Rational topo_coeff_walks(const BlockPerm& alpha, const BlockPerm& x) {
  if (!is_alternating(alpha)) throw std::invalid_argument("topo_coeff_walks: " + to_string(alpha) + " is not alternating");
  long total = 0;
  for_each_walk(alpha, x, [&](const Walk& w) { total += sign_of_parity(w.weight); });
  return Rational(-total);
}

std::map<BlockPerm, Rational> topo_coeffs_memo(const BlockPerm& x) {
  std::map<BlockPerm, Rational> out;
  if (is_alternating(x)) {
    out.emplace(x, 1);
    return out;
  }
  const auto ancestors = walk_ancestors(x);
  // Non-loop arcs strictly increase ≺, so visiting ancestors ≺-descending
  // sees every successor's coefficient before it is needed.
  std::vector<BlockPerm> order(ancestors.begin(), ancestors.end());
  std::sort(order.begin(), order.end(), CanonicalOrder{});
  std::map<BlockPerm, Rational> memo;
  for (const auto& beta : order) {
    Rational tc = 0;
    for (const auto& arc : out_arcs(beta)) {
      if (arc.target == beta) continue;
      if (arc.target == x) {
        tc -= sign_of_parity(arc.weight);
      } else if (auto it = memo.find(arc.target); it != memo.end()) {
        tc += sign_of_parity(arc.weight) * it->second;
      }
    }
    memo.emplace(beta, tc);
  }
  for (auto& [beta, tc] : memo)
    if (tc != 0) out.emplace(beta, tc);
  return out;
}

Rational topo_coeff_memo(const BlockPerm& alpha, const BlockPerm& x) {
  require_same_set(alpha, x, "topo_coeff_memo");
  if (!is_alternating(alpha)) throw std::invalid_argument("topo_coeff_memo: " + to_string(alpha) + " is not alternating");
  if (is_alternating(x)) return alpha == x ? 1 : 0;
  auto all = topo_coeffs_memo(x);
  auto it = all.find(alpha);
  return it == all.end() ? Rational(0) : it->second;
}

std::string emit_dot(const CoeffGraph& g, const std::optional<std::vector<BlockPerm>>& restrict_to, bool include_loops) {
  std::vector<BlockPerm> vertices;
  if (restrict_to) {
    vertices = *restrict_to;
  } else {
    for (const auto& [arc, w] : g.arcs) {
      vertices.push_back(arc.first);
      vertices.push_back(arc.second);
    }
  }
  std::sort(vertices.begin(), vertices.end(), CanonicalOrder{});
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::map<BlockPerm, std::size_t> id;
  for (std::size_t i = 0; i < vertices.size(); ++i) id.emplace(vertices[i], i);

  std::ostringstream os;
  os << "digraph D_I {\n";
  os << "  // I = {" << g.index_set.to_string() << "}\n";
  os << "  node [shape=box, fontname=\"Helvetica\"];\n";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    os << "  v" << i << " [label=\"" << to_string(vertices[i]) << "\"";
    if (!is_alternating(vertices[i])) os << ", style=rounded";
    os << "];\n";
  }
  // Arcs in (source, target) CanonicalOrder.
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, int>> edges;
  for (const auto& [arc, w] : g.arcs) {
    auto s = id.find(arc.first), t = id.find(arc.second);
    if (s == id.end() || t == id.end()) continue;
    if (!include_loops && s->second == t->second) continue;
    edges.push_back({{s->second, t->second}, w});
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& [st, w] : edges)
    os << "  v" << st.first << " -> v" << st.second << " [label=\"" << w << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace permring
