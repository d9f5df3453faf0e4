#pragma once

#include "permring/block_perm.hpp"
#include "permring/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace permring {

/// The unique (τ, σ) with τ·σ·x = y when φ(x) is a face of Δ_y. σ swaps
/// positions across junctions, τ swaps within blocks; σ acts first.
struct FaceDecomposition {
  std::vector<bool> block_swaps;     // τ: one flag per block
  std::vector<bool> junction_swaps;  // σ: one flag per junction
  bool tau_odd = false;
};

/// Applies the swaps of `d` to x (junction swaps first, then block swaps).
BlockPerm apply(const FaceDecomposition& d, const BlockPerm& x);

/// Present iff φ(x) is a face of Δ_y. Found by the junction-by-junction
/// membership scan, then per-block swaps.
std::optional<FaceDecomposition> face_decompose(const BlockPerm& x, const BlockPerm& y);

/// s_I(α, x): 0 if τ_{α,x} is odd, 1 if even. Throws std::invalid_argument
/// if α is not alternating or φ(α) is not a face of Δ_x.
int s_weight(const BlockPerm& alpha, const BlockPerm& x);

struct Arc {
  BlockPerm target;
  int weight = 0;
};

/// All arcs α → x of D_I leaving α (including the loop), in CanonicalOrder of
/// targets. Empty unless α is alternating.
std::vector<Arc> out_arcs(const BlockPerm& alpha);

/// Alternating sources β with an arc β → x (including x itself when x is
/// alternating).
std::vector<BlockPerm> in_sources(const BlockPerm& x);

/// Alternating β ≠ x admitting a walk of non-loop arcs to x.
std::set<BlockPerm> walk_ancestors(const BlockPerm& x);

/// Vertices reachable from α by walks of non-loop arcs (α excluded).
std::set<BlockPerm> walk_descendants(const BlockPerm& alpha);

/// The weighted digraph D_I with all arcs out of alternating permutations.
struct CoeffGraph {
  IndexSet index_set;
  std::map<std::pair<BlockPerm, BlockPerm>, int> arcs;

  std::size_t loop_count() const;
};

/// Throws std::invalid_argument for |I| < 2.
CoeffGraph build_graph(const IndexSet& index_set);

/// A walk α = v_1 → ... → v_m = x in P_I(α, x).
struct Walk {
  std::vector<BlockPerm> vertices;
  int weight = 0;
};

/// Calls `visit` for every walk in P_I(α, x): non-loop steps through
/// alternating vertices ending at x, with a single final loop allowed when
/// x is alternating.
void for_each_walk(const BlockPerm& alpha, const BlockPerm& x, const std::function<void(const Walk&)>& visit);

/// 𝒯𝒞^α_x = −Σ_{p ∈ P_I(α,x)} (−1)^{wt(p)} by explicit walk enumeration.
Rational topo_coeff_walks(const BlockPerm& alpha, const BlockPerm& x);

/// 𝒯𝒞^α_x for every α ∈ Alt_I at once (zero entries omitted), by memoized
/// recursion down the DAG of non-loop arcs. Alternating x gives δ.
std::map<BlockPerm, Rational> topo_coeffs_memo(const BlockPerm& x);

/// Single-entry form of topo_coeffs_memo.
Rational topo_coeff_memo(const BlockPerm& alpha, const BlockPerm& x);

/// DOT rendering of the graph. With `restrict_to`, only those vertices and
/// the arcs between them are drawn; vertex order is CanonicalOrder.
std::string emit_dot(const CoeffGraph& g, const std::optional<std::vector<BlockPerm>>& restrict_to = std::nullopt,
                     bool include_loops = true);

}  // namespace permring
