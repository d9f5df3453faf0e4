#pragma once

#include "permring/index_set.hpp"
#include "permring/rational.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permring {

/// A permutation of an even index set in two-element block notation:
/// entries (x1 x2 / x3 x4 / ... / x_{2k-1} x_{2k}).
class BlockPerm {
 public:
  /// The empty permutation (k = 0).
  BlockPerm() = default;
  /// Validated construction; throws std::invalid_argument on odd length,
  /// duplicates, or entries that are not exactly the elements of `index_set`.
  BlockPerm(const IndexSet& index_set, std::vector<Label> entries);
  /// Validates only parity and distinctness; the index set is implied.
  static BlockPerm from_entries(std::vector<Label> entries);

  std::span<const Label> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t blocks() const { return entries_.size() / 2; }
  bool empty() const { return entries_.empty(); }
  Label operator[](std::size_t i) const { return entries_[i]; }
  Mask mask() const { return mask_; }
  IndexSet index_set() const { return IndexSet::from_mask(mask_); }
  bool same_set(const BlockPerm& o) const { return mask_ == o.mask_; }

  /// Copy with positions p and q exchanged.
  BlockPerm swapped(std::size_t p, std::size_t q) const;

  auto operator<=>(const BlockPerm& o) const { return entries_ <=> o.entries_; }
  bool operator==(const BlockPerm& o) const { return entries_ == o.entries_; }

 private:
  std::vector<Label> entries_;
  Mask mask_ = 0;
};

/// make_block_perm: validated construction.
inline BlockPerm make_block_perm(const IndexSet& index_set, std::vector<Label> entries) {
  return BlockPerm(index_set, std::move(entries));
}

/// Text form "7,9/5,6/2,3"; the empty permutation is "".
std::string to_string(const BlockPerm& x);
BlockPerm parse_block_perm(std::string_view text);

/// x1 < x2 > x3 < x4 > ... ; the empty permutation is alternating.
bool is_alternating(const BlockPerm& x);

/// Every block ascending (x_{2i-1} < x_{2i}).
bool is_block_ascending(const BlockPerm& x);

/// 0-based junctions j (between blocks j and j+1) with x_{2j+2} < x_{2j+3}
/// in 1-based positions, i.e. entries[2j+1] < entries[2j+2].
bool junction_violated(const BlockPerm& x, std::size_t junction);

/// Block sums read from the last block backward. Comparing these vectors
/// lexicographically is the order ≺ (it is a total preorder on Perm_I).
std::vector<int> prec_key(const BlockPerm& x);

/// x ≺ y. Throws std::invalid_argument if the index sets differ.
bool prec_less(const BlockPerm& x, const BlockPerm& y);

/// Canonical order used for basis listings and graph output: ≺-descending,
/// ties broken by ascending entries. A strict weak order.
struct CanonicalOrder {
  bool operator()(const BlockPerm& a, const BlockPerm& b) const;
};

/// All alternating permutations on I in CanonicalOrder. For I = ∅ the
/// result is the single empty permutation.
std::vector<BlockPerm> alt_basis(const IndexSet& index_set);

/// Euler zigzag number a_m via the Seidel–Entringer (boustrophedon)
/// triangle. Throws std::invalid_argument for odd or negative m.
Integer euler_zigzag(int m);

/// Set^x_i for 1-based i: {x_i} for i ≤ 2, else {x_1..x_{2⌊(i-1)/2⌋}, x_i}.
/// Throws std::out_of_range for i outside 1..2k.
VertexSet set_of(const BlockPerm& x, std::size_t i);

/// Each block sorted ascending, with sign (-1)^{number of swapped blocks}.
std::pair<BlockPerm, int> block_normalize(const BlockPerm& x);

/// Relabels every entry through w (w[i-1] is the image of i).
BlockPerm relabel(const BlockPerm& x, std::span<const Label> w);

/// Subsequence of x's entries lying in J, re-blocked in order.
BlockPerm restrict_perm(const BlockPerm& x, Mask j);

}  // namespace permring
