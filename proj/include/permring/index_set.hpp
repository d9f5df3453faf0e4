#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permring {

/// An element of the ground set [n+1]. Labels are positive and at most
/// kMaxLabel so that subsets fit a 64-bit mask.
using Label = int;
inline constexpr Label kMaxLabel = 63;

using Mask = std::uint64_t;

constexpr Mask bit(Label x) { return Mask{1} << x; }

/// Arbitrary subset of the ground set, stored as a bit mask. Used for the
/// vertices of the Coxeter complex (nonempty proper subsets of [n+1]) and as
/// a scratch set type.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask m) : mask_(m) {}
  static VertexSet of(std::span<const Label> labels);

  constexpr Mask mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(Label x) const { return (mask_ & bit(x)) != 0; }
  constexpr bool subset_of(VertexSet o) const { return (mask_ & ~o.mask_) == 0; }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(mask_ & o.mask_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(mask_ | o.mask_); }

  std::vector<Label> labels() const;
  /// "{1,3,5}"
  std::string to_string() const;

  constexpr auto operator<=>(const VertexSet&) const = default;

 private:
  Mask mask_ = 0;
};

/// Even-cardinality subset I of [n+1], kept as a strictly ascending list.
/// The empty set is allowed and indexes the degree-0 grade.
class IndexSet {
 public:
  IndexSet() = default;
  /// Throws std::invalid_argument unless `elements` is strictly ascending,
  /// positive, at most kMaxLabel, and of even length.
  explicit IndexSet(std::vector<Label> elements);
  /// As above, and additionally requires every element to lie in [n+1].
  static IndexSet within(std::vector<Label> elements, int n);
  static IndexSet from_mask(Mask m);

  std::span<const Label> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  /// Cohomological degree k = |I|/2.
  int degree() const { return static_cast<int>(elements_.size() / 2); }
  Mask mask() const { return mask_; }
  VertexSet as_vertex_set() const { return VertexSet(mask_); }
  bool contains(Label x) const { return (mask_ & bit(x)) != 0; }
  bool fits(int n) const;
  Label max_label() const { return elements_.empty() ? 0 : elements_.back(); }

  bool disjoint_from(const IndexSet& o) const { return (mask_ & o.mask_) == 0; }
  IndexSet symmetric_difference(const IndexSet& o) const { return from_mask(mask_ ^ o.mask_); }

  /// "1,3,4,6"; the empty set renders as "".
  std::string to_string() const;

  auto operator<=>(const IndexSet& o) const { return elements_ <=> o.elements_; }
  bool operator==(const IndexSet& o) const { return mask_ == o.mask_; }

 private:
  std::vector<Label> elements_;
  Mask mask_ = 0;
};

/// Parses the comma-separated text form. Throws std::invalid_argument.
IndexSet parse_index_set(std::string_view text);

/// All even-cardinality subsets of [n+1] of size 2k.
std::vector<IndexSet> even_subsets(int n, int k);

}  // namespace permring
