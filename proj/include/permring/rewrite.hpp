#pragma once

#include "permring/block_perm.hpp"
#include "permring/rational.hpp"

#include <map>
#include <string>
#include <unordered_map>

namespace permring {

/// Element of ℚ⟨Perm_I⟩: a finite combination of permutations on one index
/// set. Zero coefficients are never stored.
class FormalSum {
 public:
  using Terms = std::map<BlockPerm, Rational>;

  FormalSum() = default;
  explicit FormalSum(IndexSet index_set) : index_set_(std::move(index_set)) {}
  static FormalSum of(const BlockPerm& x, const Rational& c = 1);

  const IndexSet& index_set() const { return index_set_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const BlockPerm& x) const;

  /// Throws std::invalid_argument if x is not a permutation of index_set().
  void add(const BlockPerm& x, const Rational& c);
  FormalSum& operator+=(const FormalSum& o);
  FormalSum& operator*=(const Rational& c);
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator*(const Rational& c, FormalSum a) { return a *= c; }

  bool operator==(const FormalSum&) const = default;

 private:
  IndexSet index_set_;
  Terms terms_;
};

/// A FormalSum whose every key is alternating: the normal form of an element
/// of ℚ⟨Perm_I⟩/M_I in the alternating basis. Stored coefficients are the
/// straightening coefficients C^α_x.
class AltVector {
 public:
  using Terms = FormalSum::Terms;

  AltVector() = default;
  explicit AltVector(IndexSet index_set) : sum_(std::move(index_set)) {}
  /// Throws std::invalid_argument if some key is not alternating.
  static AltVector from(FormalSum s);
  /// The basis vector α (α must be alternating).
  static AltVector basis(const BlockPerm& alpha);

  const IndexSet& index_set() const { return sum_.index_set(); }
  const Terms& terms() const { return sum_.terms(); }
  bool is_zero() const { return sum_.is_zero(); }
  std::size_t size() const { return sum_.size(); }
  Rational coefficient(const BlockPerm& alpha) const { return sum_.coefficient(alpha); }
  const FormalSum& as_formal_sum() const { return sum_; }

  void add(const BlockPerm& alpha, const Rational& c);
  AltVector& operator+=(const AltVector& o);
  AltVector& operator*=(const Rational& c);
  friend AltVector operator+(AltVector a, const AltVector& b) { return a += b; }
  friend AltVector operator*(const Rational& c, AltVector a) { return a *= c; }

  bool operator==(const AltVector&) const = default;

 private:
  FormalSum sum_;
};

std::string to_string(const FormalSum& s);
inline std::string to_string(const AltVector& v) { return to_string(v.as_formal_sum()); }

/// Which violating junction reduce() straightens first.
enum class RewriteStrategy { kRightmost, kLeftmost };

/// The five-term straightening at 0-based junction j (between blocks j and
/// j+1). With a<b<c<d the entries of those blocks, (ab/cd) is replaced by
/// (ac/bd) − (ad/bc) − (bc/ad) + (bd/ac) − (cd/ab), spliced into x.
/// Requires blocks j, j+1 ascending and x_{2j+1} < x_{2j+2} (0-based
/// positions); throws std::invalid_argument otherwise.
FormalSum garnir_expand(const BlockPerm& x, std::size_t junction);

/// Normal form of s in ℚ⟨Perm_I⟩/M_I.
AltVector reduce(const FormalSum& s, RewriteStrategy strategy = RewriteStrategy::kRightmost);
inline AltVector reduce(const BlockPerm& x, RewriteStrategy strategy = RewriteStrategy::kRightmost) {
  return reduce(FormalSum::of(x), strategy);
}

/// C^α_x read off reduce(x). Throws std::invalid_argument if alpha is not
/// alternating or the index sets differ.
Rational coeff_via_rewrite(const BlockPerm& alpha, const BlockPerm& x);

/// Generators of M_I.
/// Block-swap family: x + (x with block b reversed), for 0 ≤ b < k.
FormalSum swap_relation(const BlockPerm& x, std::size_t block);
/// Six-term family at 0-based junction j (any x, no ordering assumed):
/// (pq/rs) − (pr/qs) + (ps/qr) + (qr/ps) − (qs/pr) + (rs/pq).
FormalSum garnir_relation(const BlockPerm& x, std::size_t junction);

/// Memoized normal forms over one index set, filled by recursion down the
/// ≺ order. Not thread-safe; intended as per-query local state.
class ReductionTable {
 public:
  explicit ReductionTable(IndexSet index_set) : index_set_(std::move(index_set)) {}

  /// Normal form of x; x must be a permutation of index_set().
  const AltVector& of(const BlockPerm& x);
  const IndexSet& index_set() const { return index_set_; }
  std::size_t cached() const { return table_.size(); }

 private:
  const AltVector& of_ascending(const BlockPerm& x);

  IndexSet index_set_;
  std::map<BlockPerm, AltVector> table_;
};

}  // namespace permring
