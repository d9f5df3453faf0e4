#pragma once

#include "permring/block_perm.hpp"
#include "permring/rewrite.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <utility>
#include <vector>

namespace permring {

/// True iff every block of z lies wholly in I1 or wholly in I2. Throws
/// std::invalid_argument if I1, I2 meet or z is not on I1 ∪ I2.
bool is_restrictable(const BlockPerm& z, const IndexSet& i1, const IndexSet& i2);

/// ρ_J: the subsequence of z's entries in J, re-blocked. Throws if J is not
/// contained in z's index set.
BlockPerm restrict(const BlockPerm& z, const IndexSet& j);

/// Block shuffle σ with (z_σ(1) / … / z_σ(k+l)) = (ρ_I1(z) / ρ_I2(z)).
struct Rearrangement {
  std::vector<int> sigma;  // 1-based block indices
  bool odd = false;
  int sign() const { return odd ? -1 : 1; }
};

/// Throws std::invalid_argument if z is not restrictable.
Rearrangement rearrangement(const BlockPerm& z, const IndexSet& i1, const IndexSet& i2);
inline int rearrangement_sign(const BlockPerm& z, const IndexSet& i1, const IndexSet& i2) {
  return rearrangement(z, i1, i2).sign();
}

/// Everything cup needs for one grade pair: for each restrictable
/// alternating z, its sign and the normal forms of both restrictions.
struct CupTable {
  struct Entry {
    BlockPerm z;
    int sign;
    AltVector left;   // reduce(ρ_I1(z))
    AltVector right;  // reduce(ρ_I2(z))
  };
  IndexSet i1, i2;
  std::vector<Entry> entries;
};

/// Builds the table for disjoint I1, I2 (filtering Alt_{I1 ∪ I2}).
CupTable build_cup_table(const IndexSet& i1, const IndexSet& i2);

/// Process-wide cache of CupTables keyed by grade pair. Fills are
/// idempotent: concurrent misses may both compute, first insert wins.
class CupTableCache {
 public:
  std::shared_ptr<const CupTable> get(const IndexSet& i1, const IndexSet& i2);
  std::size_t size() const;
  void clear();
  static CupTableCache& global();

 private:
  mutable std::shared_mutex mu_;
  std::map<std::pair<IndexSet, IndexSet>, std::shared_ptr<const CupTable>> tables_;
};

/// a ⌣ b on I1 △ I2; zero when I1 ∩ I2 ≠ ∅.
AltVector cup(const AltVector& a, const AltVector& b);
inline AltVector cup(const BlockPerm& alpha, const BlockPerm& beta) {
  return cup(AltVector::basis(alpha), AltVector::basis(beta));
}

/// Element of ⊕_I ℚ⟨Perm_I⟩/M_I over ambient [n+1].
class GradedClass {
 public:
  explicit GradedClass(int n = 1);
  static GradedClass unit(int n);
  /// Single-component class. Throws if the grade does not fit [n+1].
  static GradedClass of(int n, const AltVector& v);

  int n() const { return n_; }
  const std::map<IndexSet, AltVector>& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }
  /// Component in grade I (zero vector if absent).
  AltVector component(const IndexSet& index_set) const;

  void add(const AltVector& v, const Rational& c = 1);
  GradedClass& operator+=(const GradedClass& o);
  GradedClass& operator*=(const Rational& c);
  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  bool operator==(const GradedClass&) const = default;

 private:
  int n_;
  std::map<IndexSet, AltVector> components_;
};

/// Bilinear extension of cup. Throws std::invalid_argument on mismatched n.
GradedClass ring_multiply(const GradedClass& u, const GradedClass& v);

/// Relabels by w (w[i-1] = w(i), a bijection of [n+1]) and re-reduces.
/// Throws std::invalid_argument if w is not a bijection of [n+1].
GradedClass weyl_act(std::span<const Label> w, const GradedClass& u);
AltVector weyl_act(std::span<const Label> w, const AltVector& v);

/// The action that matches the product. Cup structure constants are the
/// dual-basis pairing (α* ⌣ β*)(Δ_z), so ring elements behave as cochains
/// and w acts by (w·γ)(Δ_y) = γ(Δ_{w⁻¹y}). This is a ring automorphism;
/// the relabeling action above is only a module map and in general is not
/// multiplicative.
GradedClass weyl_act_dual(std::span<const Label> w, const GradedClass& u);
AltVector weyl_act_dual(std::span<const Label> w, const AltVector& v);

}  // namespace permring
