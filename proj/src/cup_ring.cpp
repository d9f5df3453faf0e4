#include "permring/cup_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace permring {

namespace {

void check_disjoint_union(const BlockPerm& z, const IndexSet& i1, const IndexSet& i2) {
  if (!i1.disjoint_from(i2)) throw std::invalid_argument("index sets {" + i1.to_string() + "} and {" + i2.to_string() + "} intersect");
  if (z.mask() != (i1.mask() | i2.mask()))
    throw std::invalid_argument(to_string(z) + " is not a permutation of I1 ∪ I2");
}

Rational dot(const AltVector& a, const AltVector& b) {
  Rational s = 0;
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  for (const auto& [alpha, c] : small.terms()) {
    Rational d = large.coefficient(alpha);
    if (d != 0) s += c * d;
  }
  return s;
}

}  // namespace

bool is_restrictable(const BlockPerm& z, const IndexSet& i1, const IndexSet& i2) {
  check_disjoint_union(z, i1, i2);
  for (std::size_t b = 0; b < z.blocks(); ++b) {
    const Mask m = bit(z[2 * b]) | bit(z[2 * b + 1]);
    if ((m & i1.mask()) != m && (m & i2.mask()) != m) return false;
  }
  return true;
}

BlockPerm restrict(const BlockPerm& z, const IndexSet& j) {
  if ((j.mask() & ~z.mask()) != 0)
    throw std::invalid_argument("restrict: {" + j.to_string() + "} is not inside the index set of " + to_string(z));
  return restrict_perm(z, j.mask());
}

Rearrangement rearrangement(const BlockPerm& z, const IndexSet& i1, const IndexSet& i2) {
  if (!is_restrictable(z, i1, i2)) throw std::invalid_argument(to_string(z) + " is not restrictable");
  Rearrangement r;
  std::vector<int> second;
  for (std::size_t b = 0; b < z.blocks(); ++b)
    (i1.contains(z[2 * b]) ? r.sigma : second).push_back(static_cast<int>(b) + 1);
  // Inversions of the shuffle: pairs (I1 block after I2 block).
  long inversions = 0;
  for (int a : r.sigma)
    for (int b : second)
      if (a > b) ++inversions;
  r.sigma.insert(r.sigma.end(), second.begin(), second.end());
  r.odd = inversions % 2 == 1;
  return r;
}

CupTable build_cup_table(const IndexSet& i1, const IndexSet& i2) {
  if (!i1.disjoint_from(i2)) throw std::invalid_argument("build_cup_table: index sets intersect");
  CupTable t{i1, i2, {}};
  ReductionTable left(i1), right(i2);
  for (const auto& z : alt_basis(i1.symmetric_difference(i2))) {
    if (!is_restrictable(z, i1, i2)) continue;
    t.entries.push_back({z, rearrangement_sign(z, i1, i2), left.of(restrict(z, i1)), right.of(restrict(z, i2))});
  }
  return t;
}

std::shared_ptr<const CupTable> CupTableCache::get(const IndexSet& i1, const IndexSet& i2) {
  const auto key = std::make_pair(i1, i2);
  {
    std::shared_lock lock(mu_);
    auto it = tables_.find(key);
    if (it != tables_.end()) return it->second;
  }
  auto fresh = std::make_shared<const CupTable>(build_cup_table(i1, i2));
  std::unique_lock lock(mu_);
  return tables_.try_emplace(key, std::move(fresh)).first->second;
}

std::size_t CupTableCache::size() const {
  std::shared_lock lock(mu_);
  return tables_.size();
}

void CupTableCache::clear() {
  std::unique_lock lock(mu_);
  tables_.clear();
}

CupTableCache& CupTableCache::global() {
  static CupTableCache cache;
  return cache;
}

AltVector cup(const AltVector& a, const AltVector& b) {
  const IndexSet& i1 = a.index_set();
  const IndexSet& i2 = b.index_set();
  AltVector out(i1.symmetric_difference(i2));
  if (!i1.disjoint_from(i2) || a.is_zero() || b.is_zero()) return out;
  auto table = CupTableCache::global().get(i1, i2);
  for (const auto& e : table->entries) {
    Rational c = dot(a, e.left);
    if (c == 0) continue;
    c *= dot(b, e.right);
    if (c != 0) out.add(e.z, c * e.sign);
  }
  return out;
}

GradedClass::GradedClass(int n) : n_(n) {
  if (n < 1 || n + 1 > kMaxLabel) throw std::invalid_argument("ambient rank out of range");
}

GradedClass GradedClass::unit(int n) {
  GradedClass u(n);
  u.add(AltVector::basis(BlockPerm{}));
  return u;
}

GradedClass GradedClass::of(int n, const AltVector& v) {
  GradedClass u(n);
  u.add(v);
  return u;
}

AltVector GradedClass::component(const IndexSet& index_set) const {
  auto it = components_.find(index_set);
  return it == components_.end() ? AltVector(index_set) : it->second;
}

void GradedClass::add(const AltVector& v, const Rational& c) {
  if (!v.index_set().fits(n_))
    throw std::invalid_argument("grade {" + v.index_set().to_string() + "} does not fit [" + std::to_string(n_ + 1) + "]");
  if (v.is_zero() || c == 0) return;
  auto [it, inserted] = components_.try_emplace(v.index_set(), v.index_set());
  AltVector scaled = v;
  scaled *= c;
  it->second += scaled;
  if (it->second.is_zero()) components_.erase(it);
}

GradedClass& GradedClass::operator+=(const GradedClass& o) {
  if (o.n_ != n_) throw std::invalid_argument("ambient rank mismatch");
  for (const auto& [_, v] : o.components_) add(v);
  return *this;
}

GradedClass& GradedClass::operator*=(const Rational& c) {
  if (c == 0) {
    components_.clear();
    return *this;
  }
  for (auto& [_, v] : components_) v *= c;
  return *this;
}

GradedClass ring_multiply(const GradedClass& u, const GradedClass& v) {
  if (u.n() != v.n()) throw std::invalid_argument("ring_multiply: ambient rank mismatch");
  GradedClass out(u.n());
  for (const auto& [i1, a] : u.components())
    for (const auto& [i2, b] : v.components())
      if (i1.disjoint_from(i2)) out.add(cup(a, b));
  return out;
}

namespace {

void check_bijection(std::span<const Label> w, int n) {
  if (static_cast<int>(w.size()) != n + 1)
    throw std::invalid_argument("weyl_act: expected a permutation of [" + std::to_string(n + 1) + "]");
  Mask seen = 0;
  for (Label v : w) {
    if (v < 1 || v > n + 1 || (seen & bit(v))) throw std::invalid_argument("weyl_act: not a bijection");
    seen |= bit(v);
  }
}

IndexSet image(std::span<const Label> w, const IndexSet& s) {
  Mask m = 0;
  for (Label v : s.elements()) m |= bit(w[v - 1]);
  return IndexSet::from_mask(m);
}

}  // namespace

AltVector weyl_act(std::span<const Label> w, const AltVector& v) {
  FormalSum moved(image(w, v.index_set()));
  for (const auto& [alpha, c] : v.terms()) moved.add(relabel(alpha, w), c);
  return reduce(moved);
}

GradedClass weyl_act(std::span<const Label> w, const GradedClass& u) {
  check_bijection(w, u.n());
  GradedClass out(u.n());
  for (const auto& [_, v] : u.components()) out.add(weyl_act(w, v));
  return out;
}

AltVector weyl_act_dual(std::span<const Label> w, const AltVector& v) {
  std::vector<Label> inverse(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) inverse.at(w[i] - 1) = static_cast<Label>(i + 1);
  const IndexSet target = image(w, v.index_set());
  ReductionTable table(v.index_set());
  AltVector out(target);
  for (const auto& y : alt_basis(target)) {
    const Rational c = dot(v, table.of(relabel(y, inverse)));
    if (c != 0) out.add(y, c);
  }
  return out;
}

GradedClass weyl_act_dual(std::span<const Label> w, const GradedClass& u) {
  check_bijection(w, u.n());
  GradedClass out(u.n());
  for (const auto& [_, v] : u.components()) out.add(weyl_act_dual(w, v));
  return out;
}

}  // namespace permring
