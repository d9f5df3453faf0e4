#include "permring/rewrite.hpp"

#include <array>
#include <stdexcept>

namespace permring {

FormalSum FormalSum::of(const BlockPerm& x, const Rational& c) {
  FormalSum s(x.index_set());
  s.add(x, c);
  return s;
}

Rational FormalSum::coefficient(const BlockPerm& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FormalSum::add(const BlockPerm& x, const Rational& c) {
  if (x.mask() != index_set_.mask())
    throw std::invalid_argument("permutation " + to_string(x) + " is not on the index set {" + index_set_.to_string() + "}");
  Rational v = c;
  v.canonicalize();  // callers may hand in an unreduced mpq
  if (v == 0) return;
  auto [it, inserted] = terms_.try_emplace(x, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalSum& FormalSum::operator+=(const FormalSum& o) {
  if (o.index_set_ != index_set_) throw std::invalid_argument("adding formal sums on different index sets");
  for (const auto& [x, c] : o.terms_) add(x, c);
  return *this;
}

FormalSum& FormalSum::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [x, v] : terms_) v *= c;
  return *this;
}

AltVector AltVector::from(FormalSum s) {
  for (const auto& [x, c] : s.terms())
    if (!is_alternating(x)) throw std::invalid_argument("AltVector key " + to_string(x) + " is not alternating");
  AltVector v;
  v.sum_ = std::move(s);
  return v;
}

AltVector AltVector::basis(const BlockPerm& alpha) { return from(FormalSum::of(alpha)); }

void AltVector::add(const BlockPerm& alpha, const Rational& c) {
  if (!is_alternating(alpha)) throw std::invalid_argument("AltVector key " + to_string(alpha) + " is not alternating");
  sum_.add(alpha, c);
}

AltVector& AltVector::operator+=(const AltVector& o) {
  sum_ += o.sum_;
  return *this;
}

AltVector& AltVector::operator*=(const Rational& c) {
  sum_ *= c;
  return *this;
}

std::string to_string(const FormalSum& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [x, q] : s.terms()) {
    if (!first) out += ' ';
    out += (q < 0 ? "- " : (first ? "" : "+ "));
    Rational a = abs(q);
    if (a != 1) out += to_string(a) + "*";
    out += "(" + to_string(x) + ")";
    first = false;
  }
  return out;
}

namespace {

std::vector<Label> entries_of(const BlockPerm& x) { return {x.entries().begin(), x.entries().end()}; }

BlockPerm splice(const BlockPerm& x, std::size_t junction, const std::array<Label, 4>& local) {
  auto e = entries_of(x);
  for (std::size_t t = 0; t < 4; ++t) e[2 * junction + t] = local[t];
  return BlockPerm::from_entries(std::move(e));
}

void check_junction(const BlockPerm& x, std::size_t junction) {
  if (x.blocks() < 2 || junction + 1 >= x.blocks())
    throw std::invalid_argument("junction " + std::to_string(junction) + " out of range for " + to_string(x));
}

// The ≺ key is the block-sum vector read from the last block; storing it
// alongside the permutation keeps the work list ordered by ≺.
using WorkKey = std::pair<std::vector<int>, BlockPerm>;

}  // namespace

FormalSum garnir_expand(const BlockPerm& x, std::size_t junction) {
  check_junction(x, junction);
  const std::size_t p = 2 * junction;
  const Label a = x[p], b = x[p + 1], c = x[p + 2], d = x[p + 3];
  if (!(a < b && c < d && b < c))
    throw std::invalid_argument("garnir_expand: junction " + std::to_string(junction) + " of " + to_string(x) +
                                " is not an ascending violation");
  FormalSum out(x.index_set());
  out.add(splice(x, junction, {a, c, b, d}), 1);
  out.add(splice(x, junction, {a, d, b, c}), -1);
  out.add(splice(x, junction, {b, c, a, d}), -1);
  out.add(splice(x, junction, {b, d, a, c}), 1);
  out.add(splice(x, junction, {c, d, a, b}), -1);
  return out;
}

AltVector reduce(const FormalSum& s, RewriteStrategy strategy) {
  std::map<WorkKey, Rational> work;
  auto push = [&work](const BlockPerm& x, const Rational& c) {
    auto [y, sign] = block_normalize(x);
    WorkKey key{prec_key(y), std::move(y)};
    auto [it, inserted] = work.try_emplace(std::move(key), c * sign);
    if (!inserted) {
      it->second += c * sign;
      if (it->second == 0) work.erase(it);
    }
  };
  for (const auto& [x, c] : s.terms()) push(x, c);

  AltVector out(s.index_set());
  // Every expansion produces strictly ≺-smaller terms, so once the ≺-largest
  // term is popped it has received all of its contributions.
  while (!work.empty()) {
    auto node = work.extract(std::prev(work.end()));
    const BlockPerm& x = node.key().second;
    const Rational& c = node.mapped();
    std::optional<std::size_t> junction;
    const std::size_t k = x.blocks();
    for (std::size_t t = 0; t + 1 < k; ++t) {
      std::size_t j = strategy == RewriteStrategy::kRightmost ? k - 2 - t : t;
      if (junction_violated(x, j)) {
        junction = j;
        break;
      }
    }
    if (!junction) {
      out.add(x, c);
      continue;
    }
    const auto expansion = garnir_expand(x, *junction);
    for (const auto& [y, d] : expansion.terms()) push(y, c * d);
  }
  return out;
}

Rational coeff_via_rewrite(const BlockPerm& alpha, const BlockPerm& x) {
  if (!is_alternating(alpha)) throw std::invalid_argument("coeff_via_rewrite: " + to_string(alpha) + " is not alternating");
  if (!alpha.same_set(x)) throw std::invalid_argument("coeff_via_rewrite: index sets differ");
  return reduce(x).coefficient(alpha);
}

FormalSum swap_relation(const BlockPerm& x, std::size_t block) {
  if (block >= x.blocks()) throw std::invalid_argument("swap_relation: block out of range");
  FormalSum out(x.index_set());
  out.add(x, 1);
  out.add(x.swapped(2 * block, 2 * block + 1), 1);
  return out;
}

FormalSum garnir_relation(const BlockPerm& x, std::size_t junction) {
  check_junction(x, junction);
  const std::size_t p = 2 * junction;
  const Label a = x[p], b = x[p + 1], c = x[p + 2], d = x[p + 3];
  FormalSum out(x.index_set());
  out.add(x, 1);
  out.add(splice(x, junction, {a, c, b, d}), -1);
  out.add(splice(x, junction, {a, d, b, c}), 1);
  out.add(splice(x, junction, {b, c, a, d}), 1);
  out.add(splice(x, junction, {b, d, a, c}), -1);
  out.add(splice(x, junction, {c, d, a, b}), 1);
  return out;
}

const AltVector& ReductionTable::of(const BlockPerm& x) {
  if (auto it = table_.find(x); it != table_.end()) return it->second;
  if (x.mask() != index_set_.mask())
    throw std::invalid_argument("ReductionTable: " + to_string(x) + " is not on {" + index_set_.to_string() + "}");
  auto [y, sign] = block_normalize(x);
  if (sign == 1) return of_ascending(y);
  AltVector v = of_ascending(y);
  v *= -1;
  return table_.emplace(x, std::move(v)).first->second;
}

const AltVector& ReductionTable::of_ascending(const BlockPerm& x) {
  if (auto it = table_.find(x); it != table_.end()) return it->second;
  AltVector v(index_set_);
  std::optional<std::size_t> junction;
  for (std::size_t t = x.blocks(); t-- > 1;) {
    if (junction_violated(x, t - 1)) {
      junction = t - 1;
      break;
    }
  }
  if (!junction) {
    v.add(x, 1);
  } else {
    const auto expansion = garnir_expand(x, *junction);
    for (const auto& [y, d] : expansion.terms()) {
      AltVector part = of_ascending(y);
      part *= d;
      v += part;
    }
  }
  return table_.emplace(x, std::move(v)).first->second;
}

}  // namespace permring
