#include "permring/exact_linalg.hpp"

#include <stdexcept>

namespace permring {

namespace {

// v ← a·v − b·w
void combine(SparseVector& v, const Integer& a, const Integer& b, const SparseVector& w) {
  if (a != 1)
    for (auto& [r, x] : v) x *= a;
  for (const auto& [r, y] : w) {
    auto [it, inserted] = v.try_emplace(r, 0);
    it->second -= b * y;
    if (it->second == 0) v.erase(it);
  }
}

void accumulate_gcd(Integer& g, const SparseVector& v) {
  for (const auto& [r, x] : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
}

void divide(SparseVector& v, const Integer& g) {
  for (auto& [r, x] : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

bool EchelonBasis::add_column(const SparseVector& column) {
  const std::size_t index = columns_++;
  SparseVector cur = column;
  SparseVector combo;
  if (track_) combo.emplace(index, Integer(1));
  while (!cur.empty()) {
    const auto& [row, lead] = *cur.begin();
    auto it = pivots_.find(row);
    if (it == pivots_.end()) {
      Integer g = 0;
      accumulate_gcd(g, cur);
      accumulate_gcd(g, combo);
      if (g > 1) {
        divide(cur, g);
        divide(combo, g);
      }
      pivots_.emplace(row, Pivot{std::move(cur), std::move(combo)});
      return true;
    }
    const Pivot& p = it->second;
    Integer a = p.vec.begin()->second;
    Integer b = lead;
    Integer g = gcd(a, b);
    a /= g;
    b /= g;
    combine(cur, a, b, p.vec);
    combine(combo, a, b, p.combo);
    Integer content = 0;
    accumulate_gcd(content, cur);
    accumulate_gcd(content, combo);
    if (content > 1) {
      divide(cur, content);
      divide(combo, content);
    }
  }
  return false;
}

std::optional<std::vector<Rational>> EchelonBasis::express(const SparseVector& v) const {
  if (!track_) throw std::logic_error("EchelonBasis::express needs combination tracking");
  // Invariant: cur = scale·v − Σ acc[j]·column_j.
  SparseVector cur = v;
  SparseVector acc;
  Integer scale = 1;
  while (!cur.empty()) {
    const auto& [row, lead] = *cur.begin();
    auto it = pivots_.find(row);
    if (it == pivots_.end()) return std::nullopt;
    const Pivot& p = it->second;
    Integer a = p.vec.begin()->second;
    Integer b = lead;
    Integer g = gcd(a, b);
    a /= g;
    b /= g;
    combine(cur, a, b, p.vec);
    // acc ← a·acc + b·combo
    combine(acc, a, -b, p.combo);
    scale *= a;
    Integer content = scale;
    accumulate_gcd(content, cur);
    accumulate_gcd(content, acc);
    if (content < 0) content = -content;
    if (content > 1) {
      divide(cur, content);
      divide(acc, content);
      mpz_divexact(scale.get_mpz_t(), scale.get_mpz_t(), content.get_mpz_t());
    }
  }
  std::vector<Rational> out(columns_, Rational(0));
  for (const auto& [j, c] : acc) {
    out[j] = Rational(c, scale);
    out[j].canonicalize();
  }
  return out;
}

std::size_t rank_of(const std::vector<SparseVector>& columns) {
  EchelonBasis basis(false);
  for (const auto& c : columns) basis.add_column(c);
  return basis.rank();
}

}  // namespace permring
