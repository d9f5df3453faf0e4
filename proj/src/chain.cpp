#include "permring/chain.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace permring {

int dimension(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

bool is_strict_chain(const Simplex& s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (!(s[i].subset_of(s[i + 1]) && s[i] != s[i + 1])) return false;
  return true;
}

std::string to_string(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += s[i].to_string();
  }
  return out + "}";
}

OrientedSimplex orient(std::vector<VertexSet> vertices) {
  std::vector<std::size_t> order(vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return vertices[a].size() < vertices[b].size(); });
  int sign = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (order[i] > order[j]) sign = -sign;
  OrientedSimplex out;
  out.sign = sign;
  out.vertices.reserve(vertices.size());
  for (auto i : order) out.vertices.push_back(vertices[i]);
  if (!is_strict_chain(out.vertices)) throw std::invalid_argument("vertices do not form a strict inclusion chain");
  return out;
}

void Chain::add(const Simplex& s, const Rational& c) {
  Rational v = c;
  v.canonicalize();  // callers may hand in an unreduced mpq
  if (v == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

Chain& Chain::operator+=(const Chain& o) {
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

Chain& Chain::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, v] : terms_) v *= c;
  return *this;
}

Rational Chain::coefficient(const Simplex& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string to_string(const Chain& c) {
  if (c.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, q] : c.terms()) {
    if (!first) out += ' ';
    out += (q < 0 ? "- " : (first ? "" : "+ "));
    Rational a = abs(q);
    if (a != 1) out += to_string(a) + "*";
    out += to_string(s);
    first = false;
  }
  return out;
}

Chain boundary(const Chain& c) {
  Chain out;
  for (const auto& [s, q] : c.terms()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face;
      face.reserve(s.size() - 1);
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) face.push_back(s[j]);
      out.add(face, (i % 2 == 0) ? q : Rational(-q));
    }
  }
  return out;
}

OrientedSimplex phi(const BlockPerm& x) {
  if (x.empty()) throw std::invalid_argument("phi: empty permutation has no simplex");
  OrientedSimplex s;
  for (std::size_t i = 1; i <= x.size(); i += 2) s.vertices.push_back(set_of(x, i));
  return s;
}

Chain delta_chain(const BlockPerm& x) {
  Chain out;
  const std::size_t k = x.blocks();
  // Bit b of `choice` picks Set_{2b+2} (sign -1) over Set_{2b+1} (sign +1).
  for (Mask choice = 0; choice < (Mask{1} << k); ++choice) {
    Simplex s;
    s.reserve(k);
    int sign = 1;
    for (std::size_t b = 0; b < k; ++b) {
      bool second = (choice >> b) & 1;
      s.push_back(set_of(x, 2 * b + (second ? 2 : 1)));
      if (second) sign = -sign;
    }
    out.add(s, sign);
  }
  return out;
}

}  // namespace permring
