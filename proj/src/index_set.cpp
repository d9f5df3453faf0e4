#include "permring/index_set.hpp"

#include <charconv>
#include <stdexcept>

namespace permring {

VertexSet VertexSet::of(std::span<const Label> labels) {
  Mask m = 0;
  for (Label x : labels) {
    if (x < 1 || x > kMaxLabel) throw std::invalid_argument("label out of range: " + std::to_string(x));
    m |= bit(x);
  }
  return VertexSet(m);
}

std::vector<Label> VertexSet::labels() const {
  std::vector<Label> out;
  for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (Label x : labels()) {
    if (!first) s += ',';
    s += std::to_string(x);
    first = false;
  }
  return s + "}";
}

IndexSet::IndexSet(std::vector<Label> elements) : elements_(std::move(elements)) {
  if (elements_.size() % 2 != 0)
    throw std::invalid_argument("index set must have even cardinality, got " + std::to_string(elements_.size()));
  Label prev = 0;
  for (Label x : elements_) {
    if (x < 1 || x > kMaxLabel) throw std::invalid_argument("index set label out of range: " + std::to_string(x));
    if (x <= prev) throw std::invalid_argument("index set must be strictly ascending");
    prev = x;
    mask_ |= bit(x);
  }
}

IndexSet IndexSet::within(std::vector<Label> elements, int n) {
  IndexSet s(std::move(elements));
  if (!s.fits(n))
    throw std::invalid_argument("index set " + s.to_string() + " is not contained in [" + std::to_string(n + 1) + "]");
  return s;
}

IndexSet IndexSet::from_mask(Mask m) { return IndexSet(VertexSet(m).labels()); }

bool IndexSet::fits(int n) const { return n >= 1 && max_label() <= n + 1; }

std::string IndexSet::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(elements_[i]);
  }
  return s;
}

IndexSet parse_index_set(std::string_view text) {
  std::vector<Label> out;
  if (text.empty()) return IndexSet{};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    Label v{};
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size())
      throw std::invalid_argument("malformed index set: '" + std::string(text) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return IndexSet(std::move(out));
}

std::vector<IndexSet> even_subsets(int n, int k) {
  std::vector<IndexSet> out;
  const int m = n + 1;
  if (2 * k > m || k < 0) return out;
  // Masks over bits 1..m, enumerated in lexicographic order of the element lists.
  std::vector<Label> cur;
  auto rec = [&](auto&& self, Label next) -> void {
    if (static_cast<int>(cur.size()) == 2 * k) {
      out.emplace_back(cur);
      return;
    }
    for (Label x = next; x <= m; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace permring
