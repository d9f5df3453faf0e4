#include "permring/block_perm.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace permring {

namespace {

Mask entries_mask(std::span<const Label> entries) {
  if (entries.size() % 2 != 0)
    throw std::invalid_argument("block permutation must have even length, got " + std::to_string(entries.size()));
  Mask m = 0;
  for (Label x : entries) {
    if (x < 1 || x > kMaxLabel) throw std::invalid_argument("label out of range: " + std::to_string(x));
    if (m & bit(x)) throw std::invalid_argument("duplicate entry " + std::to_string(x) + " in block permutation");
    m |= bit(x);
  }
  return m;
}

}  // namespace

BlockPerm::BlockPerm(const IndexSet& index_set, std::vector<Label> entries) : entries_(std::move(entries)) {
  mask_ = entries_mask(entries_);
  if (mask_ != index_set.mask())
    throw std::invalid_argument("entries do not match the index set {" + index_set.to_string() + "}");
}

BlockPerm BlockPerm::from_entries(std::vector<Label> entries) {
  BlockPerm x;
  x.mask_ = entries_mask(entries);
  x.entries_ = std::move(entries);
  return x;
}

BlockPerm BlockPerm::swapped(std::size_t p, std::size_t q) const {
  BlockPerm y = *this;
  std::swap(y.entries_.at(p), y.entries_.at(q));
  return y;
}

std::string to_string(const BlockPerm& x) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += (i % 2 == 0) ? '/' : ',';
    s += std::to_string(x[i]);
  }
  return s;
}

BlockPerm parse_block_perm(std::string_view text) {
  std::vector<Label> entries;
  if (text.empty()) return BlockPerm{};
  std::size_t pos = 0;
  int in_block = 0;
  while (true) {
    auto next = text.find_first_of(",/", pos);
    auto tok = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    Label v{};
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size())
      throw std::invalid_argument("malformed permutation: '" + std::string(text) + "'");
    entries.push_back(v);
    ++in_block;
    if (next == std::string_view::npos) break;
    char sep = text[next];
    if ((sep == ',') != (in_block == 1))
      throw std::invalid_argument("permutation blocks must have exactly two entries: '" + std::string(text) + "'");
    if (sep == '/') in_block = 0;
    pos = next + 1;
  }
  if (in_block != 2)
    throw std::invalid_argument("permutation blocks must have exactly two entries: '" + std::string(text) + "'");
  return BlockPerm::from_entries(std::move(entries));
}

bool is_alternating(const BlockPerm& x) {
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    bool up = (i % 2 == 0);
    if (up ? !(x[i] < x[i + 1]) : !(x[i] > x[i + 1])) return false;
  }
  return true;
}

bool is_block_ascending(const BlockPerm& x) {
  for (std::size_t b = 0; b < x.blocks(); ++b)
    if (x[2 * b] > x[2 * b + 1]) return false;
  return true;
}

bool junction_violated(const BlockPerm& x, std::size_t junction) {
  return x[2 * junction + 1] < x[2 * junction + 2];
}

std::vector<int> prec_key(const BlockPerm& x) {
  std::vector<int> key(x.blocks());
  for (std::size_t b = 0; b < x.blocks(); ++b) key[x.blocks() - 1 - b] = x[2 * b] + x[2 * b + 1];
  return key;
}

bool prec_less(const BlockPerm& x, const BlockPerm& y) {
  if (!x.same_set(y)) throw std::invalid_argument("prec_less: permutations on different index sets");
  for (std::size_t b = x.blocks(); b-- > 0;) {
    int sx = x[2 * b] + x[2 * b + 1];
    int sy = y[2 * b] + y[2 * b + 1];
    if (sx != sy) return sx < sy;
  }
  return false;
}

bool CanonicalOrder::operator()(const BlockPerm& a, const BlockPerm& b) const {
  auto ka = prec_key(a), kb = prec_key(b);
  if (ka != kb) return ka > kb;
  return a < b;
}

std::vector<BlockPerm> alt_basis(const IndexSet& index_set) {
  std::vector<BlockPerm> out;
  auto labels = index_set.elements();
  const std::size_t m = labels.size();
  std::vector<Label> cur;
  cur.reserve(m);
  std::vector<bool> used(m, false);
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == m) {
      out.push_back(BlockPerm::from_entries(cur));
      return;
    }
    const std::size_t pos = cur.size();
    for (std::size_t i = 0; i < m; ++i) {
      if (used[i]) continue;
      Label v = labels[i];
      if (pos > 0) {
        bool up = ((pos - 1) % 2 == 0);
        if (up ? !(cur.back() < v) : !(cur.back() > v)) continue;
      }
      used[i] = true;
      cur.push_back(v);
      self(self);
      cur.pop_back();
      used[i] = false;
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end(), CanonicalOrder{});
  return out;
}

Integer euler_zigzag(int m) {
  if (m < 0 || m % 2 != 0) throw std::invalid_argument("euler_zigzag expects an even nonnegative argument");
  // Row r of the Seidel–Entringer triangle: E(r,0) = 0 for r > 0,
  // E(r,j) = E(r,j-1) + E(r-1,r-j); a_r = E(r,r).
  std::vector<Integer> prev{1};
  for (int r = 1; r <= m; ++r) {
    std::vector<Integer> row(r + 1);
    row[0] = 0;
    for (int j = 1; j <= r; ++j) row[j] = row[j - 1] + prev[r - j];
    prev = std::move(row);
  }
  return prev.back();
}

VertexSet set_of(const BlockPerm& x, std::size_t i) {
  if (i < 1 || i > x.size())
    throw std::out_of_range("set_of: index " + std::to_string(i) + " outside 1.." + std::to_string(x.size()));
  Mask m = bit(x[i - 1]);
  if (i >= 3) {
    const std::size_t prefix = 2 * ((i - 1) / 2);
    for (std::size_t p = 0; p < prefix; ++p) m |= bit(x[p]);
  }
  return VertexSet(m);
}

std::pair<BlockPerm, int> block_normalize(const BlockPerm& x) {
  std::vector<Label> e(x.entries().begin(), x.entries().end());
  int sign = 1;
  for (std::size_t b = 0; b < x.blocks(); ++b) {
    if (e[2 * b] > e[2 * b + 1]) {
      std::swap(e[2 * b], e[2 * b + 1]);
      sign = -sign;
    }
  }
  return {BlockPerm::from_entries(std::move(e)), sign};
}

BlockPerm relabel(const BlockPerm& x, std::span<const Label> w) {
  std::vector<Label> e;
  e.reserve(x.size());
  for (Label v : x.entries()) {
    if (v < 1 || static_cast<std::size_t>(v) > w.size())
      throw std::invalid_argument("relabel: entry " + std::to_string(v) + " outside the permutation's domain");
    e.push_back(w[v - 1]);
  }
  return BlockPerm::from_entries(std::move(e));
}

BlockPerm restrict_perm(const BlockPerm& x, Mask j) {
  std::vector<Label> e;
  for (Label v : x.entries())
    if (j & bit(v)) e.push_back(v);
  return BlockPerm::from_entries(std::move(e));
}

}  // namespace permring
