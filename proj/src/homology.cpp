#include "permring/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace permring {

SimplicialComplex SimplicialComplex::flag_of(std::vector<VertexSet> vertices) {
  std::sort(vertices.begin(), vertices.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a.mask() < b.mask();
  });
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  SimplicialComplex c;
  c.vertices_ = vertices;
  c.simplices_.push_back({Simplex{}});
  // Strict supersets of each vertex, for the DFS over inclusion chains.
  std::vector<std::vector<std::size_t>> up(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = 0; j < vertices.size(); ++j)
      if (vertices[i].size() < vertices[j].size() && vertices[i].subset_of(vertices[j])) up[i].push_back(j);
  Simplex cur;
  auto dfs = [&](auto&& self, std::size_t v) -> void {
    cur.push_back(vertices[v]);
    if (c.simplices_.size() <= cur.size()) c.simplices_.resize(cur.size() + 1);
    c.simplices_[cur.size()].push_back(cur);
    for (std::size_t w : up[v]) self(self, w);
    cur.pop_back();
  };
  for (std::size_t v = 0; v < vertices.size(); ++v) dfs(dfs, v);
  c.index_.resize(c.simplices_.size());
  for (std::size_t d = 0; d < c.simplices_.size(); ++d) {
    std::sort(c.simplices_[d].begin(), c.simplices_[d].end());
    for (std::size_t i = 0; i < c.simplices_[d].size(); ++i) c.index_[d].emplace(c.simplices_[d][i], i);
  }
  return c;
}

std::size_t SimplicialComplex::count(int d) const {
  if (d < -1 || d + 1 >= static_cast<int>(simplices_.size())) return 0;
  return simplices_[d + 1].size();
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
  static const std::vector<Simplex> none;
  if (d < -1 || d + 1 >= static_cast<int>(simplices_.size())) return none;
  return simplices_[d + 1];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  const std::size_t slot = s.size();
  if (slot >= index_.size()) return std::nullopt;
  auto it = index_[slot].find(s);
  if (it == index_[slot].end()) return std::nullopt;
  return it->second;
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= dimension(); ++d) {
    for (const auto& s : simplices(d)) {
      bool maximal = true;
      for (const auto& v : vertices_) {
        bool comparable_to_all = std::find(s.begin(), s.end(), v) == s.end();
        if (!comparable_to_all) continue;
        for (const auto& w : s)
          if (!(v.subset_of(w) || w.subset_of(v))) comparable_to_all = false;
        if (comparable_to_all) {
          maximal = false;
          break;
        }
      }
      if (maximal) out.push_back(s);
    }
  }
  return out;
}

namespace {

bool odd(VertexSet s) { return s.size() % 2 == 1; }

std::vector<VertexSet> proper_subsets(int n) {
  std::vector<VertexSet> out;
  const Mask full = ((Mask{1} << (n + 1)) - 1) << 1;
  for (Mask m = 2; m < full; m += 2)
    if ((m & ~full) == 0) out.emplace_back(m);
  return out;
}

void check_rank(int n, const IndexSet& index_set) {
  if (n < 1) throw std::invalid_argument("ambient rank must be positive");
  if (!index_set.fits(n)) throw std::invalid_argument("index set {" + index_set.to_string() + "} not in [n+1]");
}

}  // namespace

SimplicialComplex build_coxeter(int n) {
  if (n < 1) throw std::invalid_argument("ambient rank must be positive");
  return SimplicialComplex::flag_of(proper_subsets(n));
}

SimplicialComplex build_induced(int n, const IndexSet& index_set) {
  check_rank(n, index_set);
  std::vector<VertexSet> vs;
  for (VertexSet j : proper_subsets(n))
    if (odd(j & index_set.as_vertex_set())) vs.push_back(j);
  return SimplicialComplex::flag_of(std::move(vs));
}

SimplicialComplex build_hat(int n, const IndexSet& index_set) {
  check_rank(n, index_set);
  std::vector<VertexSet> vs;
  for (VertexSet j : proper_subsets(n))
    if (j.subset_of(index_set.as_vertex_set()) && odd(j)) vs.push_back(j);
  return SimplicialComplex::flag_of(std::move(vs));
}

SparseVector ChainComplex::boundary_column(int d, std::size_t index) const {
  const Simplex& s = complex_->simplices(d).at(index);
  SparseVector col;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex face;
    face.reserve(s.size() - 1);
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i) face.push_back(s[j]);
    auto row = complex_->index_of(face);
    if (!row) throw std::logic_error("complex is not closed under faces");
    col[*row] += (i % 2 == 0) ? 1 : -1;
  }
  return col;
}

std::vector<SparseVector> ChainComplex::boundary_matrix(int d) const {
  std::vector<SparseVector> cols;
  const std::size_t m = complex_->count(d);
  cols.reserve(m);
  if (d < 0) return std::vector<SparseVector>(m);
  for (std::size_t i = 0; i < m; ++i) cols.push_back(boundary_column(d, i));
  return cols;
}

std::size_t ChainComplex::boundary_rank(int d) const {
  if (d <= -1) return 0;
  return rank_of(boundary_matrix(d));
}

bool ChainComplex::boundary_squared_zero() const {
  for (int d = 1; d <= complex_->dimension(); ++d) {
    auto outer = boundary_matrix(d - 1);
    for (std::size_t i = 0; i < complex_->count(d); ++i) {
      SparseVector acc;
      for (const auto& [row, c] : boundary_column(d, i))
        for (const auto& [row2, c2] : outer[row]) acc[row2] += c * c2;
      for (const auto& [row, c] : acc)
        if (c != 0) return false;
    }
  }
  return true;
}

SparseVector ChainComplex::coordinates(const Chain& c, int d) const {
  SparseVector v;
  for (const auto& [s, q] : c.terms()) {
    if (dimension(s) != d) throw std::invalid_argument("chain has a simplex of the wrong dimension");
    auto idx = complex_->index_of(s);
    if (!idx) throw std::invalid_argument("simplex " + to_string(s) + " is not in the complex");
    if (q.get_den() != 1) throw std::invalid_argument("chain coordinates must be integral");
    v.emplace(*idx, q.get_num());
  }
  return v;
}

std::size_t reduced_betti(const SimplicialComplex& complex, int d) {
  ChainComplex cc(complex);
  const std::size_t cells = complex.count(d);
  if (cells == 0) return 0;
  return cells - cc.boundary_rank(d) - cc.boundary_rank(d + 1);
}

std::vector<std::size_t> reduced_betti_numbers(const SimplicialComplex& complex) {
  ChainComplex cc(complex);
  const int top = complex.dimension();
  std::vector<std::size_t> ranks(top + 3, 0);  // ranks[d + 1] = rank ∂_d
  for (int d = 0; d <= top; ++d) ranks[d + 1] = cc.boundary_rank(d);
  std::vector<std::size_t> out;
  for (int d = -1; d <= top; ++d) out.push_back(complex.count(d) - ranks[d + 1] - ranks[d + 2]);
  return out;
}

AltHomologyBasis::AltHomologyBasis(const SimplicialComplex& complex, IndexSet index_set)
    : complex_(&complex), index_set_(std::move(index_set)), basis_(alt_basis(index_set_)) {
  const int top = index_set_.degree() - 1;
  ChainComplex cc(complex);
  for (const auto& alpha : basis_)
    if (!echelon_.add_column(cc.coordinates(delta_chain(alpha), top)))
      throw std::logic_error("Delta chains of alternating permutations are dependent");
  for (std::size_t i = 0; i < complex.count(top + 1); ++i) {
    echelon_.add_column(cc.boundary_column(top + 1, i));
  }
}

AltVector AltHomologyBasis::express(const Chain& c) const {
  const int top = index_set_.degree() - 1;
  ChainComplex cc(*complex_);
  auto coeffs = echelon_.express(cc.coordinates(c, top));
  if (!coeffs) throw std::logic_error("chain is not homologous to a combination of Delta chains");
  AltVector out(index_set_);
  for (std::size_t i = 0; i < basis_.size(); ++i) out.add(basis_[i], (*coeffs)[i]);
  return out;
}

AltVector express_in_alt_basis(const BlockPerm& x, const SimplicialComplex& complex) {
  return AltHomologyBasis(complex, x.index_set()).express(x);
}

std::optional<Simplex> homotopy_projection(const Simplex& s, const IndexSet& index_set) {
  Simplex out;
  out.reserve(s.size());
  for (VertexSet v : s) {
    VertexSet w = v & index_set.as_vertex_set();
    if (!out.empty() && out.back() == w) return std::nullopt;
    out.push_back(w);
  }
  return out;
}

Chain project_chain(const Chain& c, const IndexSet& index_set) {
  Chain out;
  for (const auto& [s, q] : c.terms())
    if (auto p = homotopy_projection(s, index_set)) out.add(*p, q);
  return out;
}

TensorChain join_pushforward(const BlockPerm& z, const IndexSet& i1, const IndexSet& i2) {
  if (!i1.disjoint_from(i2)) throw std::invalid_argument("join_pushforward: index sets intersect");
  if (z.mask() != (i1.mask() | i2.mask()))
    throw std::invalid_argument("join_pushforward: " + to_string(z) + " is not on I1 ∪ I2");
  TensorChain out;
  const auto delta = delta_chain(z);
  for (const auto& [s, q] : delta.terms()) {
    Simplex first, second;
    int sign = 1;
    for (VertexSet j : s) {
      VertexSet a = j & i1.as_vertex_set(), b = j & i2.as_vertex_set();
      if (odd(a) && !odd(b)) {
        // Moving this vertex past every I2-vertex already seen.
        if (second.size() % 2 == 1) sign = -sign;
        first.push_back(a);
      } else if (odd(b) && !odd(a)) {
        second.push_back(b);
      } else {
        throw std::invalid_argument("join_pushforward: vertex " + j.to_string() + " has no unique odd factor");
      }
    }
    if (!is_strict_chain(first) || !is_strict_chain(second)) continue;
    if (static_cast<int>(first.size()) != i1.degree() || static_cast<int>(second.size()) != i2.degree()) continue;
    auto key = std::make_pair(std::move(first), std::move(second));
    auto [it, inserted] = out.try_emplace(std::move(key), q * sign);
    if (!inserted) {
      it->second += q * sign;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

std::map<std::pair<BlockPerm, BlockPerm>, Rational> express_tensor(const TensorChain& t, const AltHomologyBasis& a,
                                                                   const AltHomologyBasis& b) {
  // Slice by the B-simplex, express each A-chain, then re-slice by α.
  std::map<Simplex, Chain> by_b;
  for (const auto& [key, q] : t) by_b[key.second].add(key.first, q);
  std::map<BlockPerm, Chain> by_alpha;
  for (const auto& [sb, chain_a] : by_b) {
    const auto coords_a = a.express(chain_a);
    for (const auto& [alpha, c] : coords_a.terms()) by_alpha[alpha].add(sb, c);
  }
  std::map<std::pair<BlockPerm, BlockPerm>, Rational> out;
  for (const auto& [alpha, chain_b] : by_alpha) {
    // Rational slices are scaled to integers for the integral solver.
    Integer den = 1;
    for (const auto& [s, q] : chain_b.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    Chain scaled = chain_b;
    scaled *= Rational(den);
    const auto coords_b = b.express(scaled);
    for (const auto& [beta, c] : coords_b.terms()) {
      Rational v = c / den;
      if (v != 0) out.emplace(std::make_pair(alpha, beta), v);
    }
  }
  return out;
}

const AltHomologyBasis& PairingOracle::basis_for(const IndexSet& index_set) {
  auto it = cache_.find(index_set);
  if (it == cache_.end()) {
    const int n = std::max<int>(1, index_set.max_label() - 1);
    auto complex = std::make_unique<SimplicialComplex>(build_hat(n, index_set));
    auto basis = std::make_unique<AltHomologyBasis>(*complex, index_set);
    it = cache_.emplace(index_set, std::make_pair(std::move(complex), std::move(basis))).first;
  }
  return *it->second.second;
}

std::map<std::pair<BlockPerm, BlockPerm>, Rational> PairingOracle::pushforward_coordinates(const BlockPerm& z,
                                                                                           const IndexSet& i1,
                                                                                           const IndexSet& i2) {
  return express_tensor(join_pushforward(z, i1, i2), basis_for(i1), basis_for(i2));
}

Rational PairingOracle::pairing(const BlockPerm& alpha, const BlockPerm& beta, const BlockPerm& z) {
  if (!is_alternating(alpha) || !is_alternating(beta))
    throw std::invalid_argument("pairing_check: alpha and beta must be alternating");
  auto coords = pushforward_coordinates(z, alpha.index_set(), beta.index_set());
  auto it = coords.find({alpha, beta});
  return it == coords.end() ? Rational(0) : it->second;
}

Rational pairing_check(const BlockPerm& alpha, const BlockPerm& beta, const BlockPerm& z) {
  PairingOracle oracle;
  return oracle.pairing(alpha, beta, z);
}

}  // namespace permring
