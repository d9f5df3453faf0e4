#pragma once

#include "permring/block_perm.hpp"
#include "permring/index_set.hpp"
#include "permring/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace permring {

/// A simplex of the Coxeter complex: a strict inclusion chain of vertex
/// sets listed by increasing cardinality. The empty chain is the (-1)-simplex
/// used for augmentation.
using Simplex = std::vector<VertexSet>;

int dimension(const Simplex& s);
bool is_strict_chain(const Simplex& s);
std::string to_string(const Simplex& s);

struct OrientedSimplex {
  Simplex vertices;
  int sign = 1;
};

/// Sorts `vertices` into inclusion order, folding the sign of the sorting
/// permutation into the result. Throws std::invalid_argument if the vertices
/// are not pairwise strictly nested.
OrientedSimplex orient(std::vector<VertexSet> vertices);

/// Finite formal sum of simplices with exact coefficients. Zero coefficients
/// are never stored.
class Chain {
 public:
  using Terms = std::map<Simplex, Rational>;

  void add(const Simplex& s, const Rational& c);
  void add(const OrientedSimplex& s, const Rational& c = 1) { add(s.vertices, c * s.sign); }
  Chain& operator+=(const Chain& o);
  Chain& operator*=(const Rational& c);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) {
    Chain nb = b;
    nb *= -1;
    return a += nb;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Simplex& s) const;
  std::size_t size() const { return terms_.size(); }

  bool operator==(const Chain&) const = default;

 private:
  Terms terms_;
};

std::string to_string(const Chain& c);

/// Augmented simplicial boundary: ∂[v0..vd] = Σ (-1)^i [v0..v̂i..vd]; the
/// boundary of a vertex is the empty simplex.
Chain boundary(const Chain& c);

/// φ(x) = {Set^x_1 ⊂ Set^x_3 ⊂ ... ⊂ Set^x_{2k-1}}. Throws
/// std::invalid_argument for the empty permutation.
OrientedSimplex phi(const BlockPerm& x);

/// Δ_x as the signed expansion of ⊗_i (Set^x_{2i-1} − Set^x_{2i}), expanded
/// left to right. For the empty permutation this is the empty simplex with
/// coefficient 1.
Chain delta_chain(const BlockPerm& x);

}  // namespace permring
