#pragma once

#include "permring/block_perm.hpp"
#include "permring/chain.hpp"
#include "permring/exact_linalg.hpp"
#include "permring/rewrite.hpp"

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace permring {

/// Flag complex on a set of vertex sets: the simplices are all strict
/// inclusion chains among the vertices. Includes the empty (-1)-simplex.
class SimplicialComplex {
 public:
  static SimplicialComplex flag_of(std::vector<VertexSet> vertices);

  const std::vector<VertexSet>& vertices() const { return vertices_; }
  /// Top dimension; -1 for the empty complex.
  int dimension() const { return static_cast<int>(simplices_.size()) - 2; }
  std::size_t count(int d) const;
  /// Simplices of dimension d in a fixed deterministic order.
  const std::vector<Simplex>& simplices(int d) const;
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }
  /// Maximal simplices, in deterministic order.
  std::vector<Simplex> facets() const;

 private:
  std::vector<VertexSet> vertices_;
  std::vector<std::vector<Simplex>> simplices_;  // simplices_[d + 1]
  std::vector<std::map<Simplex, std::size_t>> index_;
};

/// K_{A_n}: all nonempty proper subsets of [n+1].
SimplicialComplex build_coxeter(int n);
/// (K_{A_n})_I: vertices J with |J ∩ I| odd.
SimplicialComplex build_induced(int n, const IndexSet& index_set);
/// The retract of (K_{A_n})_I on vertices J ⊆ I with |J| odd.
SimplicialComplex build_hat(int n, const IndexSet& index_set);

/// Boundary matrices of a complex, with exact integer entries.
class ChainComplex {
 public:
  explicit ChainComplex(const SimplicialComplex& complex) : complex_(&complex) {}
  explicit ChainComplex(SimplicialComplex&&) = delete;

  /// Column of ∂_d for the given d-simplex index (rows index (d-1)-simplices).
  SparseVector boundary_column(int d, std::size_t index) const;
  std::vector<SparseVector> boundary_matrix(int d) const;
  std::size_t boundary_rank(int d) const;
  /// ∂_{d-1} ∘ ∂_d = 0 for every d.
  bool boundary_squared_zero() const;
  /// Coordinates of a d-chain. Throws std::invalid_argument if it uses a
  /// simplex outside the complex or of another dimension.
  SparseVector coordinates(const Chain& c, int d) const;

 private:
  const SimplicialComplex* complex_;
};

/// Rank of reduced rational homology in dimension d (augmented at -1).
std::size_t reduced_betti(const SimplicialComplex& complex, int d);
/// All reduced Betti numbers; entry d+1 holds dimension d, d = -1..dim.
std::vector<std::size_t> reduced_betti_numbers(const SimplicialComplex& complex);

/// Coordinates of homology classes in the basis {[Δ_α] : α ∈ Alt_I} of
/// H̃_{k-1}(complex), |I| = 2k. Works on any complex containing every Δ_α;
/// boundaries of k-simplices are quotiented out.
class AltHomologyBasis {
 public:
  /// Throws std::logic_error if the Δ_α are not independent modulo
  /// boundaries.
  AltHomologyBasis(const SimplicialComplex& complex, IndexSet index_set);
  AltHomologyBasis(SimplicialComplex&&, IndexSet) = delete;

  const IndexSet& index_set() const { return index_set_; }
  const std::vector<BlockPerm>& basis() const { return basis_; }

  /// Throws std::invalid_argument if c is not a (k-1)-chain of the complex
  /// and std::logic_error if it is not a cycle representing a class.
  AltVector express(const Chain& c) const;
  AltVector express(const BlockPerm& x) const { return express(delta_chain(x)); }

 private:
  const SimplicialComplex* complex_;
  IndexSet index_set_;
  std::vector<BlockPerm> basis_;
  EchelonBasis echelon_;
};

/// Coefficients of x in the alternating basis via exact solve on `complex`.
AltVector express_in_alt_basis(const BlockPerm& x, const SimplicialComplex& complex);

/// Vertex-wise intersection with I. nullopt when two vertices collapse
/// (the image is degenerate and contributes zero).
std::optional<Simplex> homotopy_projection(const Simplex& s, const IndexSet& index_set);
/// Chain-level extension of homotopy_projection.
Chain project_chain(const Chain& c, const IndexSet& index_set);

/// Element of C(A) ⊗ C(B): (simplex of A, simplex of B) → coefficient.
using TensorChain = std::map<std::pair<Simplex, Simplex>, Rational>;

/// Image of Δ_z under (K)_{I1+I2} → (K)_{I1} ⋆ (K)_{I2}, projected to the
/// hat models of both factors. Each vertex J goes to the I1 factor iff
/// |J ∩ I1| is odd; vertices are reordered I1-first with the shuffle sign.
/// Throws std::invalid_argument if I1 and I2 meet or z is not on I1 ∪ I2.
TensorChain join_pushforward(const BlockPerm& z, const IndexSet& i1, const IndexSet& i2);

/// Coordinates of a top-degree tensor cycle in the basis Δ_α ⊗ Δ_β.
std::map<std::pair<BlockPerm, BlockPerm>, Rational> express_tensor(const TensorChain& t, const AltHomologyBasis& a,
                                                                   const AltHomologyBasis& b);

/// Evaluates (Φ(α) ⌣ Φ(β))(Φ(z)) topologically. Hat-complex bases are
/// cached per index set; not thread-safe.
class PairingOracle {
 public:
  const AltHomologyBasis& basis_for(const IndexSet& index_set);
  /// Full coordinate table of ι_*(Φ(z)).
  std::map<std::pair<BlockPerm, BlockPerm>, Rational> pushforward_coordinates(const BlockPerm& z, const IndexSet& i1,
                                                                              const IndexSet& i2);
  Rational pairing(const BlockPerm& alpha, const BlockPerm& beta, const BlockPerm& z);

 private:
  std::map<IndexSet, std::pair<std::unique_ptr<SimplicialComplex>, std::unique_ptr<AltHomologyBasis>>> cache_;
};

Rational pairing_check(const BlockPerm& alpha, const BlockPerm& beta, const BlockPerm& z);

}  // namespace permring
