#pragma once

#include "permring/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace permring {

/// Sparse integer column: row index → nonzero entry.
using SparseVector = std::map<std::size_t, Integer>;

/// Incremental column echelon form over ℤ, computed by fraction-free
/// elimination: a column is reduced against existing pivots keyed by their
/// lowest nonzero row (v ← a·v − b·p), and every intermediate vector is
/// divided by its content so entries stay small. Exact throughout.
class EchelonBasis {
 public:
  /// Without combination tracking only rank() is meaningful; express()
  /// then throws std::logic_error.
  explicit EchelonBasis(bool track_combinations = true) : track_(track_combinations) {}

  /// Adds the next column. Returns true if it was independent of the
  /// columns added so far.
  bool add_column(const SparseVector& column);

  std::size_t rank() const { return pivots_.size(); }
  std::size_t columns() const { return columns_; }

  /// Coefficients c (one per added column, dependent columns get 0) with
  /// Σ c_j·column_j = v, or nullopt if v is outside the column span.
  std::optional<std::vector<Rational>> express(const SparseVector& v) const;

 private:
  struct Pivot {
    SparseVector vec;
    SparseVector combo;  // vec = Σ combo[j]·column_j
  };
  std::map<std::size_t, Pivot> pivots_;
  std::size_t columns_ = 0;
  bool track_ = true;
};

/// Rank over ℚ of the matrix with the given columns.
std::size_t rank_of(const std::vector<SparseVector>& columns);

}  // namespace permring
