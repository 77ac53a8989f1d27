#pragma once

// Exact linear algebra over Q used by the splitting computations.

#include "jets/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace jets {

/// Sparse row: (column, nonzero value) pairs sorted by column.
using SparseRow = std::vector<std::pair<int, Rational>>;

/// Incremental row echelon form; rank() is the number of independent rows added.
class SparseEchelon {
public:
  explicit SparseEchelon(int columns);

  /// Reduce `row` against the stored pivots; keeps it if anything survives.
  /// Returns true iff the rank grew.
  bool add_row(SparseRow row);
  int rank() const { return rank_; }

private:
  std::vector<std::optional<SparseRow>> pivots_;  // indexed by leading column, leading entry 1
  int rank_ = 0;
};

using DenseMatrix = std::vector<std::vector<Rational>>;

/// A nonzero c with c^T * a == 0, or empty when the rows of a are independent.
std::optional<std::vector<Rational>> left_null_vector(const DenseMatrix& a);

}  // namespace jets
