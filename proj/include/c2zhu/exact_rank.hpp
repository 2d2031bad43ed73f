#pragma once

#include "c2zhu/numeric.hpp"

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

namespace c2zhu {

/// Sparse integer row: (column, nonzero value) sorted by column.
using SparseRow = std::vector<std::pair<int, Integer>>;

/// Incremental row echelon form over Q, kept fraction-free: each stored row
/// is primitive (content 1) with a positive leading entry, and reduction
/// uses integer cross-multiplication followed by content removal.
class SparseEchelon {
 public:
  /// Reduces `row` against the stored pivots. Returns true and stores the
  /// remainder if it is nonzero, i.e. if `row` is independent.
  bool insert(SparseRow row);

  std::size_t rank() const { return pivots_.size(); }

 private:
  std::unordered_map<int, SparseRow> pivots_;  // keyed by leading column
};

/// Scales a rational row to a primitive integer row (same span).
SparseRow primitive_row(const std::vector<std::pair<int, Rational>>& row);

}  // namespace c2zhu
