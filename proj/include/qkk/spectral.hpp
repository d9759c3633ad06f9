#pragma once

#include <cstddef>
#include <vector>

#include "qkk/banded_operator.hpp"

namespace qkk {

/// Nonzero-block singular values of a sparse matrix.
///
/// Columns are grouped into connected components (two columns are linked when
/// they share a nonzero row); distinct components have disjoint row supports,
/// so the matrix is block diagonal up to permutation and its singular values
/// are the union of the blocks' singular values. Weight-homogeneous operators
/// split into many small blocks, which keeps dense SVDs cheap.
///
/// `column_mask`, when given, restricts to the selected columns.
std::vector<double> singular_values(const SparseMatrix& m, const std::vector<char>* column_mask = nullptr);

/// Largest singular value (0 for an empty selection).
double operator_norm(const SparseMatrix& m, const std::vector<char>* column_mask = nullptr);

/// Operator norm on interior vectors.
double interior_norm(const BandedOperator& op);

/// Operator norm on interior vectors with spin ≥ l_from.
double tail_norm(const BandedOperator& op, HalfInt l_from);

/// Largest |entry| with both row and column selected.
double max_abs_entry(const SparseMatrix& m, const std::vector<char>& row_mask, const std::vector<char>& column_mask);

struct RankDecision {
  std::size_t rank = 0;
  double smallest_kept = 0.0;     // smallest singular value above threshold
  double largest_dropped = 0.0;   // largest singular value at or below threshold
};

/// Rank with a singular-value threshold; throws std::runtime_error when the
/// smallest kept singular value lies within `guard`× of the threshold.
RankDecision numerical_rank(const SparseMatrix& m, double threshold = 1e-8, double guard = 10.0);

}  // namespace qkk
