#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hcb/rational.hpp"
#include "hcb/sparse_vector.hpp"

namespace hcb {

/// Ordered list of nonzero sparse columns with a pivot -> column lookup.
///
/// Pivots are the largest nonzero row index of a column. Columns appended via
/// push_back must carry a fresh pivot. A column that is edited in place is
/// first released from the lookup and re-registered with claim_pivot, which
/// reports the current owner when the pivot is taken; this is how transient
/// collisions are resolved by callers.
class ColumnMatrix {
 public:
  std::size_t size() const { return columns_.size(); }
  bool empty() const { return columns_.empty(); }
  const SparseVector& operator[](std::size_t j) const { return columns_[j]; }
  std::span<const SparseVector> columns() const { return columns_; }

  std::optional<std::size_t> column_with_pivot(std::size_t row) const;

  /// Appends a nonzero column whose pivot no other column owns.
  std::size_t push_back(SparseVector column);
  /// Appends a nonzero column without registering its pivot.
  std::size_t push_back_unclaimed(SparseVector column);

  /// Drops column j from the lookup and returns it for editing.
  SparseVector& release(std::size_t j);
  /// Registers column j under its pivot. Returns the owning column instead if
  /// the pivot is already taken by another column.
  std::optional<std::size_t> claim_pivot(std::size_t j);

  /// Multiplies column j by a nonzero factor; the pivot is unchanged.
  void scale(std::size_t j, const Rational& factor) { columns_[j] *= factor; }

  /// Full scan; true iff no two columns share a pivot and none is zero.
  bool has_distinct_pivots() const;

 private:
  std::vector<SparseVector> columns_;
  std::unordered_map<std::size_t, std::size_t> pivot_owner_;
};

struct Reduction {
  SparseVector residual;
  /// (column j, mu_j) for every elimination step, in execution order.
  std::vector<std::pair<std::size_t, Rational>> coefficients;
};

/// Eliminates the pivot of `v` against the matching column of `basis` until
/// the residual is zero or has an unmatched pivot. On return
/// v == residual + sum_j mu_j * basis[j].
Reduction reduce_against(SparseVector v, const ColumnMatrix& basis);

/// Dense row-major rational matrix for the brute-force oracle.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

struct RankKernel {
  std::size_t rank = 0;
  /// Kernel basis vectors of length cols(); first nonzero entry is 1.
  std::vector<std::vector<Rational>> kernel;
};

/// Exact Gauss-Jordan elimination.
RankKernel rank_and_kernel(DenseMatrix matrix);

/// Rank of a family of sparse vectors (any indexing).
std::size_t rank_of(std::span<const SparseVector> vectors);

}  // namespace hcb
