#include "hcb/exact_linalg.hpp"

#include <algorithm>
#include <map>

#include "hcb/errors.hpp"

namespace hcb {

std::optional<std::size_t> ColumnMatrix::column_with_pivot(std::size_t row) const {
  auto it = pivot_owner_.find(row);
  if (it == pivot_owner_.end()) return std::nullopt;
  return it->second;
}

std::size_t ColumnMatrix::push_back(SparseVector column) {
  const std::size_t j = push_back_unclaimed(std::move(column));
  if (auto owner = claim_pivot(j)) {
    throw InvariantViolation("ColumnMatrix::push_back: pivot " +
                             std::to_string(*columns_[j].pivot()) + " already owned by column " +
                             std::to_string(*owner));
  }
  return j;
}

std::size_t ColumnMatrix::push_back_unclaimed(SparseVector column) {
  if (column.empty()) throw InvariantViolation("ColumnMatrix: zero column");
  columns_.push_back(std::move(column));
  return columns_.size() - 1;
}

SparseVector& ColumnMatrix::release(std::size_t j) {
  if (auto pivot = columns_[j].pivot()) {
    auto it = pivot_owner_.find(*pivot);
    if (it != pivot_owner_.end() && it->second == j) pivot_owner_.erase(it);
  }
  return columns_[j];
}

std::optional<std::size_t> ColumnMatrix::claim_pivot(std::size_t j) {
  auto pivot = columns_[j].pivot();
  if (!pivot) throw InvariantViolation("ColumnMatrix: column became zero");
  auto [it, inserted] = pivot_owner_.emplace(*pivot, j);
  if (inserted || it->second == j) return std::nullopt;
  return it->second;
}

bool ColumnMatrix::has_distinct_pivots() const {
  std::vector<std::size_t> pivots;
  pivots.reserve(columns_.size());
  for (const auto& column : columns_) {
    if (column.empty()) return false;
    pivots.push_back(*column.pivot());
  }
  std::sort(pivots.begin(), pivots.end());
  return std::adjacent_find(pivots.begin(), pivots.end()) == pivots.end();
}

Reduction reduce_against(SparseVector v, const ColumnMatrix& basis) {
  Reduction result;
  while (auto pivot = v.pivot()) {
    auto j = basis.column_with_pivot(*pivot);
    if (!j) break;
    const SparseVector& column = basis[*j];
    Rational mu = v.pivot_value() / column.pivot_value();
    v.add_scaled(-mu, column);
    result.coefficients.emplace_back(*j, std::move(mu));
  }
  result.residual = std::move(v);
  return result;
}

RankKernel rank_and_kernel(DenseMatrix a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a(sel, c) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(sel, k), a(r, k));
    }
    const Rational inv = 1 / a(r, c);
    for (std::size_t k = c; k < cols; ++k) a(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational factor = a(i, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (a(r, k) != 0) a(i, k) -= factor * a(r, k);
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }

  RankKernel result;
  result.rank = pivot_cols.size();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a(i, free);
    auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    const Rational scale = 1 / *first;
    for (auto& x : v) x *= scale;
    result.kernel.push_back(std::move(v));
  }
  return result;
}

std::size_t rank_of(std::span<const SparseVector> vectors) {
  std::map<std::size_t, std::size_t> local;
  for (const auto& v : vectors) {
    for (const auto& [index, value] : v.entries()) local.emplace(index, 0);
  }
  std::size_t next = 0;
  for (auto& [index, slot] : local) slot = next++;
  DenseMatrix m(local.size(), vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    for (const auto& [index, value] : vectors[j].entries()) m(local[index], j) = value;
  }
  return rank_and_kernel(std::move(m)).rank;
}

}  // namespace hcb
