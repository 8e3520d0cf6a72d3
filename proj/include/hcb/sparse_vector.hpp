#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hcb/rational.hpp"

namespace hcb {

using Integer = boost::multiprecision::mpz_int;

/// Sparse column over the rationals. The same type encodes chains, cochains
/// (identified through the standard inner product) and pseudo-cochain
/// coordinate vectors.
///
/// Stored fraction-free as scale * w, where w is a primitive integer vector
/// (coprime entries, positive pivot) sorted by index. Scaling is O(1) and
/// combinations run on integers only.
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Rational>;
  using IntegerEntry = std::pair<std::size_t, Integer>;

  SparseVector() = default;

  /// Builds from arbitrary entries: sorts, sums duplicates, drops zeros.
  static SparseVector from_entries(std::vector<Entry> entries);
  /// The elementary vector coefficient * e_index.
  static SparseVector unit(std::size_t index, Rational coefficient = 1);

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Materialized rational coefficients in index order.
  std::vector<Entry> entries() const;

  /// The primitive integer direction w and the scale with v = scale * w.
  std::span<const IntegerEntry> integer_entries() const { return terms_; }
  const Rational& scale() const { return scale_; }

  /// Largest index carrying a nonzero coefficient.
  std::optional<std::size_t> pivot() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.back().first;
  }
  Rational pivot_value() const;

  Rational coefficient(std::size_t index) const;
  /// Integer coefficient of w at index, or nullptr when it is zero.
  const Integer* find_integer(std::size_t index) const;

  /// this += factor * other
  void add_scaled(const Rational& factor, const SparseVector& other);
  /// Appends an entry whose index exceeds every stored index.
  void push_back(std::size_t index, const Rational& coefficient);

  SparseVector& operator*=(const Rational& factor);
  SparseVector& operator+=(const SparseVector& other);
  SparseVector& operator-=(const SparseVector& other);
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const Rational& factor, SparseVector v) { return v *= factor; }

  Rational dot(const SparseVector& other) const;
  Rational norm_squared() const { return dot(*this); }

  /// Positive factor turning this vector into a primitive integer vector
  /// (coprime integer entries). 1 for the zero vector.
  Rational primitive_factor() const;

  /// Scales so that the pivot coefficient is 1. No-op on the zero vector.
  SparseVector normalized() const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  /// Restores the canonical form after the integer part changed.
  void canonicalize();

  std::vector<IntegerEntry> terms_;
  Rational scale_ = 1;
};

}  // namespace hcb
