#pragma once

#include <cstddef>
#include <vector>

#include "hcb/rational.hpp"
#include "hcb/sparse_vector.hpp"

namespace hcb {

enum class DeathKind { paired, end_of_filtration };

/// Closed integer interval [birth, death] of the harmonic chain barcode.
/// Index i refers to the complex K_i holding the first i simplices. The
/// representative is a chain over global simplex indices, pivot-normalized.
struct Bar {
  int degree = 0;
  std::size_t birth = 0;
  std::size_t death = 0;
  SparseVector representative;
  DeathKind death_kind = DeathKind::paired;

  bool contains(std::size_t i) const { return birth <= i && i <= death; }
  friend bool operator==(const Bar&, const Bar&) = default;
};

struct Barcode {
  /// Number of insertions in the filtration the bars were computed on.
  std::size_t m = 0;
  /// Sorted by (degree, birth).
  std::vector<Bar> bars;

  std::vector<Bar> in_degree(int p) const;
  int max_degree() const;
  friend bool operator==(const Barcode&, const Barcode&) = default;
};

/// Real-valued closed-open interval [birth, death) of a sublevel-set barcode.
struct RealInterval {
  int degree = 0;
  Rational birth;
  ExtendedRational death;
  friend bool operator==(const RealInterval&, const RealInterval&) = default;
};

}  // namespace hcb
