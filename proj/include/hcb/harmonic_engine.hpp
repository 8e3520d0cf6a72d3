#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hcb/barcode.hpp"
#include "hcb/exact_linalg.hpp"
#include "hcb/filtration.hpp"
#include "hcb/sparse_vector.hpp"

namespace hcb {

/// Partial representative of an unpaired birth.
struct HarmonicColumn {
  std::size_t birth;
  SparseVector chain;
};

/// Column-aligned triple for one degree p:
///   pseudo_cochains[j]  (coordinates w.r.t. the boundary basis R^p)
///     --delta-->  coboundaries[j]  (a (p+1)-coboundary)
///     --boundary-->  boundaries[j]  (kept with distinct pivots)
struct CoboundaryBasis {
  std::vector<SparseVector> pseudo_cochains;
  std::vector<SparseVector> coboundaries;
  ColumnMatrix boundaries;

  std::size_t size() const { return coboundaries.size(); }
  /// Appends a triple without claiming the pivot of `boundary`; follow with
  /// restore_distinct_pivots on the returned column.
  std::size_t append(SparseVector pseudo_cochain, SparseVector coboundary, SparseVector boundary);
  /// Scales triple j so the coboundary is a primitive integer vector. Every
  /// relation is linear in the triple, so this only keeps the scales small.
  void rescale(std::size_t j);
};

/// Re-registers column `column` of `basis.boundaries`, eliminating against
/// whichever column owns its pivot until the pivot is free. Every elimination
/// is applied identically to the three aligned columns, so spans and the
/// delta/boundary correspondences are preserved. Returns the number of
/// eliminations performed. The column is rescaled afterwards.
std::size_t restore_distinct_pivots(CoboundaryBasis& basis, std::size_t column);

struct Classification {
  bool positive = false;
  /// Boundary of the inserted simplex reduced against R^{p-1}.
  SparseVector residual;
  /// boundary = residual + sum mu_k R^{p-1}[k].
  std::vector<std::pair<std::size_t, Rational>> coefficients;
};

/// What happened when one simplex was inserted.
struct InsertionEvent {
  std::size_t step = 0;
  int dim = 0;
  bool positive = true;
  /// For negative insertions: (birth, z(boundary of the simplex)) for every
  /// unpaired (dim-1)-representative, in birth order, before any update.
  std::vector<std::pair<std::size_t, Rational>> evaluations;
  std::optional<Bar> bar;
};

/// Incremental harmonic chain barcode computation over a simplex-wise
/// filtration. The filtration must outlive the engine.
///
/// Per degree p the engine keeps H^p (partial representatives of the unpaired
/// births, sorted by birth), R^p (a boundary basis with distinct pivots) and a
/// CoboundaryBasis linking pseudo-cochains on B_p to a basis of B^{p+1}.
/// A positive p-simplex adds a newborn harmonic cycle to H^p. A negative one
/// pairs the oldest unpaired (p-1)-birth whose representative stops being a
/// cocycle, and repairs the younger ones by subtracting multiples of it.
class HarmonicEngine {
 public:
  explicit HarmonicEngine(const Filtration& filtration);

  std::size_t prefix() const { return prefix_; }
  bool done() const { return prefix_ == filtration_.size(); }

  /// Reduction of the next simplex's boundary against R^{p-1}.
  Classification classify_next() const;
  /// For a positive next p-simplex: the newborn harmonic p-cycle in K_{i+1}.
  /// Throws InvariantViolation if the reduction does not terminate at zero.
  SparseVector find_newborn_harmonic() const;

  /// Inserts the next simplex.
  InsertionEvent step();
  /// Inserts the remaining simplices and returns the full barcode, closing
  /// every unpaired birth at m.
  Barcode finish();

  std::span<const HarmonicColumn> harmonic_basis(int p) const;
  /// Replaces the partial representatives of degree p with another valid
  /// choice: the same births, each column a harmonic chain of K_prefix whose
  /// pivot is the simplex inserted at birth-1. Any such basis yields the same
  /// barcode. Throws std::invalid_argument otherwise.
  void replace_harmonic_basis(int p, std::vector<HarmonicColumn> columns);
  const ColumnMatrix& boundary_basis(int p) const;
  const CoboundaryBasis& coboundary_basis(int p) const;

  /// Exact re-evaluation of every maintained relation in K_prefix. Throws
  /// InvariantViolation describing the first broken one. Test-only cost.
  void check_invariants() const;

 private:
  struct DegreeState {
    std::vector<HarmonicColumn> harmonic;
    ColumnMatrix boundaries;
    CoboundaryBasis coboundary;
  };

  SparseVector boundary_vector(std::size_t i) const;
  void refresh_coboundaries(CoboundaryBasis& basis, std::size_t i, const SparseVector& boundary,
                            std::span<const std::pair<std::size_t, Rational>> coefficients);
  Bar pair_oldest(int p, const SparseVector& boundary, std::size_t i, InsertionEvent& event);

  const Filtration& filtration_;
  std::vector<DegreeState> states_;
  std::vector<Bar> bars_;
  std::size_t prefix_ = 0;
};

/// Harmonic chain barcode with one pivot-normalized representative per bar.
Barcode compute_harmonic_barcode(const Filtration& filtration);

}  // namespace hcb
