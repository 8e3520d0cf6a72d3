#pragma once

#include <map>
#include <span>
#include <vector>

#include "hcb/barcode.hpp"
#include "hcb/complex.hpp"
#include "hcb/filtration.hpp"
#include "hcb/rational.hpp"

namespace hcb {

/// Bottleneck distance between two diagrams of closed-open intervals (the
/// degree field is ignored). Points may also be matched to the diagonal at
/// half their persistence; points with infinite death only match each other
/// at cost |birth difference|. Exact: binary search over all candidate
/// costs with a perfect-matching feasibility test. Infinite when the numbers
/// of infinite points differ.
ExtendedRational bottleneck_distance(std::span<const RealInterval> a,
                                     std::span<const RealInterval> b);

/// Per-degree distances for degrees 0..max_degree.
std::map<int, ExtendedRational> bottleneck_by_degree(std::span<const RealInterval> a,
                                                     std::span<const RealInterval> b,
                                                     int max_degree);

struct StabilityReport {
  std::map<int, ExtendedRational> per_degree;
  ExtendedRational max_distance;
  Rational sup_norm;
  bool bound_holds = true;
};

/// Sup-norm distance of two vertex functions on the same vertex set.
/// Throws ParseError if the domains differ.
Rational sup_distance(const VertexFunction& f, const VertexFunction& g);

/// Compares the closed-open harmonic barcodes of the lower-star filtrations
/// of f and g against ||f - g||_inf.
StabilityReport stability_experiment(const std::vector<Simplex>& complex, const VertexFunction& f,
                                     const VertexFunction& g);

}  // namespace hcb
