#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "hcb/complex.hpp"
#include "hcb/filtration.hpp"

namespace hcb {

struct RandomFiltrationOptions {
  /// Upper bound on the number of insertions.
  std::size_t max_m = 40;
  /// When set, grow to exactly max_m insertions if the vertex budget allows.
  bool exact_m = false;
  int max_dim = 3;
  std::size_t vertices = 7;
};

/// Random simplex-wise filtration: each step inserts a uniformly chosen
/// simplex among those whose facets are all present (new vertices included).
/// Timestamps are the step positions.
Filtration random_filtration(std::mt19937_64& rng, const RandomFiltrationOptions& options);

/// Uniform random vertex function with values k/denominator, |k| <= range.
VertexFunction random_vertex_function(std::mt19937_64& rng, const std::vector<Simplex>& complex,
                                      int range, int denominator);

}  // namespace hcb
