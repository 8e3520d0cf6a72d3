#include "hcb/random_filtration.hpp"

#include <set>

namespace hcb {

Filtration random_filtration(std::mt19937_64& rng, const RandomFiltrationOptions& options) {
  std::size_t target = options.max_m;
  if (!options.exact_m && options.max_m > 0) {
    target = std::uniform_int_distribution<std::size_t>(1, options.max_m)(rng);
  }
  std::set<Simplex> present;
  std::vector<Simplex> order;
  std::vector<Vertex> vertices;
  while (order.size() < target) {
    std::vector<Simplex> candidates;
    if (vertices.size() < options.vertices) candidates.push_back(Simplex{static_cast<Vertex>(vertices.size())});
    for (const Simplex& s : present) {
      if (s.dim() >= options.max_dim) continue;
      for (Vertex v : vertices) {
        if (v <= s.vertices().back()) continue;
        std::vector<Vertex> grown(s.vertices().begin(), s.vertices().end());
        grown.push_back(v);
        Simplex candidate(std::move(grown));
        if (present.contains(candidate)) continue;
        bool faces_present = true;
        for (std::size_t q = 0; q + 1 < candidate.vertices().size() && faces_present; ++q) {
          faces_present = present.contains(candidate.facet(q));
        }
        if (faces_present) candidates.push_back(std::move(candidate));
      }
    }
    if (candidates.empty()) break;
    Simplex chosen = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    if (chosen.dim() == 0) vertices.push_back(chosen.vertices().front());
    present.insert(chosen);
    order.push_back(std::move(chosen));
  }
  return Filtration::from_simplices(order);
}

VertexFunction random_vertex_function(std::mt19937_64& rng, const std::vector<Simplex>& complex,
                                      int range, int denominator) {
  std::uniform_int_distribution<int> numerator(-range, range);
  VertexFunction f;
  for (const auto& s : complex) {
    if (s.dim() == 0) f[s.vertices().front()] = Rational(numerator(rng), denominator);
  }
  return f;
}

}  // namespace hcb
