#include "hcb/ordinary_persistence.hpp"

#include <algorithm>

#include "hcb/exact_linalg.hpp"

namespace hcb {

std::vector<OrdinaryBar> compute_ordinary_barcode(const Filtration& filtration) {
  const ComplexIndex& index = filtration.index();
  const std::size_t m = filtration.size();
  ColumnMatrix reduced;
  std::vector<bool> paired(m, false);
  std::vector<OrdinaryBar> bars;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<SparseVector::Entry> facets;
    for (const auto& f : index.facets(i)) facets.emplace_back(f.index, Rational(f.sign));
    Reduction red = reduce_against(SparseVector::from_entries(std::move(facets)), reduced);
    if (red.residual.empty()) continue;
    const std::size_t creator = *red.residual.pivot();
    paired[creator] = true;
    paired[i] = true;
    bars.push_back({index.dim(i) - 1, creator + 1, i, DeathKind::paired});
    reduced.push_back(std::move(red.residual));
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!paired[i]) bars.push_back({index.dim(i), i + 1, m, DeathKind::end_of_filtration});
  }
  std::sort(bars.begin(), bars.end(), [](const OrdinaryBar& a, const OrdinaryBar& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.birth < b.birth;
  });
  return bars;
}

}  // namespace hcb
