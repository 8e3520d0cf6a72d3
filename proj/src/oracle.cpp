#include "hcb/oracle.hpp"

#include <algorithm>

#include "hcb/complex.hpp"
#include "hcb/exact_linalg.hpp"

namespace hcb::oracle {

namespace {

std::vector<std::size_t> simplices_in_prefix(const ComplexIndex& index, int p, std::size_t prefix) {
  std::vector<std::size_t> out;
  for (std::size_t s : index.of_dim(p)) {
    if (s < prefix) out.push_back(s);
  }
  return out;
}

std::map<std::size_t, std::size_t> local_positions(const std::vector<std::size_t>& globals) {
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t k = 0; k < globals.size(); ++k) pos.emplace(globals[k], k);
  return pos;
}

/// Matrix of the boundary from q-simplices to (q-1)-simplices of K_prefix.
DenseMatrix boundary_matrix(const ComplexIndex& index, const std::vector<std::size_t>& rows,
                            const std::vector<std::size_t>& cols) {
  const auto row_pos = local_positions(rows);
  DenseMatrix m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& f : index.facets(cols[c])) m(row_pos.at(f.index), c) = f.sign;
  }
  return m;
}

class SpaceCache {
 public:
  explicit SpaceCache(const Filtration& f) : filtration_(f) {}
  const SubspaceBasis& get(std::size_t prefix, int p) {
    auto key = std::make_pair(prefix, p);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, harmonic_space(filtration_, prefix, p)).first;
    return it->second;
  }

 private:
  const Filtration& filtration_;
  std::map<std::pair<std::size_t, int>, SubspaceBasis> cache_;
};

}  // namespace

bool SubspaceBasis::contains(const SparseVector& v) const {
  std::vector<SparseVector> extended = vectors;
  extended.push_back(v);
  return rank_of(extended) == rank_of(vectors);
}

SubspaceBasis harmonic_space(const Filtration& filtration, std::size_t prefix, int p) {
  const ComplexIndex& index = filtration.index();
  const auto lower = simplices_in_prefix(index, p - 1, prefix);
  const auto middle = simplices_in_prefix(index, p, prefix);
  const auto upper = simplices_in_prefix(index, p + 1, prefix);
  const auto middle_pos = local_positions(middle);

  DenseMatrix stacked(lower.size() + upper.size(), middle.size());
  const auto lower_pos = local_positions(lower);
  for (std::size_t c = 0; c < middle.size(); ++c) {
    for (const auto& f : index.facets(middle[c])) stacked(lower_pos.at(f.index), c) = f.sign;
  }
  for (std::size_t r = 0; r < upper.size(); ++r) {
    for (const auto& f : index.facets(upper[r])) {
      stacked(lower.size() + r, middle_pos.at(f.index)) = f.sign;
    }
  }

  SubspaceBasis basis{p, prefix, {}};
  for (auto& kernel_vector : rank_and_kernel(std::move(stacked)).kernel) {
    std::vector<SparseVector::Entry> entries;
    for (std::size_t c = 0; c < middle.size(); ++c) {
      if (kernel_vector[c] != 0) entries.emplace_back(middle[c], kernel_vector[c]);
    }
    basis.vectors.push_back(SparseVector::from_entries(std::move(entries)));
  }
  return basis;
}

std::size_t betti_number(const Filtration& filtration, std::size_t prefix, int p) {
  const ComplexIndex& index = filtration.index();
  const auto lower = simplices_in_prefix(index, p - 1, prefix);
  const auto middle = simplices_in_prefix(index, p, prefix);
  const auto upper = simplices_in_prefix(index, p + 1, prefix);
  const std::size_t rank_p = rank_and_kernel(boundary_matrix(index, lower, middle)).rank;
  const std::size_t rank_p1 = rank_and_kernel(boundary_matrix(index, middle, upper)).rank;
  return middle.size() - rank_p - rank_p1;
}

Report certify_barcode(const Filtration& filtration, const Barcode& barcode) {
  Report report;
  SpaceCache spaces(filtration);
  const std::size_t m = filtration.size();
  auto fail = [&](char condition, std::optional<std::size_t> bar, std::size_t prefix, int degree,
                  std::string detail) {
    report.failures.push_back({condition, bar, prefix, degree, std::move(detail)});
  };

  for (std::size_t k = 0; k < barcode.bars.size(); ++k) {
    const Bar& bar = barcode.bars[k];
    const int p = bar.degree;
    const SparseVector& z = bar.representative;
    if (bar.birth == 0 || bar.birth > m || bar.death < bar.birth || bar.death > m) {
      fail('a', k, bar.birth, p, "interval out of range");
      continue;
    }
    if (z.empty()) {
      fail('a', k, bar.birth, p, "zero representative");
    } else if (!spaces.get(bar.birth, p).contains(z)) {
      fail('a', k, bar.birth, p, "representative not harmonic at birth");
    } else if (spaces.get(bar.birth - 1, p).contains(z)) {
      fail('a', k, bar.birth, p, "representative already harmonic before birth");
    }

    if (bar.death_kind == DeathKind::paired) {
      if (bar.death >= m) {
        fail('b', k, bar.death, p, "paired bar must die before m");
      } else if (!spaces.get(bar.death, p).contains(z)) {
        fail('b', k, bar.death, p, "representative not harmonic at death index");
      } else if (spaces.get(bar.death + 1, p).contains(z)) {
        fail('b', k, bar.death, p, "representative survives past death index");
      }
    } else if (bar.death != m) {
      fail('b', k, bar.death, p, "unpaired bar must end at m");
    }
  }

  const int top = std::max(filtration.max_dim(), barcode.max_degree());
  for (std::size_t i = 0; i <= m; ++i) {
    for (int p = 0; p <= top; ++p) {
      std::vector<SparseVector> reps;
      for (const Bar& bar : barcode.bars) {
        if (bar.degree == p && bar.contains(i)) reps.push_back(bar.representative);
      }
      const SubspaceBasis& space = spaces.get(i, p);
      if (reps.size() != space.dim()) {
        fail('c', std::nullopt, i, p,
             std::to_string(reps.size()) + " live bars, dim Har = " + std::to_string(space.dim()));
        continue;
      }
      if (rank_of(reps) != reps.size()) {
        fail('c', std::nullopt, i, p, "live representatives are dependent");
        continue;
      }
      for (const auto& z : reps) {
        if (!space.contains(z)) {
          fail('c', std::nullopt, i, p, "live representative not harmonic");
          break;
        }
      }
    }
  }
  return report;
}

Report check_betti_curves(const Filtration& filtration, const Barcode& barcode) {
  Report report;
  const int top = std::max(filtration.max_dim(), barcode.max_degree());
  for (std::size_t i = 0; i <= filtration.size(); ++i) {
    for (int p = 0; p <= top; ++p) {
      std::size_t live = 0;
      for (const Bar& bar : barcode.bars) {
        if (bar.degree == p && bar.contains(i)) ++live;
      }
      const std::size_t harmonic = harmonic_space(filtration, i, p).dim();
      const std::size_t betti = betti_number(filtration, i, p);
      if (live != harmonic || harmonic != betti) {
        report.failures.push_back({'n', std::nullopt, i, p,
                                   "bars " + std::to_string(live) + ", dim Har " +
                                       std::to_string(harmonic) + ", betti " +
                                       std::to_string(betti)});
      }
    }
  }
  return report;
}

Report check_endpoint_law(const Barcode& harmonic, const std::vector<OrdinaryBar>& ordinary) {
  using Endpoints = std::map<int, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>;
  Endpoints lhs;
  Endpoints rhs;
  for (const Bar& bar : harmonic.bars) {
    lhs[bar.degree].first.push_back(bar.birth);
    lhs[bar.degree].second.push_back(bar.death);
  }
  for (const OrdinaryBar& bar : ordinary) {
    rhs[bar.degree].first.push_back(bar.birth);
    rhs[bar.degree].second.push_back(bar.death);
  }
  for (auto* side : {&lhs, &rhs}) {
    for (auto& [degree, ends] : *side) {
      std::sort(ends.first.begin(), ends.first.end());
      std::sort(ends.second.begin(), ends.second.end());
    }
  }
  Report report;
  std::map<int, bool> degrees;
  for (const auto& [d, e] : lhs) degrees[d] = true;
  for (const auto& [d, e] : rhs) degrees[d] = true;
  for (const auto& [degree, unused] : degrees) {
    if (lhs[degree].first != rhs[degree].first) {
      report.failures.push_back({'e', std::nullopt, 0, degree, "birth multisets differ"});
    }
    if (lhs[degree].second != rhs[degree].second) {
      report.failures.push_back({'e', std::nullopt, 0, degree, "death multisets differ"});
    }
  }
  return report;
}

NormCheck minimal_norm_check(const Filtration& filtration, const SparseVector& z, int p,
                             std::size_t prefix, std::size_t trials, std::mt19937_64& rng,
                             int bound) {
  NormCheck result;
  const ComplexIndex& index = filtration.index();
  const auto lower = simplices_in_prefix(index, p - 1, prefix);
  const Rational base = z.norm_squared();
  std::uniform_int_distribution<int> coefficient(-bound, bound);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<SparseVector::Entry> entries;
    for (std::size_t s : lower) entries.emplace_back(s, Rational(coefficient(rng)));
    const SparseVector gamma = SparseVector::from_entries(std::move(entries));
    const SparseVector perturbation = apply_coboundary(gamma, p - 1, index, prefix);
    const Rational perturbed = (z + perturbation).norm_squared();
    ++result.trials;
    if (perturbation.empty()) {
      if (perturbed != base) result.pass = false;
    } else {
      if (!(base < perturbed)) result.pass = false;
      ++result.strict;
    }
  }
  return result;
}

}  // namespace hcb::oracle
