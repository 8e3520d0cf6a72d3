#include "hcb/harmonic_engine.hpp"

#include <algorithm>
#include <string>

#include "hcb/complex.hpp"
#include "hcb/errors.hpp"

namespace hcb {

std::size_t CoboundaryBasis::append(SparseVector pseudo_cochain, SparseVector coboundary,
                                    SparseVector boundary) {
  pseudo_cochains.push_back(std::move(pseudo_cochain));
  coboundaries.push_back(std::move(coboundary));
  return boundaries.push_back_unclaimed(std::move(boundary));
}

void CoboundaryBasis::rescale(std::size_t j) {
  const Rational factor = coboundaries[j].primitive_factor();
  if (factor == 1) return;
  pseudo_cochains[j] *= factor;
  coboundaries[j] *= factor;
  boundaries.scale(j, factor);
}

std::size_t restore_distinct_pivots(CoboundaryBasis& basis, std::size_t column) {
  std::size_t eliminations = 0;
  // The pivot strictly decreases on every pass.
  while (auto owner = basis.boundaries.claim_pivot(column)) {
    const Rational ratio = basis.boundaries[column].pivot_value() /
                           basis.boundaries[*owner].pivot_value();
    basis.pseudo_cochains[column].add_scaled(-ratio, basis.pseudo_cochains[*owner]);
    basis.coboundaries[column].add_scaled(-ratio, basis.coboundaries[*owner]);
    basis.boundaries.release(column).add_scaled(-ratio, basis.boundaries[*owner]);
    ++eliminations;
  }
  basis.rescale(column);
  return eliminations;
}

HarmonicEngine::HarmonicEngine(const Filtration& filtration)
    : filtration_(filtration), states_(static_cast<std::size_t>(filtration.max_dim() + 1)) {}

SparseVector HarmonicEngine::boundary_vector(std::size_t i) const {
  std::vector<SparseVector::Entry> entries;
  for (const auto& f : filtration_.index().facets(i)) entries.emplace_back(f.index, Rational(f.sign));
  return SparseVector::from_entries(std::move(entries));
}

Classification HarmonicEngine::classify_next() const {
  if (done()) throw std::logic_error("classify_next: filtration exhausted");
  const int p = filtration_.index().dim(prefix_);
  Classification result;
  if (p == 0) {
    result.positive = true;
    return result;
  }
  Reduction reduction =
      reduce_against(boundary_vector(prefix_), states_[static_cast<std::size_t>(p - 1)].boundaries);
  result.positive = reduction.residual.empty();
  result.residual = std::move(reduction.residual);
  result.coefficients = std::move(reduction.coefficients);
  return result;
}

SparseVector HarmonicEngine::find_newborn_harmonic() const {
  if (done()) throw std::logic_error("find_newborn_harmonic: filtration exhausted");
  const std::size_t i = prefix_;
  const int p = filtration_.index().dim(i);
  SparseVector phi = SparseVector::unit(i);
  if (p == 0) return phi;
  const CoboundaryBasis& basis = states_[static_cast<std::size_t>(p - 1)].coboundary;
  Reduction reduction = reduce_against(boundary_vector(i), basis.boundaries);
  if (!reduction.residual.empty()) {
    throw InvariantViolation("newborn harmonic reduction for step " + std::to_string(i) +
                             " did not reach zero");
  }
  for (const auto& [j, mu] : reduction.coefficients) phi.add_scaled(-mu, basis.coboundaries[j]);
  return phi;
}

void HarmonicEngine::refresh_coboundaries(
    CoboundaryBasis& basis, std::size_t i, const SparseVector& boundary,
    std::span<const std::pair<std::size_t, Rational>> coefficients) {
  struct Hit {
    std::size_t column;
    Rational alpha;
  };
  // psi_j(boundary) = sum_k mu_k SC[j][k]; it becomes the coefficient of the
  // new simplex in delta(psi_j).
  std::vector<Hit> hits;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const SparseVector& psi = basis.pseudo_cochains[j];
    Rational alpha = 0;
    for (const auto& [k, mu] : coefficients) {
      if (const Integer* sc = psi.find_integer(k)) alpha += mu * *sc;
    }
    if (alpha != 0) hits.push_back({j, alpha * psi.scale()});
  }
  if (hits.empty()) return;

  std::sort(hits.begin(), hits.end(), [&](const Hit& a, const Hit& b) {
    return *basis.boundaries[a.column].pivot() < *basis.boundaries[b.column].pivot();
  });
  const Hit& lead = hits.front();
  for (std::size_t h = 1; h < hits.size(); ++h) {
    const std::size_t column = hits[h].column;
    const Rational ratio = hits[h].alpha / lead.alpha;
    // The new-simplex coefficients cancel, so the old lead columns are used.
    basis.pseudo_cochains[column].add_scaled(-ratio, basis.pseudo_cochains[lead.column]);
    basis.coboundaries[column].add_scaled(-ratio, basis.coboundaries[lead.column]);
    basis.boundaries.release(column).add_scaled(-ratio, basis.boundaries[lead.column]);
    if (auto owner = basis.boundaries.claim_pivot(column)) {
      throw InvariantViolation("coboundary update moved the pivot of column " +
                               std::to_string(column));
    }
    basis.rescale(column);
  }
  basis.coboundaries[lead.column].push_back(i, lead.alpha);
  basis.boundaries.release(lead.column).add_scaled(lead.alpha, boundary);
  restore_distinct_pivots(basis, lead.column);
}

Bar HarmonicEngine::pair_oldest(int p, const SparseVector& boundary, std::size_t i,
                                InsertionEvent& event) {
  auto& harmonic = states_[static_cast<std::size_t>(p)].harmonic;
  std::vector<Rational> alpha;
  alpha.reserve(harmonic.size());
  for (const auto& column : harmonic) {
    alpha.push_back(column.chain.dot(boundary));
    event.evaluations.emplace_back(column.birth, alpha.back());
  }
  auto oldest = std::find_if(alpha.begin(), alpha.end(), [](const Rational& a) { return a != 0; });
  if (oldest == alpha.end()) {
    throw InvariantViolation("negative step " + std::to_string(i) +
                             " leaves every harmonic representative intact");
  }
  const auto star = static_cast<std::size_t>(oldest - alpha.begin());
  const SparseVector killed = harmonic[star].chain;
  for (std::size_t j = star + 1; j < harmonic.size(); ++j) {
    if (alpha[j] == 0) continue;
    harmonic[j].chain.add_scaled(-(alpha[j] / alpha[star]), killed);
  }
  Bar bar{p, harmonic[star].birth, i, killed.normalized(), DeathKind::paired};
  harmonic.erase(harmonic.begin() + static_cast<std::ptrdiff_t>(star));
  return bar;
}

InsertionEvent HarmonicEngine::step() {
  if (done()) throw std::logic_error("step: filtration exhausted");
  const std::size_t i = prefix_;
  const int p = filtration_.index().dim(i);
  InsertionEvent event;
  event.step = i;
  event.dim = p;

  if (p == 0) {
    states_[0].harmonic.push_back({i + 1, SparseVector::unit(i)});
    ++prefix_;
    return event;
  }

  DegreeState& lower = states_[static_cast<std::size_t>(p - 1)];
  const SparseVector boundary = boundary_vector(i);
  Classification c = classify_next();
  if (c.positive) {
    SparseVector phi = find_newborn_harmonic();
    states_[static_cast<std::size_t>(p)].harmonic.push_back({i + 1, std::move(phi)});
    refresh_coboundaries(lower.coboundary, i, boundary, c.coefficients);
  } else {
    event.positive = false;
    event.bar = pair_oldest(p - 1, boundary, i, event);
    bars_.push_back(*event.bar);
    const std::size_t r = lower.boundaries.push_back(std::move(c.residual));
    // Existing pseudo-cochains extend by zero on the new boundary basis vector.
    refresh_coboundaries(lower.coboundary, i, boundary, c.coefficients);
    // (0,...,0,1) encodes the pseudo-cochain whose coboundary is the dual of
    // the new simplex.
    const std::size_t column =
        lower.coboundary.append(SparseVector::unit(r), SparseVector::unit(i), boundary);
    restore_distinct_pivots(lower.coboundary, column);
  }
  ++prefix_;
  return event;
}

Barcode HarmonicEngine::finish() {
  while (!done()) step();
  Barcode barcode;
  barcode.m = filtration_.size();
  barcode.bars = bars_;
  for (std::size_t p = 0; p < states_.size(); ++p) {
    for (const auto& column : states_[p].harmonic) {
      barcode.bars.push_back({static_cast<int>(p), column.birth, barcode.m,
                              column.chain.normalized(), DeathKind::end_of_filtration});
    }
  }
  std::sort(barcode.bars.begin(), barcode.bars.end(), [](const Bar& a, const Bar& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.birth < b.birth;
  });
  return barcode;
}

std::span<const HarmonicColumn> HarmonicEngine::harmonic_basis(int p) const {
  if (p < 0 || static_cast<std::size_t>(p) >= states_.size()) return {};
  return states_[static_cast<std::size_t>(p)].harmonic;
}

void HarmonicEngine::replace_harmonic_basis(int p, std::vector<HarmonicColumn> columns) {
  if (p < 0 || static_cast<std::size_t>(p) >= states_.size()) {
    throw std::invalid_argument("replace_harmonic_basis: degree out of range");
  }
  auto& current = states_[static_cast<std::size_t>(p)].harmonic;
  if (columns.size() != current.size()) {
    throw std::invalid_argument("replace_harmonic_basis: expected " + std::to_string(current.size()) +
                                " columns");
  }
  const ComplexIndex& index = filtration_.index();
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const auto& column = columns[j];
    const std::string which = "replace_harmonic_basis: column " + std::to_string(j);
    if (column.birth != current[j].birth) throw std::invalid_argument(which + " has the wrong birth");
    if (column.chain.pivot() != column.birth - 1) {
      throw std::invalid_argument(which + " must have its pivot at step birth-1");
    }
    if (!apply_boundary(column.chain, p, index).empty() ||
        !apply_coboundary(column.chain, p, index, prefix_).empty()) {
      throw std::invalid_argument(which + " is not harmonic in the current prefix");
    }
  }
  current = std::move(columns);
}

const ColumnMatrix& HarmonicEngine::boundary_basis(int p) const {
  return states_.at(static_cast<std::size_t>(p)).boundaries;
}

const CoboundaryBasis& HarmonicEngine::coboundary_basis(int p) const {
  return states_.at(static_cast<std::size_t>(p)).coboundary;
}

void HarmonicEngine::check_invariants() const {
  const ComplexIndex& index = filtration_.index();
  auto fail = [](const std::string& what) { throw InvariantViolation(what); };
  for (std::size_t p = 0; p < states_.size(); ++p) {
    const int degree = static_cast<int>(p);
    const DegreeState& state = states_[p];
    const std::string tag = " (degree " + std::to_string(p) + ", prefix " +
                            std::to_string(prefix_) + ")";

    for (std::size_t j = 0; j < state.harmonic.size(); ++j) {
      const auto& column = state.harmonic[j];
      if (j > 0 && state.harmonic[j - 1].birth >= column.birth) fail("H not sorted by birth" + tag);
      if (column.chain.empty()) fail("zero harmonic column" + tag);
      if (*column.chain.pivot() >= prefix_) fail("harmonic column outside K_i" + tag);
      if (!apply_boundary(column.chain, degree, index).empty()) fail("harmonic column not a cycle" + tag);
      if (!apply_coboundary(column.chain, degree, index, prefix_).empty()) {
        fail("harmonic column not a cocycle" + tag);
      }
    }

    if (!state.boundaries.has_distinct_pivots()) fail("R pivots not distinct" + tag);
    const CoboundaryBasis& basis = state.coboundary;
    if (basis.pseudo_cochains.size() != basis.size() || basis.boundaries.size() != basis.size()) {
      fail("SC/Cob/BoC misaligned" + tag);
    }
    if (!basis.boundaries.has_distinct_pivots()) fail("BoC pivots not distinct" + tag);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (!basis.boundaries.column_with_pivot(*basis.boundaries[j].pivot())) {
        fail("BoC pivot lookup stale" + tag);
      }
    }

    // Cob[j] = delta(psi_j): evaluate psi_j on the boundary of every
    // (p+1)-simplex through its expansion in R^p.
    std::vector<std::vector<SparseVector::Entry>> expected(basis.size());
    for (std::size_t tau : index.of_dim(degree + 1)) {
      if (tau >= prefix_) break;
      std::vector<SparseVector::Entry> facets;
      for (const auto& f : index.facets(tau)) facets.emplace_back(f.index, Rational(f.sign));
      Reduction red = reduce_against(SparseVector::from_entries(std::move(facets)), state.boundaries);
      if (!red.residual.empty()) fail("boundary not spanned by R" + tag);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        Rational value = 0;
        for (const auto& [k, mu] : red.coefficients) value += mu * basis.pseudo_cochains[j].coefficient(k);
        if (value != 0) expected[j].emplace_back(tau, value);
      }
    }
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (SparseVector::from_entries(std::move(expected[j])) != basis.coboundaries[j]) {
        fail("Cob[" + std::to_string(j) + "] != delta(SC[" + std::to_string(j) + "])" + tag);
      }
      if (apply_boundary(basis.coboundaries[j], degree + 1, index) != basis.boundaries[j]) {
        fail("BoC[" + std::to_string(j) + "] != boundary(Cob[" + std::to_string(j) + "])" + tag);
      }
    }
  }
}

Barcode compute_harmonic_barcode(const Filtration& filtration) {
  HarmonicEngine engine(filtration);
  return engine.finish();
}

}  // namespace hcb
