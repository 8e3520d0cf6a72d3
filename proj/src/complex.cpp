#include "hcb/complex.hpp"

#include <algorithm>
#include <stdexcept>

#include "hcb/errors.hpp"

namespace hcb {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("simplex needs at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw std::invalid_argument("simplex has a repeated vertex");
  }
}

Simplex Simplex::facet(std::size_t q) const {
  Simplex face;
  face.vertices_.reserve(vertices_.size() - 1);
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (k != q) face.vertices_.push_back(vertices_[k]);
  }
  return face;
}

std::string Simplex::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(vertices_[k]);
  }
  return out + "]";
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t seed = s.vertices().size();
  for (Vertex v : s.vertices()) {
    seed ^= std::hash<Vertex>{}(v) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}

std::size_t ComplexIndex::add(const Simplex& s) {
  if (lookup_.contains(s)) {
    throw std::invalid_argument("simplex " + s.to_string() + " is already indexed");
  }
  const std::size_t i = simplices_.size();
  std::vector<Incidence> facets;
  if (s.dim() > 0) {
    facets.reserve(s.vertices().size());
    for (std::size_t q = 0; q < s.vertices().size(); ++q) {
      Simplex face = s.facet(q);
      auto it = lookup_.find(face);
      if (it == lookup_.end()) {
        throw MissingFaceError("face " + face.to_string() + " of " + s.to_string() +
                               " is not present");
      }
      facets.push_back({it->second, q % 2 == 0 ? 1 : -1});
    }
  }
  for (const auto& f : facets) cofacets_[f.index].push_back({i, f.sign});
  simplices_.push_back(s);
  facets_.push_back(std::move(facets));
  cofacets_.emplace_back();
  const auto p = static_cast<std::size_t>(s.dim());
  if (by_dim_.size() <= p) by_dim_.resize(p + 1);
  by_dim_[p].push_back(i);
  lookup_.emplace(s, i);
  max_dim_ = std::max(max_dim_, s.dim());
  return i;
}

std::optional<std::size_t> ComplexIndex::find(const Simplex& s) const {
  auto it = lookup_.find(s);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::span<const std::size_t> ComplexIndex::of_dim(int p) const {
  if (p < 0 || static_cast<std::size_t>(p) >= by_dim_.size()) return {};
  return by_dim_[static_cast<std::size_t>(p)];
}

SparseVector boundary_of_simplex(const Simplex& s, const ComplexIndex& index) {
  if (s.dim() == 0) return {};
  std::vector<SparseVector::Entry> entries;
  for (std::size_t q = 0; q < s.vertices().size(); ++q) {
    Simplex face = s.facet(q);
    auto i = index.find(face);
    if (!i) {
      throw MissingFaceError("face " + face.to_string() + " of " + s.to_string() +
                             " is not present");
    }
    entries.emplace_back(*i, Rational(q % 2 == 0 ? 1 : -1));
  }
  return SparseVector::from_entries(std::move(entries));
}

namespace {

void require_degree(const SparseVector& v, int p, const ComplexIndex& index) {
  for (const auto& [i, value] : v.entries()) {
    if (i >= index.size() || index.dim(i) != p) {
      throw DegreeMismatchError("entry " + std::to_string(i) + " is not a " + std::to_string(p) +
                                "-simplex");
    }
  }
}

}  // namespace

SparseVector apply_boundary(const SparseVector& chain, int p, const ComplexIndex& index) {
  require_degree(chain, p, index);
  std::vector<SparseVector::Entry> entries;
  for (const auto& [i, value] : chain.entries()) {
    for (const auto& f : index.facets(i)) entries.emplace_back(f.index, f.sign * value);
  }
  return SparseVector::from_entries(std::move(entries));
}

SparseVector apply_coboundary(const SparseVector& cochain, int p, const ComplexIndex& index,
                              std::size_t prefix) {
  require_degree(cochain, p, index);
  std::vector<SparseVector::Entry> entries;
  for (const auto& [i, value] : cochain.entries()) {
    if (i >= prefix) continue;
    for (const auto& c : index.cofacets(i)) {
      if (c.index < prefix) entries.emplace_back(c.index, c.sign * value);
    }
  }
  return SparseVector::from_entries(std::move(entries));
}

}  // namespace hcb
