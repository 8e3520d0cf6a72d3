#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hcb/sparse_vector.hpp"

namespace hcb {

using Vertex = std::uint32_t;

/// Oriented simplex; vertices are kept strictly ascending, which fixes the
/// orientation used by the boundary sign convention.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts the vertices. Throws std::invalid_argument on an empty list or a
  /// repeated vertex.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  std::span<const Vertex> vertices() const { return vertices_; }

  /// The face omitting the q-th vertex.
  Simplex facet(std::size_t q) const;

  std::string to_string() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;

 private:
  std::vector<Vertex> vertices_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

/// A face or coface together with its incidence sign.
struct Incidence {
  std::size_t index;
  int sign;
};

/// Global index of simplices in insertion order, with face and coface
/// incidences precomputed. Every face is indexed before its cofaces.
class ComplexIndex {
 public:
  /// Indexes `s` as the next simplex. Throws MissingFaceError if a facet is
  /// not yet indexed and std::invalid_argument if `s` is already present.
  std::size_t add(const Simplex& s);

  std::size_t size() const { return simplices_.size(); }
  std::optional<std::size_t> find(const Simplex& s) const;
  const Simplex& simplex(std::size_t i) const { return simplices_[i]; }
  int dim(std::size_t i) const { return simplices_[i].dim(); }
  int max_dim() const { return max_dim_; }

  /// Facets of simplex i with signs (-1)^q.
  std::span<const Incidence> facets(std::size_t i) const { return facets_[i]; }
  /// Cofaces (one dimension up) of simplex i, with the sign of i in their boundary.
  std::span<const Incidence> cofacets(std::size_t i) const { return cofacets_[i]; }
  /// Global indices of p-simplices, ascending.
  std::span<const std::size_t> of_dim(int p) const;

 private:
  std::vector<Simplex> simplices_;
  std::vector<std::vector<Incidence>> facets_;
  std::vector<std::vector<Incidence>> cofacets_;
  std::vector<std::vector<std::size_t>> by_dim_;
  std::unordered_map<Simplex, std::size_t, SimplexHash> lookup_;
  int max_dim_ = -1;
};

/// sum_q (-1)^q [v_0 .. v_q^ .. v_p]; empty for a vertex.
SparseVector boundary_of_simplex(const Simplex& s, const ComplexIndex& index);

/// Linear extension of the simplex boundary to a degree-p chain.
/// Throws DegreeMismatchError if `chain` has an entry that is not a p-simplex.
SparseVector apply_boundary(const SparseVector& chain, int p, const ComplexIndex& index);

/// (delta v)(tau) = v(boundary tau) for every (p+1)-simplex tau among the first
/// `prefix` indexed simplices. Throws DegreeMismatchError like apply_boundary.
SparseVector apply_coboundary(const SparseVector& cochain, int p, const ComplexIndex& index,
                              std::size_t prefix);
inline SparseVector apply_coboundary(const SparseVector& cochain, int p,
                                     const ComplexIndex& index) {
  return apply_coboundary(cochain, p, index, index.size());
}

}  // namespace hcb
