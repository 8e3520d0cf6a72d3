#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hcb/barcode.hpp"
#include "hcb/filtration.hpp"
#include "hcb/ordinary_persistence.hpp"
#include "hcb/sparse_vector.hpp"

// Brute-force ground truth by dense exact linear algebra. Costs grow like
// m * n^3; meant for fixtures and fuzz instances of a few dozen simplices.
namespace hcb::oracle {

/// Linearly independent vectors (global simplex indexing) spanning a subspace
/// of C_p(K_prefix).
struct SubspaceBasis {
  int degree = 0;
  std::size_t prefix = 0;
  std::vector<SparseVector> vectors;

  std::size_t dim() const { return vectors.size(); }
  /// Rank test: rank(basis) == rank(basis + v).
  bool contains(const SparseVector& v) const;
};

/// Kernel of the stacked operator [boundary_p ; coboundary_p] on K_prefix.
SubspaceBasis harmonic_space(const Filtration& filtration, std::size_t prefix, int p);

/// n_p - rank(boundary_p) - rank(boundary_{p+1}) on K_prefix.
std::size_t betti_number(const Filtration& filtration, std::size_t prefix, int p);

struct Failure {
  /// 'a' birth condition, 'b' death condition, 'c' basis at a prefix,
  /// 'n' Betti-curve count, 'e' endpoint multisets.
  char condition = 'a';
  std::optional<std::size_t> bar;
  std::size_t prefix = 0;
  int degree = 0;
  std::string detail;
};

struct Report {
  std::vector<Failure> failures;
  bool pass() const { return failures.empty(); }
  void merge(const Report& other) {
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

/// For every bar [b, d] with representative z in degree p:
///  (a) z in Har_p(K_b) and z not in Har_p(K_{b-1});
///  (b) if paired, z in Har_p(K_d) and z not in Har_p(K_{d+1});
///      if unpaired, d = m;
///  (c) at every prefix i the representatives of bars containing i form a
///      basis of Har_p(K_i).
Report certify_barcode(const Filtration& filtration, const Barcode& barcode);

/// #bars containing i == dim Har_p(K_i) == beta_p(K_i) for all i and p.
Report check_betti_curves(const Filtration& filtration, const Barcode& barcode);

/// Per degree, birth and death index multisets agree with the ordinary barcode.
Report check_endpoint_law(const Barcode& harmonic, const std::vector<OrdinaryBar>& ordinary);

struct NormCheck {
  bool pass = true;
  std::size_t trials = 0;
  /// Trials where the perturbation was nonzero (and the norm grew strictly).
  std::size_t strict = 0;
};

/// ||z||^2 <= ||z + delta(gamma)||^2 for random (p-1)-cochains gamma on
/// K_prefix with integer coefficients in [-bound, bound], with equality
/// exactly when delta(gamma) = 0.
NormCheck minimal_norm_check(const Filtration& filtration, const SparseVector& z, int p,
                             std::size_t prefix, std::size_t trials, std::mt19937_64& rng,
                             int bound = 3);

}  // namespace hcb::oracle
