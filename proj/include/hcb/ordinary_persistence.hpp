#pragma once

#include <cstddef>
#include <vector>

#include "hcb/barcode.hpp"
#include "hcb/filtration.hpp"

namespace hcb {

/// Ordinary persistence bar in the same closed integer convention as the
/// harmonic barcode: alive in K_birth .. K_death.
struct OrdinaryBar {
  int degree = 0;
  std::size_t birth = 0;
  std::size_t death = 0;
  DeathKind death_kind = DeathKind::paired;
  friend bool operator==(const OrdinaryBar&, const OrdinaryBar&) = default;
};

/// Standard column reduction over the rationals; a negative simplex kills the
/// youngest class (the pivot of its reduced boundary). Sorted by (degree, birth).
std::vector<OrdinaryBar> compute_ordinary_barcode(const Filtration& filtration);

}  // namespace hcb
