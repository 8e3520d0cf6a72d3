#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "hcb/barcode.hpp"
#include "hcb/filtration.hpp"
#include "hcb/oracle.hpp"

namespace hcb {

/// Worker count: HCB_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned thread_limit();

/// Full verification of a computed barcode: certification, Betti curves,
/// endpoint law against ordinary persistence, and `norm_trials` random
/// coboundary perturbations per representative (failures tagged 'm').
oracle::Report verify_barcode(const Filtration& filtration, const Barcode& barcode,
                              std::size_t norm_trials, std::mt19937_64& rng);

struct FuzzOptions {
  std::uint64_t seed = 1;
  std::size_t count = 200;
  std::size_t max_m = 40;
  int max_dim = 3;
  std::size_t vertices = 7;
  std::size_t norm_trials = 20;
};

struct FuzzCase {
  std::uint64_t seed = 0;
  std::size_t m = 0;
  std::size_t bars = 0;
  oracle::Report report;
  /// Set when the engine itself threw.
  std::string error;
  bool pass() const { return error.empty() && report.pass(); }
};

/// Instance k uses seed `options.seed + k`; results are in instance order
/// regardless of the worker count.
std::vector<FuzzCase> run_fuzz(const FuzzOptions& options, unsigned threads);

}  // namespace hcb
