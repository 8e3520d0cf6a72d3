#include "hcb/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

#include "hcb/harmonic_engine.hpp"
#include "hcb/ordinary_persistence.hpp"
#include "hcb/random_filtration.hpp"

namespace hcb {

unsigned thread_limit() {
  if (const char* env = std::getenv("HCB_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

oracle::Report verify_barcode(const Filtration& filtration, const Barcode& barcode,
                              std::size_t norm_trials, std::mt19937_64& rng) {
  oracle::Report report = oracle::certify_barcode(filtration, barcode);
  report.merge(oracle::check_betti_curves(filtration, barcode));
  report.merge(oracle::check_endpoint_law(barcode, compute_ordinary_barcode(filtration)));
  for (std::size_t k = 0; k < barcode.bars.size(); ++k) {
    const Bar& bar = barcode.bars[k];
    if (bar.representative.empty() || bar.death > filtration.size() ||
        *bar.representative.pivot() >= filtration.size()) {
      continue;
    }
    const auto check = oracle::minimal_norm_check(filtration, bar.representative, bar.degree,
                                                  bar.death, norm_trials, rng);
    if (!check.pass) {
      report.failures.push_back({'m', k, bar.death, bar.degree, "perturbation decreased the norm"});
    }
  }
  return report;
}

std::vector<FuzzCase> run_fuzz(const FuzzOptions& options, unsigned threads) {
  std::vector<FuzzCase> cases(options.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < options.count; k = next++) {
      FuzzCase& c = cases[k];
      c.seed = options.seed + k;
      std::mt19937_64 rng(c.seed);
      const Filtration filtration =
          random_filtration(rng, {options.max_m, false, options.max_dim, options.vertices});
      c.m = filtration.size();
      try {
        HarmonicEngine engine(filtration);
        const Barcode barcode = engine.finish();
        c.bars = barcode.bars.size();
        c.report = verify_barcode(filtration, barcode, options.norm_trials, rng);
      } catch (const std::exception& e) {
        c.error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(options.count)));
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return cases;
}

}  // namespace hcb
