// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <ctime>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hcb/barcode_io.hpp"
#include "hcb/harmonic_engine.hpp"
#include "hcb/ordinary_persistence.hpp"
#include "hcb/oracle.hpp"
#include "hcb/random_filtration.hpp"
#include "hcb/stability.hpp"

using namespace hcb;

namespace {

std::string fixture(const std::string& name) { return std::string(HCB_FIXTURE_DIR) + "/" + name; }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double cpu_seconds() { return static_cast<double>(std::clock()) / CLOCKS_PER_SEC; }

int failures = 0;

void report(const std::string& id, bool pass, const std::string& detail) {
  std::cout << id << ' ' << (pass ? "PASS" : "FAIL") << "  " << detail << std::endl;
  if (!pass) ++failures;
}

SparseVector chain(std::vector<SparseVector::Entry> entries) {
  return SparseVector::from_entries(std::move(entries));
}

std::vector<std::pair<std::size_t, std::size_t>> intervals(const Barcode& barcode, int p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& bar : barcode.in_degree(p)) out.emplace_back(bar.birth, bar.death);
  return out;
}

// Three 1-cycles z4 = ab + bc - ac, z5 = -bc + be - ce, z7 = ab + be - ae are
// alive when the triangle abe arrives; they evaluate to 1, 1 and 3 on its
// boundary be - ae + ab.
void paper_example() {
  const auto start = std::chrono::steady_clock::now();
  const Filtration f = parse_filtration_file(fixture("two_cycles.txt"));
  HarmonicEngine engine(f);
  while (engine.prefix() < 12) engine.step();
  const SparseVector z4 = chain({{5, 1}, {6, 1}, {8, -1}});
  const SparseVector z5 = chain({{6, -1}, {7, 1}, {9, -1}});
  const SparseVector z7 = chain({{5, 1}, {7, 1}, {11, -1}});
  engine.replace_harmonic_basis(1, {{9, z4}, {10, z5}, {12, z7}});
  const InsertionEvent event = engine.step();

  std::vector<Rational> alphas;
  for (const auto& [birth, alpha] : event.evaluations) alphas.push_back(alpha);
  const bool evaluations = alphas == std::vector<Rational>{1, 1, 3};
  const bool paired = event.bar && event.bar->degree == 1 && event.bar->birth == 9 &&
                      event.bar->death == 12 && event.bar->representative == z4.normalized();
  const auto h = engine.harmonic_basis(1);
  const bool updated = h.size() == 2 && h[0].birth == 10 && h[0].chain == z5 - z4 &&
                       h[1].birth == 12 && h[1].chain == z7 - Rational(3) * z4;
  engine.check_invariants();
  const Barcode finished = engine.finish();
  const bool same_barcode = intervals(finished, 1) == intervals(compute_harmonic_barcode(f), 1);
  const double elapsed = seconds_since(start);

  std::ostringstream detail;
  detail << "evaluations (";
  for (std::size_t k = 0; k < alphas.size(); ++k) detail << (k ? "," : "") << alphas[k];
  detail << "), pairs birth 9 at 12, z5 := z5 - z4, z7 := z7 - 3 z4"
         << (updated ? "" : " [MISMATCH]") << ", " << elapsed << " s";
  report("AC1", evaluations && paired && updated && same_barcode && elapsed < 1.0, detail.str());
}

struct Instance {
  Filtration filtration;
  Barcode barcode;
};

std::vector<Instance> random_instances(std::size_t count) {
  std::vector<Instance> out;
  for (std::size_t seed = 1; seed <= count; ++seed) {
    std::mt19937_64 rng(seed);
    Filtration f = random_filtration(rng, {.max_m = 40, .max_dim = 3, .vertices = 7});
    Barcode b = compute_harmonic_barcode(f);
    out.push_back({std::move(f), std::move(b)});
  }
  return out;
}

void oracle_equivalence(const std::vector<Instance>& instances, double build_seconds) {
  const auto start = std::chrono::steady_clock::now();
  std::size_t bad = 0;
  std::size_t max_m = 0;
  int max_dim = 0;
  for (const auto& [f, b] : instances) {
    max_m = std::max(max_m, f.size());
    max_dim = std::max(max_dim, f.max_dim());
    if (!oracle::check_betti_curves(f, b).pass()) ++bad;
  }
  const double elapsed = build_seconds + seconds_since(start);
  std::ostringstream detail;
  detail << instances.size() << " filtrations (m <= " << max_m << ", dim <= " << max_dim
         << "), every prefix and degree, " << bad << " mismatches, " << elapsed << " s";
  report("AC2", bad == 0 && instances.size() >= 200 && max_m <= 40 && max_dim <= 3 && elapsed < 300,
         detail.str());
}

bool any_failure(const oracle::Report& r, char condition) {
  for (const auto& f : r.failures) {
    if (f.condition == condition) return true;
  }
  return false;
}

void certification(const std::vector<Instance>& instances) {
  std::vector<Instance> all = instances;
  for (const char* name : {"triangle.txt", "two_cycles.txt", "vertex.txt", "empty.txt"}) {
    Filtration f = parse_filtration_file(fixture(name));
    Barcode b = compute_harmonic_barcode(f);
    all.push_back({std::move(f), std::move(b)});
  }
  std::size_t certified = 0;
  std::size_t injected = 0;
  std::size_t caught = 0;
  for (const auto& [f, b] : all) {
    if (oracle::certify_barcode(f, b).pass()) ++certified;
    for (std::size_t k = 0; k < b.bars.size(); ++k) {
      Barcode zeroed = b;
      zeroed.bars[k].representative = SparseVector();
      ++injected;
      caught += any_failure(oracle::certify_barcode(f, zeroed), 'a') ? 1 : 0;

      if (b.bars[k].death_kind != DeathKind::paired) continue;
      Barcode later = b;
      later.bars[k].death += 1;
      ++injected;
      caught += any_failure(oracle::certify_barcode(f, later), 'b') ? 1 : 0;
      if (b.bars[k].death > b.bars[k].birth) {
        Barcode earlier = b;
        earlier.bars[k].death -= 1;
        ++injected;
        caught += any_failure(oracle::certify_barcode(f, earlier), 'b') ? 1 : 0;
      }
    }
  }
  std::ostringstream detail;
  detail << certified << "/" << all.size() << " barcodes certified, " << caught << "/" << injected
         << " injected faults rejected";
  report("AC3", certified == all.size() && caught == injected, detail.str());
}

void endpoint_law(const std::vector<Instance>& instances) {
  std::size_t agree = 0;
  for (const auto& [f, b] : instances) {
    if (oracle::check_endpoint_law(b, compute_ordinary_barcode(f)).pass()) ++agree;
  }
  std::ostringstream detail;
  detail << agree << "/" << instances.size() << " filtrations with equal birth and death multisets";
  report("AC4", agree == instances.size(), detail.str());
}

void minimal_norm(const std::vector<Instance>& instances) {
  std::mt19937_64 rng(2718);
  std::size_t checked = 0;
  std::size_t trials = 0;
  std::size_t strict = 0;
  std::size_t bad = 0;
  for (const auto& [f, b] : instances) {
    for (const auto& bar : b.bars) {
      for (std::size_t prefix : {bar.birth, bar.death}) {
        const auto check =
            oracle::minimal_norm_check(f, bar.representative, bar.degree, prefix, 20, rng);
        ++checked;
        trials += check.trials;
        strict += check.strict;
        if (!check.pass) ++bad;
      }
    }
  }
  std::ostringstream detail;
  detail << checked << " representatives x 20 perturbations (" << trials << " trials, " << strict
         << " strict increases), " << bad << " violations";
  report("AC5", bad == 0 && trials == 20 * checked, detail.str());
}

void stability() {
  const auto start = std::chrono::steady_clock::now();
  const auto complex = parse_complex_file(fixture("stability.complex"));
  std::mt19937_64 rng(31415);
  std::size_t violations = 0;
  std::size_t tight = 0;
  const int pairs = 100;
  for (int k = 0; k < pairs; ++k) {
    const auto f = random_vertex_function(rng, complex, 12, 4);
    const auto g = random_vertex_function(rng, complex, 12, 4);
    const StabilityReport r = stability_experiment(complex, f, g);
    if (!r.bound_holds) ++violations;
    if (r.max_distance == ExtendedRational(r.sup_norm)) ++tight;
  }
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << pairs << " function pairs on " << complex.size() << " simplices, " << violations
         << " violations (" << tight << " with equality), " << elapsed << " s";
  report("AC6", violations == 0 && elapsed < 120, detail.str());
}

void triangle() {
  const Filtration f = parse_filtration_file(fixture("triangle.txt"));
  const Barcode b = compute_harmonic_barcode(f);
  using Intervals = std::vector<std::pair<std::size_t, std::size_t>>;
  const bool zero = intervals(b, 0) == Intervals{{1, 3}, {2, 4}, {3, 7}};
  const bool one = intervals(b, 1) == Intervals{{6, 6}};
  const bool only = b.max_degree() == 1;
  const bool oracle_agrees = oracle::certify_barcode(f, b).pass();
  report("AC7", zero && one && only && oracle_agrees,
         "degree 0 {[1,3],[2,4],[3,7]}, degree 1 {[6,6]}, certified by the oracle");
}

// Parse, compute and serialize, as the compute subcommand does.
double compute_cpu_seconds(const std::string& text) {
  const double start = cpu_seconds();
  std::istringstream in(text);
  const Filtration f = parse_filtration(in);
  const Barcode b = compute_harmonic_barcode(f);
  const std::string json = barcode_to_json(b, f.timestamps()).dump(2);
  if (json.empty()) std::abort();
  return cpu_seconds() - start;
}

void complexity() {
  const std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5, 6, 7, 8};
  auto total = [&](std::size_t m, double& slowest) {
    double sum = 0;
    for (std::uint64_t seed : seeds) {
      std::mt19937_64 rng(seed);
      const Filtration f =
          random_filtration(rng, {.max_m = m, .exact_m = true, .max_dim = 3, .vertices = m / 10});
      const double t = compute_cpu_seconds(serialize_filtration(f));
      slowest = std::max(slowest, t);
      sum += t;
    }
    return sum;
  };
  double slowest_250 = 0;
  double slowest_500 = 0;
  const double t250 = total(250, slowest_250);
  const double t500 = total(500, slowest_500);
  const double ratio = t500 / t250;
  std::ostringstream detail;
  detail.precision(3);
  detail << "m = 500: slowest of " << seeds.size() << " runs " << slowest_500
         << " s; total CPU m = 250: " << t250 << " s, m = 500: " << t500 << " s, ratio " << ratio;
  report("AC8", slowest_500 < 60 && ratio <= 10, detail.str());
}

}  // namespace

int main() {
  paper_example();
  const auto start = std::chrono::steady_clock::now();
  const auto instances = random_instances(200);
  const double build_seconds = seconds_since(start);
  oracle_equivalence(instances, build_seconds);
  certification(instances);
  endpoint_law(instances);
  minimal_norm(instances);
  stability();
  triangle();
  complexity();
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
