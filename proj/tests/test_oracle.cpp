#include <random>

#include "doctest.h"

#include "hcb/fuzz.hpp"
#include "hcb/harmonic_engine.hpp"
#include "hcb/ordinary_persistence.hpp"
#include "hcb/oracle.hpp"
#include "support.hpp"

using namespace hcb;
using hcb::test::vec;

TEST_CASE("harmonic spaces and Betti numbers of the triangle") {
  const Filtration f = hcb::test::load("triangle.txt");
  CHECK(oracle::betti_number(f, 3, 0) == 3);
  CHECK(oracle::betti_number(f, 6, 1) == 1);
  CHECK(oracle::betti_number(f, 7, 1) == 0);
  const auto har = oracle::harmonic_space(f, 6, 1);
  REQUIRE(har.dim() == 1);
  CHECK(har.contains(vec({{3, 1}, {4, 1}, {5, -1}})));
  CHECK_FALSE(har.contains(vec({{3, 1}})));
  // In K_4 = {a, b, c, ab} the harmonic 0-chains are the constants on {a, b} and c.
  const auto h0 = oracle::harmonic_space(f, 4, 0);
  CHECK(h0.dim() == 2);
  CHECK(h0.contains(vec({{0, 1}, {1, 1}})));
  CHECK_FALSE(h0.contains(vec({{0, 1}})));
}

TEST_CASE("certification passes on computed barcodes") {
  for (const char* name : {"triangle.txt", "two_cycles.txt"}) {
    const Filtration f = hcb::test::load(name);
    const Barcode barcode = compute_harmonic_barcode(f);
    CHECK(oracle::certify_barcode(f, barcode).pass());
    CHECK(oracle::check_betti_curves(f, barcode).pass());
    CHECK(oracle::check_endpoint_law(barcode, compute_ordinary_barcode(f)).pass());
  }
}

TEST_CASE("fault injection is caught") {
  const Filtration f = hcb::test::load("triangle.txt");
  const Barcode good = compute_harmonic_barcode(f);

  Barcode zeroed = good;
  zeroed.bars[3].representative = SparseVector();
  const auto r1 = oracle::certify_barcode(f, zeroed);
  CHECK_FALSE(r1.pass());
  CHECK(r1.failures.front().condition == 'a');

  Barcode shifted = good;
  shifted.bars[0].death += 1;
  const auto r2 = oracle::certify_barcode(f, shifted);
  CHECK_FALSE(r2.pass());
  bool death_condition = false;
  for (const auto& failure : r2.failures) death_condition |= failure.condition == 'b';
  CHECK(death_condition);

  Barcode swapped = good;
  std::swap(swapped.bars[0].representative, swapped.bars[1].representative);
  CHECK_FALSE(oracle::certify_barcode(f, swapped).pass());

  std::vector<OrdinaryBar> ordinary = compute_ordinary_barcode(f);
  ordinary[1].death = 5;
  CHECK_FALSE(oracle::check_endpoint_law(good, ordinary).pass());
}

TEST_CASE("representatives have minimal norm in their cohomology class") {
  const Filtration f = hcb::test::load("two_cycles.txt");
  std::mt19937_64 rng(5);
  for (const auto& bar : compute_harmonic_barcode(f).bars) {
    const auto check = oracle::minimal_norm_check(f, bar.representative, bar.degree, bar.birth, 20, rng);
    CHECK(check.pass);
    CHECK(check.trials == 20);
  }
  // For a cycle z, <z, delta gamma> = <boundary z, gamma> = 0, so only
  // non-cycles can be beaten.
  CHECK(oracle::minimal_norm_check(f, vec({{5, 1}, {6, 1}, {8, -1}}), 1, 12, 20, rng).pass);
  const auto loose = oracle::minimal_norm_check(f, Rational(3) * SparseVector::unit(5), 1, 12, 50, rng);
  CHECK_FALSE(loose.pass);
}

TEST_CASE("fuzzing is deterministic and thread-count independent") {
  const FuzzOptions options{.seed = 11, .count = 12, .max_m = 25};
  const auto one = run_fuzz(options, 1);
  const auto many = run_fuzz(options, 4);
  REQUIRE(one.size() == 12);
  for (std::size_t k = 0; k < one.size(); ++k) {
    CHECK(one[k].pass());
    CHECK(one[k].seed == 11 + k);
    CHECK(one[k].m == many[k].m);
    CHECK(one[k].bars == many[k].bars);
  }
}
