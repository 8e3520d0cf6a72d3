#include "doctest.h"

#include "hcb/ordinary_persistence.hpp"
#include "support.hpp"

using namespace hcb;

namespace {

std::vector<OrdinaryBar> degree(const std::vector<OrdinaryBar>& bars, int p) {
  std::vector<OrdinaryBar> out;
  for (const auto& bar : bars) {
    if (bar.degree == p) out.push_back(bar);
  }
  return out;
}

}  // namespace

TEST_CASE("elder rule on the triangle") {
  const auto bars = compute_ordinary_barcode(hcb::test::load("triangle.txt"));
  const std::vector<OrdinaryBar> zero{{0, 1, 7, DeathKind::end_of_filtration},
                                      {0, 2, 3, DeathKind::paired},
                                      {0, 3, 4, DeathKind::paired}};
  CHECK(degree(bars, 0) == zero);
  CHECK(degree(bars, 1) == std::vector<OrdinaryBar>{{1, 6, 6, DeathKind::paired}});
}

TEST_CASE("the youngest cycle dies when a triangle fills") {
  const auto bars = degree(compute_ordinary_barcode(hcb::test::load("two_cycles.txt")), 1);
  REQUIRE(bars.size() == 3);
  CHECK(bars[2].birth == 12);
  CHECK(bars[2].death == 12);
  CHECK(bars[0].death_kind == DeathKind::end_of_filtration);
}

TEST_CASE("single vertex") {
  const auto bars = compute_ordinary_barcode(Filtration::from_simplices({{0}}));
  CHECK(bars == std::vector<OrdinaryBar>{{0, 1, 1, DeathKind::end_of_filtration}});
}
