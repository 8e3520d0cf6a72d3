#include <sstream>

#include "doctest.h"

#include "hcb/errors.hpp"
#include "hcb/filtration.hpp"
#include "hcb/harmonic_engine.hpp"
#include "support.hpp"

using namespace hcb;

namespace {

Filtration parse(const std::string& text) {
  std::istringstream in(text);
  return parse_filtration(in);
}

std::vector<Simplex> triangle_complex() {
  std::istringstream in("0 1 2\n");
  return parse_complex(in);
}

}  // namespace

TEST_CASE("parses vertices with comments and rational timestamps") {
  const Filtration f = parse("# three points\n0 0\n1/2 1\n\n0.75 2\n");
  CHECK(f.size() == 3);
  CHECK(f[1].timestamp == Rational(1, 2));
  CHECK(f[2].timestamp == Rational(3, 4));
}

TEST_CASE("triangle fixture") {
  const Filtration f = hcb::test::load("triangle.txt");
  REQUIRE(f.size() == 7);
  const std::vector<int> dims{0, 0, 0, 1, 1, 1, 2};
  for (std::size_t i = 0; i < 7; ++i) CHECK(f[i].simplex.dim() == dims[i]);
}

TEST_CASE("face order violations name the offending line") {
  try {
    hcb::test::load("edge_before_vertex.txt");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
  CHECK_THROWS_AS(parse("0 0\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse("1 0\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse("0 0 x\n"), ParseError);
  CHECK_THROWS_AS(parse("0\n"), ParseError);
}

TEST_CASE("serialize then parse is the identity") {
  const Filtration f = parse("0 0\n1/3 1\n1/3 0 1\n2 2\n5/2 1 2\n5/2 0 2\n3 0 1 2\n");
  CHECK(parse(serialize_filtration(f)) == f);
  CHECK(parse("").empty());
}

TEST_CASE("timestamp map") {
  const TimestampMap tau = parse("0 0\n2 1\n").timestamps();
  CHECK(tau(1) == ExtendedRational(Rational(0)));
  CHECK(tau(2) == ExtendedRational(Rational(2)));
  CHECK(tau(3).is_infinite());
  CHECK_THROWS_AS(tau(0), std::out_of_range);
  CHECK_THROWS_AS(tau(4), std::out_of_range);
}

TEST_CASE("complex files are closed under faces") {
  const auto complex = triangle_complex();
  CHECK(complex.size() == 7);
  CHECK(complex.front() == Simplex{0});
  CHECK(complex.back() == Simplex{0, 1, 2});
}

TEST_CASE("lower-star order breaks ties by dimension then vertices") {
  const VertexFunction f{{0, Rational(0)}, {1, Rational(1)}, {2, Rational(2)}};
  const Filtration lower = lower_star_filtration(triangle_complex(), f);
  const std::vector<Simplex> expected{{0}, {1}, {0, 1}, {2}, {0, 2}, {1, 2}, {0, 1, 2}};
  const std::vector<int> times{0, 1, 1, 2, 2, 2, 2};
  REQUIRE(lower.size() == 7);
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(lower[i].simplex == expected[i]);
    CHECK(lower[i].timestamp == times[i]);
  }
}

TEST_CASE("lower-star order is invariant under constant shifts") {
  const VertexFunction f{{0, Rational(3)}, {1, Rational(-1)}, {2, Rational(1, 2)}};
  VertexFunction g = f;
  for (auto& [v, value] : g) value += 10;
  const Filtration a = lower_star_filtration(triangle_complex(), f);
  const Filtration b = lower_star_filtration(triangle_complex(), g);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].simplex == b[i].simplex);
    CHECK(b[i].timestamp == a[i].timestamp + 10);
  }
  const VertexFunction flat{{0, Rational(0)}, {1, Rational(0)}, {2, Rational(0)}};
  CHECK(lower_star_filtration(triangle_complex(), flat)[3].simplex == Simplex{0, 1});
  CHECK_THROWS_AS(lower_star_filtration(triangle_complex(), {{0, Rational(0)}}), ParseError);
}

TEST_CASE("closed-open conversion") {
  const VertexFunction f{{0, Rational(0)}, {1, Rational(1)}, {2, Rational(2)}};
  const Filtration lower = lower_star_filtration(triangle_complex(), f);
  const Barcode barcode = compute_harmonic_barcode(lower);
  // Integer bars [1,2] [2,4] [4,7] in degree 0 and [6,6] in degree 1; the
  // last one has tau(6) = tau(7) and collapses.
  REQUIRE(barcode.bars.size() == 4);
  const auto intervals = to_closed_open(barcode, lower.timestamps());
  REQUIRE(intervals.size() == 3);
  CHECK(intervals[0] == RealInterval{0, Rational(0), Rational(1)});
  CHECK(intervals[1] == RealInterval{0, Rational(1), Rational(2)});
  CHECK(intervals[2] == RealInterval{0, Rational(2), ExtendedRational::infinity()});
}
