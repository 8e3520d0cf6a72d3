#include <fstream>
#include <sstream>

#include "doctest.h"

#include "hcb/barcode_io.hpp"
#include "hcb/errors.hpp"
#include "hcb/harmonic_engine.hpp"
#include "support.hpp"

using namespace hcb;

TEST_CASE("json round trip") {
  for (const char* name : {"triangle.txt", "two_cycles.txt"}) {
    const Filtration f = hcb::test::load(name);
    const Barcode barcode = compute_harmonic_barcode(f);
    const auto document = barcode_to_json(barcode, f.timestamps());
    CHECK(barcode_from_json(nlohmann::json::parse(document.dump())) == barcode);
  }
}

TEST_CASE("json schema of one bar") {
  const Filtration f = hcb::test::load("triangle.txt");
  const Barcode barcode = compute_harmonic_barcode(f);
  const auto bar = bar_to_json(barcode.bars.back(), f.timestamps());
  CHECK(bar["degree"] == 1);
  CHECK(bar["birth_index"] == 6);
  CHECK(bar["death_index"] == 6);
  CHECK(bar["birth_time"] == "5/1");
  CHECK(bar["death_time"] == "6/1");
  CHECK(bar["representative"] == nlohmann::json{{"4", "-1/1"}, {"5", "-1/1"}, {"6", "1/1"}});
  const auto last = bar_to_json(barcode.in_degree(0).back(), f.timestamps());
  CHECK(last["death_time"].is_null());
  CHECK(last["death_index"] == 7);
}

TEST_CASE("text rendering") {
  const Filtration f = hcb::test::load("triangle.txt");
  const Barcode barcode = compute_harmonic_barcode(f);
  CHECK(bar_to_text(barcode.bars.back(), f.timestamps(), false) == "1 [6,6] 5 6");
  CHECK(bar_to_text(barcode.bars.back(), f.timestamps(), true) == "1 [6,6] 5 6 rep:{4:-1,5:-1,6:1}");
  CHECK(bar_to_text(barcode.bars[2], f.timestamps(), false) == "0 [3,7] 2 inf");
}

TEST_CASE("malformed barcode documents") {
  CHECK_THROWS_AS(barcode_from_json(nlohmann::json::parse("[]")), ParseError);
  CHECK_THROWS_AS(barcode_from_json(nlohmann::json::parse(R"({"m": 1})")), ParseError);
  CHECK_THROWS_AS(
      barcode_from_json(nlohmann::json::parse(
          R"({"m": 1, "bars": [{"degree": 0, "birth_index": 1, "death_index": 1, "representative": {"0": "1"}}]})")),
      ParseError);
}

TEST_CASE("diagrams from text and from barcode json") {
  std::istringstream text("# degree birth death\n0 0 inf\n0 1 3\n1 2 5/2\n");
  const auto diagram = parse_diagram(text);
  REQUIRE(diagram.size() == 3);
  CHECK(diagram[0].death.is_infinite());
  CHECK(diagram[2] == RealInterval{1, Rational(2), Rational(5, 2)});

  const auto from_json = parse_diagram_file(hcb::test::fixture("triangle_barcode.json"));
  REQUIRE(from_json.size() == 4);
  CHECK(from_json[3] == RealInterval{1, Rational(5), Rational(6)});
}
