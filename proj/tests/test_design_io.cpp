#include "doctest.h"
#include "tdl/constructions.hpp"
#include "tdl/design_io.hpp"
#include "tdl/verify.hpp"

using namespace tdl;
using tdl::io::json;

TEST_CASE("rational and float token parsing") {
  CHECK(*parse_rational("3/4") == make_rational(3, 4));
  CHECK(*parse_rational("-12") == -12);
  CHECK(!parse_rational("0.5").has_value());
  CHECK(!parse_rational("1e3").has_value());
  CHECK(!parse_rational("1/").has_value());
  CHECK(!parse_rational("1/0").has_value());
  CHECK(!parse_rational("").has_value());
  CHECK(*parse_double("0.5") == 0.5);
  CHECK(!parse_double("abc").has_value());
  SUBCASE("format_double round-trips exactly") {
    for (double v : {1.0, -0.3333333333333333, 0.7071067811865476, 1e-300, 12345.678901234567}) {
      CHECK(*parse_double(format_double(v)) == v);
    }
  }
}

TEST_CASE("design round trip") {
  SUBCASE("rational design: exact backend selected, coordinates exact") {
    const auto e8 = e8_roots();
    const json j = io::design_to_json(e8, json{{"name", "e8"}});
    const auto loaded = io::load_design(j);
    CHECK(loaded.all_rational);
    REQUIRE(loaded.exact.has_value());
    REQUIRE(loaded.exact->size() == e8.size());
    for (size_t i = 0; i < e8.size(); ++i) {
      CHECK(loaded.exact->points()[i].coords == e8.points()[i].coords);
      CHECK(loaded.exact->points()[i].weight == e8.points()[i].weight);
    }
  }
  SUBCASE("float design: 1-ulp round trip selects the float backend") {
    const auto oct = two_octagons(1, 2, 1);
    const json j = io::design_to_json(oct);
    const auto loaded = io::load_design(j);
    CHECK(!loaded.all_rational);
    REQUIRE(loaded.approx.size() == oct.size());
    for (size_t i = 0; i < oct.size(); ++i) {
      CHECK(loaded.approx.points()[i].coords == oct.points()[i].coords);  // bit-exact
      CHECK(loaded.approx.points()[i].weight == oct.points()[i].weight);
    }
    CHECK(design_strength(loaded.approx, 10) == 9);
  }
  SUBCASE("serialization is deterministic") {
    const json a = io::design_to_json(two_octagons(1, 2, 1));
    const json b = io::design_to_json(two_octagons(1, 2, 1));
    CHECK(a.dump() == b.dump());
  }
}

TEST_CASE("malformed design files") {
  const char* cases[] = {
      R"({"dimension": 2})",
      R"({"dimension": 0, "points": [{"coords": [], "weight": "1"}]})",
      R"({"dimension": 2, "points": []})",
      R"({"dimension": 2, "points": [{"coords": ["1"], "weight": "1"}]})",
      R"({"dimension": 2, "points": [{"coords": ["1", "x"], "weight": "1"}]})",
      R"({"dimension": 2, "points": [{"coords": ["1", "0"], "weight": "0"}]})",
      R"({"dimension": 2, "points": [{"coords": ["1", "0"], "weight": "-2"}]})",
      R"({"dimension": 2, "points": [{"coords": ["1", "0"], "weight": "1"},
                                     {"coords": ["1", "0"], "weight": "1"}]})",
      R"({"schema": "something.else", "dimension": 2,
          "points": [{"coords": ["1", "0"], "weight": "1"}]})",
  };
  for (const char* text : cases) {
    CHECK_THROWS_AS(io::load_design(json::parse(text)), io::DesignParseError);
  }
}

TEST_CASE("report serialization") {
  SUBCASE("design report fields") {
    const auto rep = classify_tightness(two_octagons(1, 2, 1), 9);
    const json j = io::to_json(rep);
    CHECK(j["classification"] == "tight design");
    CHECK(j["size"] == "16");
    CHECK(j["moeller_bound"] == "16");
    CHECK(j["design"]["pass"] == true);
    CHECK(j["design"]["per_degree"].size() == 10);
  }
  SUBCASE("range certificate fields") {
    const auto cert = nonexistence::certify_range(3, 30);
    const json j = io::to_json(cert);
    CHECK(j["verdict"] == "excluded");
    CHECK(j["range"][0] == "3");
    CHECK(j["range"][1] == "30");
    REQUIRE(j["admissible"].size() == 1);
    CHECK(j["admissible"][0] == "23");
    CHECK(j["counterexample_candidates"].empty());
    CHECK(j.contains("engine_version"));
  }
  SUBCASE("case reports carry the failing step") {
    const json j1 = io::to_json(nonexistence::case1_certify(23));
    CHECK(j1["excluded"] == true);
    CHECK(j1["step"] == "no-integral-N2");
    CHECK(j1["k"] == "10");
    const json j2 = io::to_json(nonexistence::case2_certify(23));
    CHECK(j2["excluded"] == true);
    CHECK(j2["step"] == "divisibility");
  }
  SUBCASE("envelope") {
    const json env = io::report_envelope("bound", json{{"dim", 2}}, json{{"bound", "16"}});
    CHECK(env["schema"] == io::kReportSchema);
    CHECK(env["engine"]["name"] == "tdl");
    CHECK(env["command"] == "bound");
  }
}
