#include <cmath>

#include "doctest.h"
#include "tdl/constructions.hpp"
#include "tdl/moments.hpp"
#include "tdl/verify.hpp"

using namespace tdl;

TEST_CASE("two_octagons") {
  const auto cfg = two_octagons(1, 2, 1);
  REQUIRE(cfg.size() == 16);
  const auto part = partition_shells(cfg);
  REQUIRE(part.p() == 2);
  CHECK(part.shells[0].count() == 8);
  CHECK(part.shells[1].count() == 8);
  CHECK(cfg[8].weight == doctest::Approx(1.0 / 256).epsilon(1e-14));
  CHECK(is_antipodal(cfg).has_value());

  SUBCASE("strength is exactly 9") {
    CHECK(design_strength(cfg, 12) == 9);
  }
  SUBCASE("swapped radii: w2 = 256, still strength 9") {
    const auto swapped = two_octagons(2, 1, 1);
    CHECK(partition_shells(swapped).shells[1].min_weight == doctest::Approx(1.0));
    CHECK(swapped[8].weight == doctest::Approx(256.0));
    CHECK(design_strength(swapped, 10) == 9);
  }
  SUBCASE("equal radii are rejected") {
    CHECK_THROWS_AS(two_octagons(1, 1, 1), std::invalid_argument);
  }
  SUBCASE("general radii keep the cross profile at 4 values") {
    const auto other = two_octagons(0.5, 1.75, 2);
    const auto prof = inner_product_profile(other);
    CHECK(prof.cross_set(0, 1).size() == 4);
    CHECK(design_strength(other, 10) == 9);
  }
}

TEST_CASE("regular_polygon") {
  SUBCASE("octagon is a tight spherical 7-design") {
    const auto cfg = regular_polygon(8, 1, 1);
    CHECK(design_strength(cfg, 9) == 7);
    const auto cls = classify_tightness(cfg, 7);
    CHECK(cls.kind == Tightness::kTightDesign);
    CHECK(cls.bound == 8);
  }
  SUBCASE("triangle has strength 2") {
    CHECK(design_strength(regular_polygon(3, 1, 1), 5) == 2);
  }
  SUBCASE("square equals cross_polytope(2)") {
    const auto sq = regular_polygon(4, 1, 1);
    CHECK(design_strength(sq, 5) == 3);
    CHECK(is_antipodal(sq).has_value());
  }
  SUBCASE("strength m-1 for m = 3..12") {
    for (unsigned m = 3; m <= 12; ++m)
      CHECK(design_strength(regular_polygon(m, 1, 1), m + 1) == static_cast<int>(m) - 1);
  }
  CHECK_THROWS_AS(regular_polygon(2, 1, 1), std::invalid_argument);
}

TEST_CASE("cross_polytope") {
  const auto cfg = cross_polytope(3, 1, 1);
  REQUIRE(cfg.size() == 6);
  CHECK(design_strength(cfg, 5) == 3);
  CHECK(is_antipodal(cfg).has_value());
  for (unsigned n : {2u, 4u, 7u}) CHECK(is_antipodal(cross_polytope(n, 1, 1)).has_value());
}

TEST_CASE("e8_roots") {
  const auto cfg = e8_roots();
  REQUIRE(cfg.size() == 240);
  // 240 = (1/3) n (n+1) (n+2) at n = 8.
  CHECK(240 == 8 * 9 * 10 / 3);
  CHECK(is_antipodal(cfg).has_value());

  const auto part = partition_shells(cfg);
  REQUIRE(part.p() == 1);
  CHECK(part.shells[0].radius_sq == 2);

  SUBCASE("pairwise inner products are {-2, -1, 0, 1} at squared radius 2") {
    const auto prof = inner_product_profile(cfg, part);
    const auto& a = prof.within[0];
    REQUIRE(a.size() == 4);
    CHECK(a.values[0] == -1);  // normalized by r^2 = 2
    mpq_class half(1, 2);
    CHECK(a.values[1] == -half);
    CHECK(a.values[2] == 0);
    CHECK(a.values[3] == half);
    for (size_t i = 0; i < cfg.size(); ++i)
      for (size_t j = i + 1; j < cfg.size(); ++j) {
        mpq_class dot(0);
        for (unsigned c = 0; c < 8; ++c) dot += cfg[i].coords[c] * cfg[j].coords[c];
        CHECK((dot == -2 || dot == -1 || dot == 0 || dot == 1 || dot == 2));
      }
  }
  SUBCASE("not an 8-design: explicit witness x1^8") {
    // 28 type-(1,1) roots hit |x1| = 1, the 128 half-integer roots give 1/2;
    // the measure side is 240 * 2^4 * (7!! / (8*10*12*14)) = 30.
    mpq_class point_side(0);
    for (const auto& pt : cfg.points()) {
      mpq_class v(1);
      for (int k = 0; k < 8; ++k) v *= pt.coords[0];
      point_side += pt.weight * v;
    }
    mpq_class expected_point(57, 2);
    CHECK(point_side == expected_point);
    const auto measures = part.measures();
    const mpq_class measure =
        measure_side_monomial<mpq_class>(measures, 8, Monomial({8, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(measure == 30);
    CHECK(point_side != measure);
  }
  SUBCASE("passes strength 5 exactly on the rational backend") {
    CHECK(design_residuals(cfg, 5).pass);
  }
}
