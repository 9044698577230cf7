#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "tdl/configspace.hpp"
#include "tdl/constructions.hpp"
#include "test_util.hpp"

using namespace tdl;

TEST_CASE("partition_shells") {
  SUBCASE("two octagons") {
    const auto part = partition_shells(two_octagons(1, 2, 1));
    REQUIRE(part.p() == 2);
    CHECK(part.shells[0].count() == 8);
    CHECK(part.shells[1].count() == 8);
    CHECK(part.shells[0].radius_sq == doctest::Approx(1.0));
    CHECK(part.shells[1].radius_sq == doctest::Approx(4.0));
    CHECK(!part.has_origin());
  }
  SUBCASE("cross-polytope") {
    for (unsigned n : {2u, 3u, 6u}) {
      const auto part = partition_shells(cross_polytope(n, 1, 1));
      REQUIRE(part.p() == 1);
      CHECK(part.shells[0].count() == 2 * n);
    }
  }
  SUBCASE("single point") {
    WeightedPointSet<mpq_class> cfg(3);
    cfg.add({1, 2, 2}, 1);
    const auto part = partition_shells(cfg);
    REQUIRE(part.p() == 1);
    CHECK(part.shells[0].count() == 1);
    CHECK(part.shells[0].radius_sq == 9);
  }
  SUBCASE("origin point becomes a flag, not a shell") {
    WeightedPointSet<mpq_class> cfg(2);
    cfg.add({0, 0}, 3);
    cfg.add({1, 0}, 1);
    const auto part = partition_shells(cfg);
    CHECK(part.p() == 1);
    REQUIRE(part.has_origin());
    CHECK(part.origin_members.size() == 1);
  }
  SUBCASE("radii ascend and members are exhaustive") {
    std::mt19937_64 rng(99);
    WeightedPointSet<mpq_class> cfg(2);
    for (int i = 0; i < 12; ++i) {
      mpq_class r = tdl::test::random_positive_rational(rng, 5, 3);
      cfg.add({r, mpq_class(i)}, 1);
    }
    const auto part = partition_shells(cfg);
    size_t total = part.origin_members.size();
    for (size_t s = 0; s < part.p(); ++s) {
      total += part.shells[s].count();
      if (s > 0) CHECK(part.shells[s - 1].radius_sq < part.shells[s].radius_sq);
    }
    CHECK(total == cfg.size());
  }
}

TEST_CASE("inner_product_profile") {
  SUBCASE("octagon cross set is the four cos(k pi/8), k odd") {
    const auto prof = inner_product_profile(two_octagons(1, 2, 1));
    const auto& cross = prof.cross_set(0, 1);
    REQUIRE(cross.size() == 4);
    const double c1 = std::cos(std::numbers::pi / 8);
    const double c3 = std::cos(3 * std::numbers::pi / 8);
    CHECK(cross.values[0] == doctest::Approx(-c1).epsilon(1e-12));
    CHECK(cross.values[1] == doctest::Approx(-c3).epsilon(1e-12));
    CHECK(cross.values[2] == doctest::Approx(c3).epsilon(1e-12));
    CHECK(cross.values[3] == doctest::Approx(c1).epsilon(1e-12));
  }
  SUBCASE("octagon alone: {-1, -1/sqrt2, 0, 1/sqrt2}") {
    const auto prof = inner_product_profile(regular_polygon(8, 1, 1));
    REQUIRE(prof.within.size() == 1);
    const auto& a = prof.within[0];
    REQUIRE(a.size() == 4);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(a.values[0] == doctest::Approx(-1.0));
    CHECK(a.values[1] == doctest::Approx(-s));
    CHECK(a.values[2] == doctest::Approx(0.0));
    CHECK(a.values[3] == doctest::Approx(s));
  }
  SUBCASE("antipodal pair") {
    WeightedPointSet<mpq_class> cfg(2);
    cfg.add({1, 2}, 1);
    cfg.add({-1, -2}, 1);
    const auto prof = inner_product_profile(cfg);
    REQUIRE(prof.within[0].size() == 1);
    CHECK(prof.within[0].values[0] == -1);
  }
  SUBCASE("rotation invariance (float backend)") {
    std::mt19937_64 rng(12);
    const auto base = two_octagons(1, 2, 1);
    const auto prof = inner_product_profile(base);
    for (int trial = 0; trial < 10; ++trial) {
      const auto rot = tdl::test::random_rotation(2, rng);
      const auto prof2 = inner_product_profile(tdl::test::rotate(base, rot));
      const auto& c1 = prof.cross_set(0, 1);
      const auto& c2 = prof2.cross_set(0, 1);
      REQUIRE(c1.size() == c2.size());
      for (size_t k = 0; k < c1.size(); ++k)
        CHECK(std::fabs(c1.values[k] - c2.values[k]) < 1e-9);
    }
  }
}

TEST_CASE("is_antipodal") {
  CHECK(is_antipodal(two_octagons(1, 2, 1)).has_value());
  CHECK(!is_antipodal(regular_polygon(5, 1, 1)).has_value());
  CHECK(is_antipodal(WeightedPointSet<double>(2)).has_value());  // vacuous
  CHECK(is_antipodal(e8_roots()).has_value());

  SUBCASE("weight mismatch breaks antipodality") {
    WeightedPointSet<mpq_class> cfg(2);
    cfg.add({1, 0}, 1);
    cfg.add({-1, 0}, 2);
    CHECK(!is_antipodal(cfg).has_value());
  }
  SUBCASE("antipodal profile is negation-symmetric and contains -1") {
    std::vector<WeightedPointSet<double>> cfgs;
    cfgs.push_back(two_octagons(1, 2, 1));
    cfgs.push_back(regular_polygon(8, 1, 1));
    for (const auto& cfg : cfgs) {
      const auto prof = inner_product_profile(cfg);
      for (const auto& set : prof.within) {
        if (set.size() == 0) continue;
        CHECK(set.values.front() == doctest::Approx(-1.0));
        for (size_t k = 0; k < set.size(); ++k) {
          const double v = set.values[k];
          // -1 is the one value without a mirror: +1 is the excluded
          // self-product.
          if (std::fabs(v + 1.0) < 1e-9) continue;
          bool has_neg = false;
          for (size_t j = 0; j < set.size(); ++j)
            if (std::fabs(set.values[j] + v) < 1e-9) has_neg = true;
          CHECK(has_neg);
        }
      }
    }
  }
}

TEST_CASE("antipodal_half") {
  SUBCASE("cross-polytope keeps the positive axis vectors") {
    const auto half = antipodal_half(cross_polytope(3, 1, 1));
    REQUIRE(half.size() == 3);
    for (const auto& pt : half.points()) {
      mpq_class sum(0);
      for (const auto& c : pt.coords) sum += c;
      CHECK(sum == 1);
    }
  }
  SUBCASE("two octagons: 4 + 4 points") {
    const auto half = antipodal_half(two_octagons(1, 2, 1));
    REQUIRE(half.size() == 8);
    const auto part = partition_shells(half);
    REQUIRE(part.p() == 2);
    CHECK(part.shells[0].count() == 4);
    CHECK(part.shells[1].count() == 4);
  }
  SUBCASE("single pair") {
    WeightedPointSet<mpq_class> cfg(2);
    cfg.add({-1, 2}, 1);
    cfg.add({1, -2}, 1);
    const auto half = antipodal_half(cfg);
    REQUIRE(half.size() == 1);
    CHECK(half[0].coords[0] == 1);  // lexicographically positive representative
  }
  SUBCASE("half and its negation partition X") {
    std::mt19937_64 rng(3);
    const auto cfg = two_octagons(2, 3, 1);
    for (int trial = 0; trial < 5; ++trial) {
      const auto half = antipodal_half(cfg, rng);
      REQUIRE(half.size() * 2 == cfg.size());
      for (const auto& pt : half.points()) {
        std::vector<double> neg = pt.coords;
        for (auto& c : neg) c = -c;
        bool in_half = false;
        for (const auto& other : half.points())
          if (half.coords_equal(other.coords, neg)) in_half = true;
        CHECK(!in_half);
      }
    }
  }
  SUBCASE("rejects non-antipodal input") {
    CHECK_THROWS_AS(antipodal_half(regular_polygon(5, 1, 1)), std::invalid_argument);
  }
}

TEST_CASE("partition then merge is the identity on radii and counts") {
  std::mt19937_64 rng(41);
  WeightedPointSet<mpq_class> cfg(3);
  for (int i = 0; i < 20; ++i) {
    mpq_class r = tdl::test::random_positive_rational(rng, 6, 3);
    cfg.add({r, mpq_class(i), tdl::test::random_rational(rng, 4, 2)}, 1);
  }
  const auto part = partition_shells(cfg);
  WeightedPointSet<mpq_class> merged(3);
  for (const auto& shell : part.shells)
    for (size_t idx : shell.members) merged.add(cfg[idx].coords, cfg[idx].weight);
  const auto part2 = partition_shells(merged);
  REQUIRE(part2.p() == part.p());
  for (size_t s = 0; s < part.p(); ++s) {
    CHECK(part2.shells[s].radius_sq == part.shells[s].radius_sq);
    CHECK(part2.shells[s].count() == part.shells[s].count());
  }
}

TEST_CASE("point set invariants") {
  WeightedPointSet<mpq_class> cfg(2);
  cfg.add({1, 0}, 1);
  CHECK_THROWS_AS(cfg.add({1, 0}, 2), std::invalid_argument);       // duplicate
  CHECK_THROWS_AS(cfg.add({1, 2, 3}, 1), std::invalid_argument);    // arity
  CHECK_THROWS_AS(cfg.add({2, 0}, 0), std::invalid_argument);       // weight
  CHECK_THROWS_AS(cfg.add({2, 0}, mpq_class(-1)), std::invalid_argument);
  CHECK_THROWS_AS(WeightedPointSet<double>(0), std::invalid_argument);
}
