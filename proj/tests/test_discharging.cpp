#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kplane/constructions.hpp"
#include "kplane/discharging.hpp"
#include "kplane/router.hpp"
#include "support/testutil.hpp"

using namespace kplane;

namespace {

Point P(int x, int y) { return {Rational(x), Rational(y)}; }

}  // namespace

TEST_CASE("empty-flag removal collapses trees to single vertices") {
  const Drawing k2 = complete_drawing(2);
  const Drawing r = remove_empty_flags(k2);
  CHECK(r.vertices.size() == 1);
  CHECK(r.edges.empty());

  // Plane star with three uncrossed edges.
  Drawing star;
  star.vertices.push_back({0, P(0, 0)});
  star.vertices.push_back({1, P(8, 0)});
  star.vertices.push_back({2, P(0, 8)});
  star.vertices.push_back({3, P(-8, -8)});
  for (int i = 1; i <= 3; ++i)
    star.edges.push_back({i - 1, 0, i, {P(0, 0), star.vertices[i].location}});
  const Drawing rs = remove_empty_flags(star);
  CHECK(rs.vertices.size() == 1);
  CHECK(rs.edges.empty());

  // Propeller blades all carry crossings, so nothing is removed.
  const Drawing p3 = propeller(3);
  CHECK(remove_empty_flags(p3).vertices.size() == p3.vertices.size());
}

TEST_CASE("empty-flag removal preserves e - n") {
  testutil::Rng rng(7321);
  for (int trial = 0; trial < 10; ++trial) {
    const Drawing d = testutil::random_valid_drawing(rng, 6, 7);
    const Drawing r = remove_empty_flags(d);
    CHECK(static_cast<int>(d.edges.size()) - static_cast<int>(d.vertices.size()) ==
          static_cast<int>(r.edges.size()) - static_cast<int>(r.vertices.size()));
  }
}

TEST_CASE("triangle discharging gives every corner exactly 1") {
  const ChargeReport rep = unit_weight_charges(complete_drawing(3));
  REQUIRE(rep.preconditions_met);
  CHECK(rep.charges.at(0) == Rational(1));
  CHECK(rep.charges.at(1) == Rational(1));
  CHECK(rep.charges.at(2) == Rational(1));
  CHECK(rep.min_charge == Rational(1));
  CHECK(rep.conservation_ok);
  CHECK(rep.unassigned_total.is_zero());
}

TEST_CASE("thm1 refuses drawings with flags") {
  const ChargeReport rep = unit_weight_charges(complete_drawing(2));
  CHECK_FALSE(rep.preconditions_met);
}

TEST_CASE("greedy-saturated pipeline yields charges of at least 1") {
  testutil::Rng rng(40961);
  Drawing pts;
  std::set<Point> used;
  for (int i = 0; i < 8; ++i) {
    Point p{Rational(rng.range(0, 30)), Rational(rng.range(0, 30))};
    while (used.count(p)) p = {Rational(rng.range(0, 30)), Rational(rng.range(0, 30))};
    used.insert(p);
    pts.vertices.push_back({i, p});
  }
  const GreedyResult g = greedy_saturate(pts, 2, 1);
  const Drawing prepped = place_isolated_vertices(remove_empty_flags(g.drawing));
  const ChargeReport rep = unit_weight_charges(prepped);
  REQUIRE(rep.preconditions_met);
  if (!rep.edgeless) {
    REQUIRE(rep.min_charge.has_value());
    CHECK(*rep.min_charge >= Rational(1));
  }
  CHECK(rep.conservation_ok);
}

TEST_CASE("weight-3/2 discharging on the triangle") {
  const ChargeReport rep = three_halves_charges(complete_drawing(3), 2);
  REQUIRE(rep.preconditions_met);
  for (const auto& [v, c] : rep.charges) CHECK(c == Rational(1));
  CHECK(rep.unassigned_total == Rational(3, 2));  // 3 edges keep 1/2 each
  CHECK(rep.conservation_ok);
}

TEST_CASE("weight-3/2 discharging on a propeller with its isolated vertex") {
  const Drawing d = place_isolated_vertices(propeller(3));
  const ChargeReport rep = three_halves_charges(d, 2);
  REQUIRE(rep.preconditions_met);
  CHECK(rep.charges.at(0) == Rational(1));  // hub: 3 * 1/3
  CHECK(rep.charges.at(1) == Rational(1));  // leaves: 1/1
  CHECK(rep.charges.at(2) == Rational(1));
  CHECK(rep.charges.at(3) == Rational(1));
  CHECK(rep.charges.at(4) == Rational(1, 2));  // isolated: 3 * (3/2 - 1 - 1/3)
  CHECK(rep.conservation_ok);
  CHECK(rep.unassigned_total.is_zero());
}

TEST_CASE("weight-3/2 discharging on the 2-propeller leaves the isolated vertex empty") {
  const Drawing d = place_isolated_vertices(propeller(2));
  const ChargeReport rep = three_halves_charges(d, 3);
  REQUIRE(rep.preconditions_met);
  CHECK(rep.charges.at(0) == Rational(1));     // hub of the path: 1/2 + 1/2
  CHECK(rep.charges.at(1) == Rational(1));     // leaves: 1/1
  CHECK(rep.charges.at(2) == Rational(1));
  CHECK(rep.charges.at(3) == Rational(0));     // remainder 3/2 - 1 - 1/2 = 0
  CHECK(rep.min_charge == Rational(0));
  CHECK(rep.conservation_ok);
}

TEST_CASE("thm2 rejects unsupported l") {
  CHECK_THROWS_AS(three_halves_charges(complete_drawing(3), 1), std::invalid_argument);
  CHECK_THROWS_AS(three_halves_charges(complete_drawing(3), 4), std::invalid_argument);
}

TEST_CASE("charge conservation is exact on generated families") {
  for (int n : {4, 6, 7, 9}) {
    CAPTURE(n);
    const Drawing d = place_isolated_vertices(family_3simple(n));
    const ChargeReport rep = three_halves_charges(d, 3);
    REQUIRE(rep.preconditions_met);
    CHECK(rep.conservation_ok);
  }
}
