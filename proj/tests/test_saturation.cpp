#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kplane/constructions.hpp"
#include "kplane/saturation.hpp"
#include "support/oracles.hpp"
#include "support/testutil.hpp"

using namespace kplane;

namespace {

Point P(int x, int y) { return {Rational(x), Rational(y)}; }

Drawing straight(std::vector<Point> pts, std::vector<std::pair<int, int>> edges) {
  Drawing d;
  for (size_t i = 0; i < pts.size(); ++i) d.vertices.push_back({static_cast<int>(i), pts[i]});
  int id = 0;
  for (auto [u, v] : edges) d.edges.push_back({id++, u, v, {pts[u], pts[v]}});
  return d;
}

Drawing x_drawing() {
  return straight({P(0, 0), P(4, 4), P(0, 4), P(4, 0)}, {{0, 1}, {2, 3}});
}

}  // namespace

TEST_CASE("residual budgets") {
  const Arrangement p3 = Arrangement::build(propeller(3));
  CHECK(residual_budget(p3, 0, 2) == 0);
  const Arrangement tri = Arrangement::build(complete_drawing(3));
  CHECK(residual_budget(tri, 0, 2) == 2);
  const Arrangement x = Arrangement::build(x_drawing());
  CHECK(residual_budget(x, 0, 2) == 1);
  CHECK_THROWS_AS(residual_budget(x, 0, 0), std::invalid_argument);
}

TEST_CASE("addable finds zero-crossing corridors in a shared face") {
  const Drawing d = x_drawing();
  const Arrangement arr = Arrangement::build(d);
  const auto c = addable(d, arr, 0, 2, 2, 1);
  REQUIRE(c.has_value());
  CHECK(c->crossings() == 0);
  CHECK(c->start_vertex == 0);
  CHECK(c->end_vertex == 2);
  CHECK(valid_corridor(d, arr, *c, 2, 1));

  CHECK_THROWS_AS(addable(d, arr, 0, 0, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(addable(d, arr, 0, 1, 2, 1), std::invalid_argument);  // existing edge
}

TEST_CASE("propeller leaves cannot be joined") {
  const Drawing d = propeller(3);
  const Arrangement arr = Arrangement::build(d);
  CHECK_FALSE(addable(d, arr, 1, 2, 2, 2).has_value());
  CHECK_FALSE(addable(d, arr, 1, 3, 2, 2).has_value());
  CHECK_FALSE(addable(d, arr, 2, 3, 2, 2).has_value());
}

TEST_CASE("a distant isolated vertex can reach a triangle corner") {
  Drawing d = complete_drawing(3);
  d.vertices.push_back({3, P(40, 40)});
  const Arrangement arr = Arrangement::build(d);
  const auto c = addable(d, arr, 0, 3, 2, 1);
  REQUIRE(c.has_value());
  CHECK(c->crossings() == 0);
}

TEST_CASE("is_saturated verdicts") {
  CHECK(is_saturated(complete_drawing(3), 2, 1).saturated);
  const SaturationReport x = is_saturated(x_drawing(), 2, 1);
  CHECK_FALSE(x.saturated);
  CHECK(x.addable.size() >= 1);
  // Two isolated vertices: the lone pair is addable with no crossings.
  Drawing two;
  two.vertices.push_back({0, P(0, 0)});
  two.vertices.push_back({1, P(5, 5)});
  const SaturationReport r = is_saturated(two, 2, 1);
  CHECK_FALSE(r.saturated);
  REQUIRE(r.addable.size() == 1);
  CHECK(r.addable[0].corridor.crossings() == 0);

  CHECK_THROWS_AS(is_saturated(x_drawing(), 0, 1), std::invalid_argument);
}

TEST_CASE("the 2-propeller verdict at k=2 l=3 is reproducible and matches the oracle") {
  const Drawing d = propeller(2);
  const Arrangement arr = Arrangement::build(d);
  const SaturationReport rep = is_saturated(d, arr, 2, 3);
  const SaturationReport rep2 = is_saturated(d, arr, 2, 3);
  CHECK(rep.str() == rep2.str());
  CHECK(rep.saturated);
  CHECK(testutil::brute_addable_k2(d, arr, 1, 2, 3) == false);
}

TEST_CASE("addable agrees with the exhaustive corridor enumerator") {
  testutil::Rng rng(271);
  int drawings = 0, pairs = 0, positive = 0;
  while (drawings < 40) {
    const Drawing d = testutil::random_valid_drawing(rng, 6, 6);
    const Arrangement arr = Arrangement::build(d);
    if (!check_k_plane(arr, 2).holds) continue;
    ++drawings;
    for (int l : {1, 2, 3}) {
      if (!check_l_simple(arr, l).holds) continue;
      for (size_t i = 0; i < d.vertices.size(); ++i) {
        for (size_t j = i + 1; j < d.vertices.size(); ++j) {
          const int u = d.vertices[i].id, v = d.vertices[j].id;
          bool present = false;
          for (const auto& e : d.edges)
            if (e.joins(u, v)) present = true;
          if (present) continue;
          const auto mine = addable(d, arr, u, v, 2, l);
          const bool oracle = testutil::brute_addable_k2(d, arr, u, v, l);
          CAPTURE(u);
          CAPTURE(v);
          CAPTURE(l);
          CHECK(mine.has_value() == oracle);
          if (mine) {
            CHECK(valid_corridor(d, arr, *mine, 2, l));
            ++positive;
          }
          ++pairs;
        }
      }
    }
  }
  CHECK(pairs > 300);
  CHECK(positive > 50);
}

TEST_CASE("corridors found at k stay valid for larger k") {
  testutil::Rng rng(93);
  for (int trial = 0; trial < 15; ++trial) {
    const Drawing d = testutil::random_valid_drawing(rng, 6, 5);
    const Arrangement arr = Arrangement::build(d);
    if (!check_k_plane(arr, 2).holds) continue;
    for (size_t i = 0; i < d.vertices.size(); ++i)
      for (size_t j = i + 1; j < d.vertices.size(); ++j) {
        const int u = d.vertices[i].id, v = d.vertices[j].id;
        bool present = false;
        for (const auto& e : d.edges)
          if (e.joins(u, v)) present = true;
        if (present) continue;
        if (const auto c = addable(d, arr, u, v, 2, 2)) {
          CHECK(valid_corridor(d, arr, *c, 3, 2));
          CHECK(valid_corridor(d, arr, *c, 4, 2));
        }
      }
  }
}

TEST_CASE("place_isolated_vertices fills exactly the empty special cells") {
  const Drawing p3 = propeller(3);
  const Drawing placed = place_isolated_vertices(p3);
  CHECK(placed.vertices.size() == p3.vertices.size() + 1);
  const Arrangement arr = Arrangement::build(placed);
  CHECK(arr.faces()[arr.unbounded_face()].isolated_inside.size() == 1);
  // Idempotent: the cell now has its vertex.
  CHECK(place_isolated_vertices(placed).vertices.size() == placed.vertices.size());

  const Drawing tri = complete_drawing(3);
  CHECK(place_isolated_vertices(tri).vertices.size() == 3);

  // The union's special cells are merged into the single unbounded face, so
  // one vertex suffices.
  const Drawing f2 = family_2simple(8);
  const Drawing f2p = place_isolated_vertices(f2);
  CHECK(f2p.vertices.size() == f2.vertices.size() + 1);
}

TEST_CASE("placing isolated vertices preserves saturation") {
  for (const Drawing& d :
       {propeller(2), propeller(3), propeller(5), family_3simple(6), family_2simple(8)}) {
    const Drawing placed = place_isolated_vertices(d);
    CHECK(validate(placed).ok());
    const int l = 3;
    CHECK(is_saturated(placed, 2, l).saturated == is_saturated(d, 2, l).saturated);
  }
}
