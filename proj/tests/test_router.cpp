#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kplane/constructions.hpp"
#include "kplane/drawing_io.hpp"
#include "kplane/router.hpp"
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

// Crossing multiset of the realized edge against each existing edge.
std::map<int, int> realized_crossings(const Drawing& d, const std::vector<Point>& poly) {
  Drawing cand = add_edge(d, d.vertices.front().id, d.vertices.back().id, poly);
  // add_edge needs real endpoints; rebuild the multiset directly instead.
  (void)cand;
  std::map<int, int> out;
  for (const auto& e : d.edges) {
    int c = 0;
    for (size_t i = 0; i + 1 < poly.size(); ++i)
      for (size_t j = 0; j + 1 < e.polyline.size(); ++j)
        if (intersect_segments({poly[i], poly[i + 1]}, {e.polyline[j], e.polyline[j + 1]})
                .kind == IntersectionKind::ProperCrossing)
          ++c;
    out[e.id] = c;
  }
  return out;
}

}  // namespace

TEST_CASE("a zero-crossing corridor realizes inside the shared face") {
  const Drawing d = x_drawing();
  const Arrangement arr = Arrangement::build(d);
  const auto c = addable(d, arr, 0, 2, 2, 1);
  REQUIRE(c.has_value());
  const auto poly = realize(d, arr, *c);
  CHECK(poly.front() == P(0, 0));
  CHECK(poly.back() == P(0, 4));
  for (const auto& [e, cnt] : realized_crossings(d, poly)) CHECK(cnt == 0);
  const Drawing next = add_edge(d, 0, 2, poly);
  CHECK(validate(next).ok());
  CHECK(Arrangement::build(next).crossing_count(next.max_edge_id()) == 0);
}

TEST_CASE("a one-crossing corridor crosses exactly its arc's parent") {
  // A vertex inside a triangle must cross one of its sides to get out.
  Drawing d = straight({P(0, 0), P(12, 0), P(0, 12)}, {{0, 1}, {1, 2}, {2, 0}});
  d.vertices.push_back({3, P(2, 2)});
  d.vertices.push_back({4, P(20, 20)});
  const Arrangement arr = Arrangement::build(d);
  const auto c = addable(d, arr, 3, 4, 2, 1);
  REQUIRE(c.has_value());
  CHECK(c->crossings() == 1);
  const auto poly = realize(d, arr, *c);
  int total = 0;
  for (const auto& [e, cnt] : realized_crossings(d, poly)) total += cnt;
  CHECK(total == 1);
  const Drawing next = add_edge(d, 3, 4, poly);
  CHECK(validate(next).ok());
}

TEST_CASE("a corridor crossing one edge twice realizes with two crossings") {
  // u and w sit in the unbounded face; v is walled off inside a pocket that
  // only a double crossing of the long edge can reach... instead, force the
  // double crossing by routing u -> v across a segment and back.
  const Drawing d = straight({P(0, 0), P(10, 0), P(5, -4), P(5, 4), P(2, 2)}, {{2, 3}});
  const Arrangement arr = Arrangement::build(d);
  // Manual corridor: cross edge 0's lower arc twice from the unbounded face.
  const int lower_arc = arr.arcs_of_edge(0)[0];
  Corridor c;
  c.start_vertex = 0;
  c.end_vertex = 1;
  const int f0 = arr.faces_incident_to_vertex(0)[0];
  c.steps = {{f0, lower_arc}, {arr.other_side(f0, lower_arc), lower_arc}};
  c.final_face = f0;
  const auto poly = realize(d, arr, c);
  CHECK(realized_crossings(d, poly).at(0) == 2);
  const Drawing next = add_edge(d, 0, 1, poly);
  CHECK(validate(next).ok());
  CHECK(Arrangement::build(next).crossing_count(next.max_edge_id()) == 2);
}

TEST_CASE("greedy saturation trivia") {
  // One isolated vertex: already saturated, nothing to do.
  Drawing lone;
  lone.vertices.push_back({0, P(0, 0)});
  const GreedyResult r1 = greedy_saturate(lone, 2, 1);
  CHECK(r1.trace.empty());
  CHECK(r1.drawing.edges.empty());

  // Two isolated vertices become a K2.
  Drawing two;
  two.vertices.push_back({0, P(0, 0)});
  two.vertices.push_back({1, P(7, 3)});
  const GreedyResult r2 = greedy_saturate(two, 2, 1);
  CHECK(r2.drawing.edges.size() == 1);
  CHECK(r2.trace.size() == 1);
  CHECK(is_saturated(r2.drawing, 2, 1).saturated);
}

TEST_CASE("greedy saturation of five random vertices reaches the tree bound") {
  testutil::Rng rng(2024);
  Drawing d;
  std::set<Point> used;
  for (int i = 0; i < 5; ++i) {
    Point p{Rational(rng.range(0, 30)), Rational(rng.range(0, 30))};
    while (used.count(p)) p = {Rational(rng.range(0, 30)), Rational(rng.range(0, 30))};
    used.insert(p);
    d.vertices.push_back({i, p});
  }
  const GreedyResult r = greedy_saturate(d, 2, 1);
  CHECK(is_saturated(r.drawing, 2, 1).saturated);
  CHECK(r.drawing.edges.size() >= 4);  // e >= n-1
  CHECK(validate(r.drawing).ok());
  const Arrangement arr = Arrangement::build(r.drawing);
  CHECK(check_k_plane(arr, 2).holds);
  CHECK(check_l_simple(arr, 1).holds);
}

TEST_CASE("greedy saturation is deterministic") {
  testutil::Rng rng(5150);
  Drawing d;
  for (int i = 0; i < 6; ++i) d.vertices.push_back({i, P(rng.range(0, 40), rng.range(0, 40))});
  if (!validate(d).ok()) return;  // coincident points; seed chosen to avoid this
  const GreedyResult a = greedy_saturate(d, 2, 1, {}, 42);
  const GreedyResult b = greedy_saturate(d, 2, 1, {}, 42);
  CHECK(serialize_drawing(a.drawing) == serialize_drawing(b.drawing));
  CHECK(a.trace_str() == b.trace_str());
  CHECK(a.seed == 42);
  CHECK(a.trace_str().find("-> edge") != std::string::npos);
}

TEST_CASE("every realized corridor preserves the k-plane and l-simple checks") {
  testutil::Rng rng(808);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = rng.range(3, 7);
    Drawing d;
    std::set<Point> used;
    for (int i = 0; i < n; ++i) {
      Point p{Rational(rng.range(0, 26)), Rational(rng.range(0, 26))};
      while (used.count(p)) p = {Rational(rng.range(0, 26)), Rational(rng.range(0, 26))};
      used.insert(p);
      d.vertices.push_back({i, p});
    }
    const int l = rng.range(1, 3);
    const GreedyResult r = greedy_saturate(d, 2, l);
    CHECK(is_saturated(r.drawing, 2, l).saturated);
    CHECK(validate(r.drawing).ok());
    // e <= 5n - 10 for simple drawings with n >= 3.
    if (l == 1 && n >= 3)
      CHECK(static_cast<int>(r.drawing.edges.size()) <= 5 * n - 10);
  }
}
