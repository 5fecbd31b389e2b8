// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Every tolerance is exact; nothing is calibrated later.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "kplane/constructions.hpp"
#include "kplane/discharging.hpp"
#include "kplane/drawing_io.hpp"
#include "kplane/router.hpp"
#include "support/oracles.hpp"
#include "support/testutil.hpp"

using namespace kplane;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
std::vector<Drawing> suite_drawings;  // everything built here, re-audited by criterion 7

void criterion(int number, const std::string& what, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << what;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Drawing scatter(int n, std::uint64_t seed) {
  testutil::Rng rng(seed);
  Drawing d;
  std::set<Point> used;
  const int span = std::max(8, 4 * n);
  for (int i = 0; i < n; ++i) {
    Point p{Rational(rng.range(0, span)), Rational(rng.range(0, span))};
    while (used.count(p)) p = {Rational(rng.range(0, span)), Rational(rng.range(0, span))};
    used.insert(p);
    d.vertices.push_back({i, p});
  }
  return d;
}

// ---------------------------------------------------------------------------

void criterion_1_family2() {
  const auto start = Clock::now();
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 40 && ok; ++n) {
    const Drawing d = family_2simple(n);
    suite_drawings.push_back(d);
    const Arrangement arr = Arrangement::build(d);
    ok = static_cast<int>(d.vertices.size()) == n &&
         static_cast<int>(d.edges.size()) == two_simple_edges(n) &&
         check_k_plane(arr, 2).holds && check_l_simple(arr, 2).holds &&
         is_saturated(d, arr, 2, 2).saturated;
    if (!ok) detail = "n=" + std::to_string(n);
  }
  std::ostringstream t;
  t << "n=1..40, " << seconds_since(start) << "s";
  criterion(1, "family_2simple has f(n) edges and is saturated 2-plane 2-simple", ok,
            detail.empty() ? t.str() : detail);
}

void criterion_2_family3() {
  const auto start = Clock::now();
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 40 && ok; ++n) {
    if (n == 3) continue;
    const Drawing d = family_3simple(n);
    suite_drawings.push_back(d);
    const Arrangement arr = Arrangement::build(d);
    ok = static_cast<int>(d.vertices.size()) == n &&
         static_cast<int>(d.edges.size()) == 2 * n / 3 && check_k_plane(arr, 2).holds &&
         check_l_simple(arr, 3).holds && is_saturated(d, arr, 2, 3).saturated;
    if (!ok) detail = "n=" + std::to_string(n);
  }
  std::ostringstream t;
  t << "n=1..40 except 3, " << seconds_since(start) << "s";
  criterion(2, "family_3simple has floor(2n/3) edges and is saturated 2-plane 3-simple", ok,
            detail.empty() ? t.str() : detail);
}

void criterion_3_propellers() {
  bool ok = true;
  std::string detail;
  for (int m = 2; m <= 10 && ok; ++m) {
    const Drawing d = propeller(m);
    suite_drawings.push_back(d);
    const Arrangement arr = Arrangement::build(d);
    ok = static_cast<int>(d.vertices.size()) == m + 1 &&
         static_cast<int>(d.edges.size()) == m;
    for (const auto& [e, c] : arr.crossings_per_edge()) ok = ok && c == 2;
    const SpecialReport sp = find_special(arr);
    ok = ok && sp.applicable &&
         sp.special_cells == std::vector<int>{arr.unbounded_face()};
    ok = ok && is_saturated(d, arr, 2, m == 2 ? 3 : 2).saturated;
    if (!ok) detail = "m=" + std::to_string(m);
  }
  criterion(3, "propeller(m) for m=2..10: sizes, two crossings per edge, special unbounded cell, saturated",
            ok, detail);
}

struct GreedyRun {
  int n;
  std::uint64_t seed;
  Drawing drawing;
};

std::vector<GreedyRun> greedy_runs;
int realizations_total = 0;
int realization_failures = 0;
bool router_sound = true;
std::string router_detail;

// Criteria 4 and 8 run together: each greedy insertion is realized and then
// audited against its corridor on the rebuilt drawing.
void criterion_4_and_8_greedy() {
  const auto start = Clock::now();
  bool ok4 = true;
  std::string detail4;
  const int seeds_per_n = 12;  // 9 sizes x 12 seeds = 108 drawings
  for (int n = 2; n <= 10; ++n) {
    for (int s = 0; s < seeds_per_n; ++s) {
      const std::uint64_t seed = 7000003ULL * n + s;
      Drawing d = scatter(n, seed);
      Arrangement arr = Arrangement::build(d);
      while (true) {
        const auto next = first_addable(d, arr, 2, 1);
        if (!next) break;
        std::vector<Point> poly;
        try {
          poly = realize(d, arr, next->corridor);
          ++realizations_total;
        } catch (const RealizationFailed& e) {
          ++realization_failures;
          router_sound = false;
          router_detail = e.what();
          break;
        }
        // Router soundness: the realized edge crosses exactly the corridor's
        // parent-edge multiset and the drawing stays valid 2-plane 1-simple.
        std::map<int, int> want;
        for (const auto& e : d.edges) want[e.id] = 0;
        for (const auto& [face, arc] : next->corridor.steps)
          want[arr.arcs()[arc].parent_edge] += 1;
        std::map<int, int> got;
        for (const auto& e : d.edges) {
          int count = 0;
          for (size_t i = 0; i + 1 < poly.size(); ++i)
            for (size_t j = 0; j + 1 < e.polyline.size(); ++j)
              if (intersect_segments({poly[i], poly[i + 1]},
                                     {e.polyline[j], e.polyline[j + 1]})
                      .kind == IntersectionKind::ProperCrossing)
                ++count;
          got[e.id] = count;
        }
        const Drawing grown = add_edge(d, next->u, next->v, poly);
        Arrangement grown_arr = Arrangement::build(grown);  // validates
        if (got != want || !check_k_plane(grown_arr, 2).holds ||
            !check_l_simple(grown_arr, 1).holds) {
          router_sound = false;
          router_detail = "multiset or validity broken at n=" + std::to_string(n) +
                          " seed=" + std::to_string(seed);
        }
        d = grown;
        arr = std::move(grown_arr);
      }
      suite_drawings.push_back(d);
      greedy_runs.push_back({n, seed, d});

      const int e = static_cast<int>(d.edges.size());
      bool ok = is_saturated(d, arr, 2, 1).saturated;
      ok = ok && e >= n - 1;
      if (n >= 3) ok = ok && e <= 5 * n - 10;
      const auto [flags, empty] = find_flags(d, arr);
      ok = ok && flags.size() == empty.size();  // every flag is empty
      ok = ok && check_unique_special_cell(arr).holds;
      if (!ok && ok4) {
        ok4 = false;
        detail4 = "n=" + std::to_string(n) + " seed=" + std::to_string(seed);
      }
    }
  }
  std::ostringstream t;
  t << greedy_runs.size() << " drawings, " << realizations_total << " insertions, "
    << seconds_since(start) << "s";
  criterion(4,
            "greedy saturation at k=2 l=1 for n=2..10: saturated, n-1 <= e <= 5n-10, "
            "only empty flags, one special cell per special edge",
            ok4 && realization_failures == 0, ok4 ? t.str() : detail4);
}

void criterion_5_discharging() {
  const auto start = Clock::now();
  bool ok = true;
  std::string detail;
  for (const auto& run : greedy_runs) {
    const Drawing prepped = place_isolated_vertices(remove_empty_flags(run.drawing));
    const ChargeReport rep = unit_weight_charges(prepped);
    bool good = rep.preconditions_met && rep.conservation_ok;
    if (rep.edgeless)
      good = good && prepped.vertices.size() <= 1;
    else
      good = good && rep.min_charge.has_value() && *rep.min_charge >= Rational(1);
    if (!good && ok) {
      ok = false;
      detail = "n=" + std::to_string(run.n) + " seed=" + std::to_string(run.seed);
    }
  }
  std::ostringstream t;
  t << greedy_runs.size() << " certificates, " << seconds_since(start) << "s";
  criterion(5, "weight-1 discharging certifies min charge >= 1 with exact conservation", ok,
            ok ? t.str() : detail);
}

void criterion_6_oracle() {
  const auto start = Clock::now();
  testutil::Rng rng(60601);
  int drawings = 0, pairs = 0;
  bool ok = true;
  std::string detail;
  while (drawings < 200) {
    const Drawing d = testutil::random_valid_drawing(rng, 4 + static_cast<int>(rng.below(4)), 8);
    const Arrangement arr = Arrangement::build(d);
    if (!check_k_plane(arr, 2).holds) continue;
    ++drawings;
    suite_drawings.push_back(d);
    for (int l : {1, 2, 3}) {
      for (size_t i = 0; i < d.vertices.size() && ok; ++i) {
        for (size_t j = i + 1; j < d.vertices.size(); ++j) {
          const int u = d.vertices[i].id, v = d.vertices[j].id;
          bool present = false;
          for (const auto& e : d.edges)
            if (e.joins(u, v)) present = true;
          if (present) continue;
          const bool mine = addable(d, arr, u, v, 2, l).has_value();
          const bool brute = testutil::brute_addable_k2(d, arr, u, v, l);
          ++pairs;
          if (mine != brute) {
            ok = false;
            detail = "pair (" + std::to_string(u) + "," + std::to_string(v) +
                     ") l=" + std::to_string(l);
            break;
          }
        }
      }
    }
  }
  std::ostringstream t;
  t << drawings << " drawings, " << pairs << " pair queries, " << seconds_since(start) << "s";
  criterion(6, "corridor search agrees with the exhaustive enumerator at k=2, l in {1,2,3}", ok,
            ok ? t.str() : detail);
}

void criterion_7_arrangement_soundness() {
  const auto start = Clock::now();
  bool ok = true;
  std::string detail;
  size_t audited = 0;
  for (const Drawing& d : suite_drawings) {
    const Arrangement arr = Arrangement::build(d);
    ++audited;
    long long components = arr.component_count();
    long long euler = static_cast<long long>(arr.nodes().size()) -
                      static_cast<long long>(arr.arcs().size()) +
                      static_cast<long long>(arr.faces().size());
    if (euler != 1 + components) {
      ok = false;
      detail = "Euler relation broke";
      break;
    }
    if (arr.crossings_per_edge() != testutil::brute_crossings_per_edge(d)) {
      ok = false;
      detail = "crossing counts disagree with the segment-pair oracle";
      break;
    }
  }
  std::ostringstream t;
  t << audited << " arrangements, " << seconds_since(start) << "s";
  criterion(7, "every arrangement satisfies V-E+F = 1+C and the brute-force crossing counts",
            ok, ok ? t.str() : detail);
}

void criterion_8_router() {
  std::ostringstream t;
  t << realizations_total << " realizations, " << realization_failures << " failures";
  criterion(8,
            "every realized corridor crossed exactly its parent-edge multiset and kept the "
            "drawing 2-plane 1-simple",
            router_sound && realization_failures == 0,
            router_sound ? t.str() : router_detail);
}

void criterion_9_adjudication() {
  const Drawing p2 = propeller(2);
  const Arrangement arr = Arrangement::build(p2);
  const SaturationReport first = is_saturated(p2, arr, 2, 3);
  const SaturationReport second = is_saturated(p2, Arrangement::build(p2), 2, 3);
  const bool deterministic = first.str() == second.str();
  // The lone non-adjacent pair, decided independently by the enumerator.
  const bool brute = testutil::brute_addable_k2(p2, arr, 1, 2, 3);
  const bool consistent = first.saturated == !brute;
  std::cout << "  the 2-propeller (3 vertices, 2 edges) at k=2 l=3 is "
            << (first.saturated ? "saturated" : "not saturated")
            << "; search and enumerator " << (consistent ? "agree" : "DISAGREE") << "\n";
  if (first.saturated)
    std::cout << "  implied: some saturated 3-vertex 3-simple 2-plane drawing has 2 edges, "
                 "so the 3-vertex minimum is at most 2, not the tabulated 3\n";
  criterion(9, "the 3-vertex adjudication is deterministic and internally consistent",
            deterministic && consistent);
}

}  // namespace

int main() {
  const auto start = Clock::now();
  criterion_1_family2();
  criterion_2_family3();
  criterion_3_propellers();
  criterion_4_and_8_greedy();
  criterion_5_discharging();
  criterion_6_oracle();
  criterion_7_arrangement_soundness();
  criterion_8_router();
  criterion_9_adjudication();
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " ("
            << seconds_since(start) << "s total)\n";
  return failures == 0 ? 0 : 1;
}
