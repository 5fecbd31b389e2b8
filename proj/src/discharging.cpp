#include "kplane/discharging.hpp"

#include <algorithm>
#include <sstream>

#include "kplane/saturation.hpp"

namespace kplane {

Drawing remove_empty_flags(const Drawing& d) {
  Drawing cur = d;
  while (true) {
    const Arrangement arr = Arrangement::build(cur);
    const auto [flags, empty] = find_flags(cur, arr);
    if (empty.empty()) return cur;
    cur = remove_vertex(cur, empty.front().leaf_vertex);  // lowest leaf id first
  }
}

namespace {

// Special cells with their isolated vertex, one per special edge.
struct SpecialIndex {
  std::map<int, int> edge_to_isolated;  // special edge -> isolated vertex of its cell
  std::vector<std::string> failures;
};

SpecialIndex index_special(const Arrangement& arr, const SpecialReport& sp) {
  SpecialIndex idx;
  std::map<int, int> cell_isolated;
  for (int cell : sp.special_cells) {
    const auto& iso = arr.faces()[cell].isolated_inside;
    if (iso.size() != 1) {
      idx.failures.push_back("special cell " + std::to_string(cell) + " holds " +
                             std::to_string(iso.size()) + " isolated vertices, wants 1");
      continue;
    }
    cell_isolated[cell] = *iso.begin();
  }
  const std::set<int> cells(sp.special_cells.begin(), sp.special_cells.end());
  for (int e : sp.special_edges) {
    const int mid = arr.arcs_of_edge(e)[1];
    const int fa = arr.face_of_dart(dart_forward(mid));
    const int fb = arr.face_of_dart(dart_forward(mid) + 1);
    int cell = -1;
    if (cells.count(fa)) cell = fa;
    if (cells.count(fb) && fb != fa) {
      if (cell >= 0) {
        idx.failures.push_back("edge " + std::to_string(e) + " bounds two special cells");
        continue;
      }
      cell = fb;
    }
    if (cell < 0 || !cell_isolated.count(cell)) continue;
    idx.edge_to_isolated[e] = cell_isolated[cell];
  }
  return idx;
}

ChargeReport run_discharging(const Drawing& d, int l, const Rational& weight, bool thm1_rules) {
  ChargeReport rep;
  rep.weight_per_edge = weight;

  const Arrangement arr = Arrangement::build(d);
  auto require = [&rep](bool ok, const std::string& what) {
    if (!ok) rep.precondition_failures.push_back(what);
  };
  require(check_k_plane(arr, 2).holds, "drawing is not 2-plane");
  require(check_l_simple(arr, l).holds, "drawing is not " + std::to_string(l) + "-simple");
  const SpecialReport sp = find_special(arr);
  require(sp.applicable, "middle segments undefined");
  if (thm1_rules) {
    const auto [flags, empty] = find_flags(d, arr);
    require(flags.empty(), "drawing still has flags");
  }
  if (!rep.precondition_failures.empty()) return rep;
  require(is_saturated(d, arr, 2, l).saturated, "drawing is not saturated");

  SpecialIndex idx = index_special(arr, sp);
  for (auto& f : idx.failures) rep.precondition_failures.push_back(std::move(f));
  if (!rep.precondition_failures.empty()) return rep;
  rep.preconditions_met = true;

  for (const auto& v : d.vertices) rep.charges[v.id] = Rational(0);
  rep.unassigned_total = Rational(0);
  if (d.edges.empty()) {
    rep.edgeless = true;
    rep.conservation_ok = true;
    if (!d.vertices.empty()) rep.min_charge = Rational(0);
    return rep;
  }

  std::vector<Edge> edges = d.edges;
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (const auto& e : edges) {
    ChargeTrace tr;
    tr.edge = e.id;
    tr.unassigned = weight;
    auto give = [&](int vertex, const Rational& amount) {
      rep.charges[vertex] += amount;
      tr.gives.push_back({vertex, amount});
      tr.unassigned -= amount;
    };
    const auto special = idx.edge_to_isolated.find(e.id);
    if (thm1_rules) {
      if (special == idx.edge_to_isolated.end()) {
        give(e.tail, Rational(1, 2));
        give(e.head, Rational(1, 2));
      } else {
        give(e.tail, degree(d, e.tail) == 2 ? Rational(1, 2) : Rational(1, 3));
        give(e.head, degree(d, e.head) == 2 ? Rational(1, 2) : Rational(1, 3));
        give(special->second, tr.unassigned);
      }
    } else {
      give(e.tail, Rational(1) / Rational(degree(d, e.tail)));
      give(e.head, Rational(1) / Rational(degree(d, e.head)));
      if (special != idx.edge_to_isolated.end()) give(special->second, tr.unassigned);
    }
    rep.unassigned_total += tr.unassigned;
    rep.trace.push_back(std::move(tr));
  }

  Rational total = rep.unassigned_total;
  bool first = true;
  for (const auto& [v, c] : rep.charges) {
    total += c;
    if (first || c < *rep.min_charge) rep.min_charge = c;
    first = false;
  }
  rep.conservation_ok = total == weight * Rational(static_cast<long>(edges.size()));
  return rep;
}

}  // namespace

ChargeReport unit_weight_charges(const Drawing& d) { return run_discharging(d, 1, Rational(1), true); }

ChargeReport three_halves_charges(const Drawing& d, int l) {
  if (l != 2 && l != 3) throw std::invalid_argument("three_halves_charges requires l in {2,3}");
  return run_discharging(d, l, Rational(3, 2), false);
}

std::string ChargeReport::str() const {
  std::ostringstream os;
  os << "preconditions_met: " << (preconditions_met ? "true" : "false") << "\n";
  for (const auto& f : precondition_failures) os << "precondition: " << f << "\n";
  if (!preconditions_met) return os.str();
  os << "weight_per_edge: " << weight_per_edge << "\n";
  if (edgeless) os << "edgeless: true\n";
  for (const auto& [v, c] : charges) os << "charge v" << v << ": " << c << "\n";
  for (const auto& tr : trace) {
    os << "edge " << tr.edge << " gives";
    for (const auto& g : tr.gives) os << " " << g.amount << "->v" << g.recipient;
    if (!tr.unassigned.is_zero()) os << " keeps " << tr.unassigned;
    os << "\n";
  }
  if (min_charge) os << "min_charge: " << *min_charge << "\n";
  os << "unassigned: " << unassigned_total << "\n";
  os << "conservation: " << (conservation_ok ? "exact" : "BROKEN") << "\n";
  return os.str();
}

}  // namespace kplane
