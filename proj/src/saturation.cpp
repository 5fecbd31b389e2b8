#include "kplane/saturation.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace kplane {

std::string Corridor::str() const {
  std::ostringstream os;
  os << "v" << start_vertex;
  for (const auto& [face, arc] : steps) os << " f" << face << " xa" << arc;
  os << " f" << final_face << " v" << end_vertex;
  return os.str();
}

std::string SaturationReport::str() const {
  std::ostringstream os;
  os << "saturated: " << (saturated ? "true" : "false") << "\n";
  for (const auto& a : addable)
    os << "addable (" << a.u << "," << a.v << "): " << a.corridor.str() << "\n";
  return os.str();
}

int residual_budget(const Arrangement& arr, int edge_id, int k) {
  const int c = arr.crossing_count(edge_id);
  if (c > k)
    throw std::invalid_argument("edge " + std::to_string(edge_id) + " already exceeds k");
  return k - c;
}

namespace {

struct SearchContext {
  const Arrangement& arr;
  std::map<int, int> cap;   // per-edge crossing cap for the new edge
  std::map<int, int> used;  // crossings consumed so far
  int end_vertex;

  bool face_has(int face, int vid) const {
    const Face& f = arr.faces()[face];
    return f.boundary_vertices.count(vid) > 0 || f.isolated_inside.count(vid) > 0;
  }

  // Enumerates crossing sequences of exactly `remaining` arcs in
  // lexicographic arc order; fills steps on success.
  bool extend(int face, int remaining, std::vector<std::pair<int, int>>& steps, int& final_face) {
    if (remaining == 0) {
      if (!face_has(face, end_vertex)) return false;
      final_face = face;
      return true;
    }
    for (int arc : arr.arcs_on_face(face)) {
      const int e = arr.arcs()[arc].parent_edge;
      if (used[e] + 1 > cap[e]) continue;
      used[e] += 1;
      steps.push_back({face, arc});
      if (extend(arr.other_side(face, arc), remaining - 1, steps, final_face)) return true;
      steps.pop_back();
      used[e] -= 1;
    }
    return false;
  }
};

std::map<int, int> crossing_caps(const Drawing& d, const Arrangement& arr, int u, int v, int k,
                                 int l) {
  std::map<int, int> cap;
  for (const auto& e : d.edges) {
    const int adj = (e.incident_to(u) || e.incident_to(v)) ? 1 : 0;
    cap[e.id] = std::min(residual_budget(arr, e.id, k), l - adj);
  }
  return cap;
}

}  // namespace

std::optional<Corridor> addable(const Drawing& d, const Arrangement& arr, int u, int v, int k,
                                int l) {
  if (u == v) throw std::invalid_argument("addable requires distinct vertices");
  d.vertex(u);
  d.vertex(v);
  for (const auto& e : d.edges)
    if (e.joins(u, v)) throw std::invalid_argument("edge already present");

  SearchContext ctx{arr, crossing_caps(d, arr, u, v, k, l), {}, v};
  const std::vector<int> starts = arr.faces_incident_to_vertex(u);
  for (int len = 0; len <= k; ++len) {
    for (int f0 : starts) {
      std::vector<std::pair<int, int>> steps;
      int final_face = -1;
      ctx.used.clear();
      if (ctx.extend(f0, len, steps, final_face)) {
        Corridor c;
        c.start_vertex = u;
        c.end_vertex = v;
        c.steps = std::move(steps);
        c.final_face = final_face;
        return c;
      }
    }
  }
  return std::nullopt;
}

bool valid_corridor(const Drawing& d, const Arrangement& arr, const Corridor& c, int k, int l) {
  if (c.start_vertex == c.end_vertex) return false;
  if (!d.find_vertex(c.start_vertex) || !d.find_vertex(c.end_vertex)) return false;
  if (c.crossings() > k) return false;

  SearchContext ctx{arr, crossing_caps(d, arr, c.start_vertex, c.end_vertex, k, l), {},
                    c.end_vertex};
  const int first_face = c.steps.empty() ? c.final_face : c.steps.front().first;
  if (!ctx.face_has(first_face, c.start_vertex)) return false;
  if (!ctx.face_has(c.final_face, c.end_vertex)) return false;

  int cur = first_face;
  std::map<int, int> used;
  for (const auto& [face, arc] : c.steps) {
    if (face != cur) return false;
    const auto arcs = arr.arcs_on_face(face);
    if (!std::binary_search(arcs.begin(), arcs.end(), arc)) return false;
    const int e = arr.arcs()[arc].parent_edge;
    if (++used[e] > ctx.cap[e]) return false;
    cur = arr.other_side(face, arc);
  }
  return cur == c.final_face;
}

std::optional<AddablePair> first_addable(const Drawing& d, const Arrangement& arr, int k, int l) {
  std::vector<int> ids;
  for (const auto& v : d.vertices) ids.push_back(v.id);
  std::sort(ids.begin(), ids.end());
  for (size_t i = 0; i < ids.size(); ++i) {
    for (size_t j = i + 1; j < ids.size(); ++j) {
      bool present = false;
      for (const auto& e : d.edges)
        if (e.joins(ids[i], ids[j])) {
          present = true;
          break;
        }
      if (present) continue;
      if (auto c = addable(d, arr, ids[i], ids[j], k, l))
        return AddablePair{ids[i], ids[j], std::move(*c)};
    }
  }
  return std::nullopt;
}

SaturationReport is_saturated(const Drawing& d, const Arrangement& arr, int k, int l) {
  if (const auto kc = check_k_plane(arr, k); !kc.holds)
    throw std::invalid_argument("drawing is not " + std::to_string(k) + "-plane");
  if (const auto lc = check_l_simple(arr, l); !lc.holds)
    throw std::invalid_argument("drawing is not " + std::to_string(l) + "-simple");

  SaturationReport rep;
  std::vector<int> ids;
  for (const auto& v : d.vertices) ids.push_back(v.id);
  std::sort(ids.begin(), ids.end());
  for (size_t i = 0; i < ids.size(); ++i) {
    for (size_t j = i + 1; j < ids.size(); ++j) {
      bool present = false;
      for (const auto& e : d.edges)
        if (e.joins(ids[i], ids[j])) {
          present = true;
          break;
        }
      if (present) continue;
      if (auto c = addable(d, arr, ids[i], ids[j], k, l)) {
        rep.saturated = false;
        rep.addable.push_back({ids[i], ids[j], std::move(*c)});
      }
    }
  }
  return rep;
}

SaturationReport is_saturated(const Drawing& d, int k, int l) {
  return is_saturated(d, Arrangement::build(d), k, l);
}

Drawing place_isolated_vertices(const Drawing& d) {
  const Arrangement arr = Arrangement::build(d);
  if (const auto kc = check_k_plane(arr, 2); !kc.holds)
    throw std::invalid_argument("place_isolated_vertices requires a 2-plane drawing");
  const SpecialReport sp = find_special(arr);
  Drawing out = d;
  for (int cell : sp.special_cells) {
    if (!arr.faces()[cell].isolated_inside.empty()) continue;
    out = add_isolated_vertex(out, arr.interior_point(cell));
  }
  return out;
}

}  // namespace kplane
