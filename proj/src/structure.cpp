#include "kplane/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kplane {

KPlaneCheck check_k_plane(const Arrangement& arr, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  KPlaneCheck out;
  for (const auto& [e, c] : arr.crossings_per_edge()) {
    if (c > k) {
      out.holds = false;
      out.witness_edge = e;
      return out;
    }
  }
  return out;
}

LSimpleCheck check_l_simple(const Arrangement& arr, int l) {
  if (l < 1) throw std::invalid_argument("l must be at least 1");
  LSimpleCheck out;
  const auto& edges = arr.drawing().edges;
  for (size_t i = 0; i < edges.size(); ++i) {
    for (size_t j = i + 1; j < edges.size(); ++j) {
      if (arr.common_points(edges[i].id, edges[j].id) > l) {
        out.holds = false;
        out.witness_pair = std::minmax(edges[i].id, edges[j].id);
        return out;
      }
    }
  }
  return out;
}

std::pair<std::vector<Flag>, std::vector<Flag>> find_flags(const Drawing& d,
                                                           const Arrangement& arr) {
  std::vector<Flag> flags, empty;
  std::vector<Vertex> vs = d.vertices;
  std::sort(vs.begin(), vs.end(), [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  for (const auto& v : vs) {
    const Edge* incident = nullptr;
    int deg = 0;
    for (const auto& e : d.edges)
      if (e.incident_to(v.id)) {
        ++deg;
        incident = &e;
      }
    if (deg != 1) continue;
    flags.push_back({v.id, incident->id});
    if (arr.crossing_count(incident->id) == 0) empty.push_back({v.id, incident->id});
  }
  return {flags, empty};
}

SpecialReport find_special(const Arrangement& arr) {
  SpecialReport out;
  for (const auto& [e, c] : arr.crossings_per_edge())
    if (c > 2) return out;  // middle segments are undefined here
  out.applicable = true;

  std::set<int> middles;
  for (const auto& e : arr.drawing().edges) {
    if (arr.crossing_count(e.id) != 2) continue;
    middles.insert(arr.arcs_of_edge(e.id)[1]);
  }
  out.middle_segments.assign(middles.begin(), middles.end());

  std::set<int> special_edges;
  for (const auto& f : arr.faces()) {
    bool all_middle = true;
    for (int a : arr.arcs_on_face(f.id))
      if (!middles.count(a)) {
        all_middle = false;
        break;
      }
    const bool no_boundary_vertex = f.boundary_vertices.empty();
    if (all_middle != no_boundary_vertex)
      throw std::logic_error("special-cell characterizations disagree on face " +
                             std::to_string(f.id));
    if (!all_middle) continue;
    out.special_cells.push_back(f.id);
    for (int a : arr.arcs_on_face(f.id)) special_edges.insert(arr.arcs()[a].parent_edge);
  }
  out.special_edges.assign(special_edges.begin(), special_edges.end());
  return out;
}

PropertyCheck check_unique_special_cell(const Arrangement& arr) {
  PropertyCheck out;
  const SpecialReport sp = find_special(arr);
  if (!sp.applicable) {
    out.witness = "not applicable: an edge has more than 2 crossings";
    return out;
  }
  const std::set<int> cells(sp.special_cells.begin(), sp.special_cells.end());
  for (int e : sp.special_edges) {
    const int mid = arr.arcs_of_edge(e)[1];
    const int fa = arr.face_of_dart(dart_forward(mid));
    const int fb = arr.face_of_dart(dart_forward(mid) + 1);
    const int bounded = static_cast<int>(cells.count(fa)) +
                        static_cast<int>(fa == fb ? 0 : cells.count(fb));
    if (bounded > 1) {
      out.holds = false;
      out.witness = "edge " + std::to_string(e) + " bounds special cells " +
                    std::to_string(fa) + " and " + std::to_string(fb);
      return out;
    }
  }
  return out;
}

PropertyCheck check_flag_support(const Drawing& d, const Arrangement& arr) {
  PropertyCheck out;
  const auto [flags, empty] = find_flags(d, arr);
  for (const Flag& fl : flags) {
    const Edge& uv = d.edge(fl.edge);
    const int v = uv.tail == fl.leaf_vertex ? uv.head : uv.tail;
    if (degree(d, v) >= 3) continue;
    bool in_propeller = false;
    if (arr.crossing_count(uv.id) == 2) {
      for (const auto& e : d.edges) {
        if (e.id == uv.id || !e.incident_to(v)) continue;
        if (arr.crossing_count(e.id) == 2 && arr.crossings_between(uv.id, e.id) == 2) {
          in_propeller = true;
          break;
        }
      }
    }
    if (!in_propeller) {
      out.holds = false;
      out.witness = "flag (" + std::to_string(fl.leaf_vertex) + ", edge " +
                    std::to_string(fl.edge) + ") has d(" + std::to_string(v) +
                    ")=" + std::to_string(degree(d, v)) + " and no 2-propeller";
      return out;
    }
  }
  return out;
}

namespace {

Drawing component_subdrawing(const Drawing& d, const std::vector<int>& vertex_ids) {
  const std::set<int> keep(vertex_ids.begin(), vertex_ids.end());
  Drawing out;
  for (const auto& v : d.vertices)
    if (keep.count(v.id)) out.vertices.push_back(v);
  for (const auto& e : d.edges)
    if (keep.count(e.tail) && keep.count(e.head)) out.edges.push_back(e);
  return out;
}

}  // namespace

std::pair<std::vector<std::vector<int>>, std::vector<std::pair<int, int>>>
essential_components(const Drawing& d, const Arrangement& arr) {
  // Components of the abstract graph, not of the planarization.
  std::map<int, int> comp;
  for (const auto& v : d.vertices) comp[v.id] = v.id;
  std::function<int(int)> find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const auto& e : d.edges) comp[find(e.tail)] = find(e.head);

  std::map<int, std::vector<int>> groups;
  for (const auto& v : d.vertices) groups[find(v.id)].push_back(v.id);
  std::vector<std::vector<int>> essential;
  for (auto& [root, members] : groups) {
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end());
    essential.push_back(members);
  }
  std::sort(essential.begin(), essential.end());

  std::vector<std::pair<int, int>> order;
  for (size_t i = 0; i < essential.size(); ++i) {
    for (size_t j = 0; j < essential.size(); ++j) {
      if (i == j) continue;
      // Crossing components are incomparable.
      bool crosses = false;
      for (const auto& e : d.edges) {
        if (!std::binary_search(essential[i].begin(), essential[i].end(), e.tail)) continue;
        for (const auto& f : d.edges) {
          if (!std::binary_search(essential[j].begin(), essential[j].end(), f.tail)) continue;
          if (arr.crossings_between(e.id, f.id) > 0) {
            crosses = true;
            break;
          }
        }
        if (crosses) break;
      }
      if (crosses) continue;
      const Arrangement sub = Arrangement::build(component_subdrawing(d, essential[j]));
      const Point rep = d.vertex(essential[i][0]).location;
      if (sub.locate(rep) != sub.unbounded_face())
        order.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  return {essential, order};
}

StructureReport analyze(const Drawing& d, const Arrangement& arr, int k, int l) {
  StructureReport rep;
  rep.k = k;
  rep.l = l;
  rep.k_plane = check_k_plane(arr, k);
  rep.l_simple = check_l_simple(arr, l);
  auto [flags, empty] = find_flags(d, arr);
  rep.flags = std::move(flags);
  rep.empty_flags = std::move(empty);
  rep.special = find_special(arr);
  auto [comps, order] = essential_components(d, arr);
  rep.essential_components = std::move(comps);
  rep.containment = std::move(order);
  return rep;
}

std::string StructureReport::str() const {
  std::ostringstream os;
  os << "k_plane(" << k << "): " << (k_plane.holds ? "true" : "false");
  if (k_plane.witness_edge) os << " witness_edge=" << *k_plane.witness_edge;
  os << "\n";
  os << "l_simple(" << l << "): " << (l_simple.holds ? "true" : "false");
  if (l_simple.witness_pair)
    os << " witness_pair=(" << l_simple.witness_pair->first << ","
       << l_simple.witness_pair->second << ")";
  os << "\n";
  os << "flags:";
  for (const auto& f : flags) os << " (" << f.leaf_vertex << ",e" << f.edge << ")";
  os << "\nempty_flags:";
  for (const auto& f : empty_flags) os << " (" << f.leaf_vertex << ",e" << f.edge << ")";
  os << "\nspecial_applicable: " << (special.applicable ? "true" : "false") << "\n";
  os << "middle_segments:";
  for (int a : special.middle_segments) os << " a" << a;
  os << "\nspecial_cells:";
  for (int f : special.special_cells) os << " f" << f;
  os << "\nspecial_edges:";
  for (int e : special.special_edges) os << " e" << e;
  os << "\nessential_components:";
  for (const auto& comp : essential_components) {
    os << " {";
    for (size_t i = 0; i < comp.size(); ++i) os << (i ? "," : "") << comp[i];
    os << "}";
  }
  os << "\ncontainment:";
  for (const auto& [i, j] : containment) os << " " << i << "<" << j;
  os << "\n";
  return os.str();
}

}  // namespace kplane
