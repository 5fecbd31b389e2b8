#include "kplane/arrangement.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kplane {

std::set<int> Face::incident_vertices() const {
  std::set<int> out = boundary_vertices;
  out.insert(isolated_inside.begin(), isolated_inside.end());
  return out;
}

namespace {

// Angular order of nonzero direction vectors, counterclockwise from the
// positive x axis.
int angle_half(const Point& v) {
  if (v.y.sign() > 0 || (v.y.is_zero() && v.x.sign() > 0)) return 0;
  return 1;
}

bool angle_less(const Point& a, const Point& b) {
  const int ha = angle_half(a), hb = angle_half(b);
  if (ha != hb) return ha < hb;
  const int s = (a.x * b.y - a.y * b.x).sign();
  assert(s != 0 && "coincident directions at a node");
  return s > 0;
}

struct DSU {
  std::vector<int> parent;
  explicit DSU(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

Rational shoelace2(const std::vector<Point>& pts) {
  Rational s = 0;
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    s += pts[i].x * pts[i + 1].y - pts[i + 1].x * pts[i].y;
  return s;
}

}  // namespace

Arrangement Arrangement::build(const Drawing& d) {
  ValidationReport vr = validate(d);
  if (!vr.ok()) throw InvalidDrawing(vr);

  Arrangement arr;
  arr.drawing_ = d;

  // Graph-vertex nodes, ordered by vertex id.
  std::vector<Vertex> vs = d.vertices;
  std::sort(vs.begin(), vs.end(), [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  std::map<int, int> vertex_node;
  for (const auto& v : vs) {
    Node n;
    n.id = static_cast<int>(arr.nodes_.size());
    n.kind = NodeKind::GraphVertex;
    n.vertex_id = v.id;
    n.location = v.location;
    vertex_node[v.id] = n.id;
    arr.nodes_.push_back(std::move(n));
  }

  // Crossing points from pairwise segment intersections.
  struct SegRef {
    int edge_id;
    int seg;
    Segment s;
  };
  std::vector<SegRef> segs;
  for (const auto& e : d.edges)
    for (size_t i = 0; i + 1 < e.polyline.size(); ++i)
      segs.push_back({e.id, static_cast<int>(i), {e.polyline[i], e.polyline[i + 1]}});

  struct CrossingRec {
    Point p;
    int seg;  // segment index within the edge
  };
  std::map<int, std::vector<CrossingRec>> edge_crossing_pts;
  std::map<Point, std::pair<int, int>> crossing_edges;
  for (size_t i = 0; i < segs.size(); ++i) {
    for (size_t j = i + 1; j < segs.size(); ++j) {
      if (segs[i].edge_id == segs[j].edge_id) continue;
      const Intersection x = intersect_segments(segs[i].s, segs[j].s);
      if (x.kind != IntersectionKind::ProperCrossing) continue;
      const Point& p = *x.point;
      edge_crossing_pts[segs[i].edge_id].push_back({p, segs[i].seg});
      edge_crossing_pts[segs[j].edge_id].push_back({p, segs[j].seg});
      auto pr = std::minmax(segs[i].edge_id, segs[j].edge_id);
      crossing_edges[p] = {pr.first, pr.second};
      arr.pair_crossings_[{pr.first, pr.second}] += 1;
    }
  }
  std::map<Point, int> crossing_node;
  for (const auto& [p, ee] : crossing_edges) {  // map order: deterministic by point
    Node n;
    n.id = static_cast<int>(arr.nodes_.size());
    n.kind = NodeKind::CrossingPoint;
    n.edge_a = ee.first;
    n.edge_b = ee.second;
    n.location = p;
    crossing_node[p] = n.id;
    arr.nodes_.push_back(std::move(n));
  }

  // Split each edge into arcs at its crossings.
  std::vector<Edge> es = d.edges;
  std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (const auto& e : es) {
    auto& recs = edge_crossing_pts[e.id];
    std::sort(recs.begin(), recs.end(), [&e](const CrossingRec& a, const CrossingRec& b) {
      if (a.seg != b.seg) return a.seg < b.seg;
      const Point d0 = e.polyline[a.seg + 1] - e.polyline[a.seg];
      const Rational ka = (a.p.x - e.polyline[a.seg].x) * d0.x + (a.p.y - e.polyline[a.seg].y) * d0.y;
      const Rational kb = (b.p.x - e.polyline[b.seg].x) * d0.x + (b.p.y - e.polyline[b.seg].y) * d0.y;
      return ka < kb;
    });
    arr.edge_crossings_[e.id] = static_cast<int>(recs.size());

    int index = 0;
    int from_node = vertex_node.at(e.tail);
    std::vector<Point> pts = {e.polyline.front()};
    size_t next_rec = 0;
    for (size_t s = 0; s + 1 < e.polyline.size(); ++s) {
      while (next_rec < recs.size() && recs[next_rec].seg == static_cast<int>(s)) {
        const Point& q = recs[next_rec].p;
        pts.push_back(q);
        Arc a;
        a.id = static_cast<int>(arr.arcs_.size());
        a.parent_edge = e.id;
        a.index = index++;
        a.node_a = from_node;
        a.node_b = crossing_node.at(q);
        a.pts = pts;
        arr.edge_arcs_[e.id].push_back(a.id);
        arr.arcs_.push_back(std::move(a));
        from_node = crossing_node.at(q);
        pts = {q};
        ++next_rec;
      }
      pts.push_back(e.polyline[s + 1]);
    }
    Arc a;
    a.id = static_cast<int>(arr.arcs_.size());
    a.parent_edge = e.id;
    a.index = index;
    a.node_a = from_node;
    a.node_b = vertex_node.at(e.head);
    a.pts = std::move(pts);
    arr.edge_arcs_[e.id].push_back(a.id);
    arr.arcs_.push_back(std::move(a));
    assert(static_cast<int>(arr.edge_arcs_[e.id].size()) == arr.edge_crossings_[e.id] + 1);
  }

  const int num_nodes = static_cast<int>(arr.nodes_.size());
  const int num_arcs = static_cast<int>(arr.arcs_.size());
  const int num_darts = 2 * num_arcs;

  auto dart_pts = [&arr](int dart) {
    std::vector<Point> p = arr.arcs_[dart_arc(dart)].pts;
    if (dart & 1) std::reverse(p.begin(), p.end());
    return p;
  };
  auto dart_from = [&arr](int dart) {
    const Arc& a = arr.arcs_[dart_arc(dart)];
    return (dart & 1) ? a.node_b : a.node_a;
  };
  auto dart_to = [&arr, &dart_from](int dart) { return dart_from(dart_twin(dart)); };

  // Rotation: outgoing darts of each node in counterclockwise order.
  std::vector<std::vector<int>> rotation(num_nodes);
  for (int dart = 0; dart < num_darts; ++dart) rotation[dart_from(dart)].push_back(dart);
  std::vector<Point> exit_vec(num_darts);
  for (int dart = 0; dart < num_darts; ++dart) {
    const auto p = dart_pts(dart);
    exit_vec[dart] = p[1] - p[0];
  }
  for (auto& rot : rotation)
    std::sort(rot.begin(), rot.end(),
              [&exit_vec](int a, int b) { return angle_less(exit_vec[a], exit_vec[b]); });
  std::vector<int> rot_pos(num_darts, -1);
  for (const auto& rot : rotation)
    for (size_t i = 0; i < rot.size(); ++i) rot_pos[rot[i]] = static_cast<int>(i);

  // Face walks: successor of a dart is the rotation predecessor of its twin
  // at the head node. Bounded walks come out counterclockwise.
  auto next_dart = [&](int dart) {
    const int w = dart_to(dart);
    const auto& rot = rotation[w];
    const int i = rot_pos[dart_twin(dart)];
    return rot[(i + static_cast<int>(rot.size()) - 1) % rot.size()];
  };

  std::vector<int> dart_orbit(num_darts, -1);
  std::vector<std::vector<int>> orbits;
  for (int start = 0; start < num_darts; ++start) {
    if (dart_orbit[start] >= 0) continue;
    std::vector<int> walk;
    int cur = start;
    do {
      dart_orbit[cur] = static_cast<int>(orbits.size());
      walk.push_back(cur);
      cur = next_dart(cur);
    } while (cur != start);
    orbits.push_back(std::move(walk));
  }

  std::vector<Rational> orbit_area2(orbits.size(), Rational(0));
  for (size_t o = 0; o < orbits.size(); ++o) {
    Rational s = 0;
    for (int dart : orbits[o]) s += shoelace2(dart_pts(dart));
    orbit_area2[o] = s;
  }

  // Skeleton components (isolated vertices are their own components).
  DSU dsu(num_nodes);
  for (const auto& a : arr.arcs_) dsu.unite(a.node_a, a.node_b);
  std::map<int, int> comp_of_root;
  arr.node_component_.assign(num_nodes, -1);
  for (int n = 0; n < num_nodes; ++n) {
    const int root = dsu.find(n);
    auto [it, fresh] = comp_of_root.emplace(root, static_cast<int>(comp_of_root.size()));
    arr.node_component_[n] = it->second;
  }
  const int num_comps = static_cast<int>(comp_of_root.size());

  std::vector<int> orbit_comp(orbits.size(), -1);
  for (size_t o = 0; o < orbits.size(); ++o)
    orbit_comp[o] = arr.node_component_[dart_from(orbits[o][0])];

  // Outer orbit of each component: the unique one with minimal signed area
  // (zero for trees, negative when the component has cycles).
  std::vector<int> comp_outer(num_comps, -1);
  for (size_t o = 0; o < orbits.size(); ++o) {
    const int c = orbit_comp[o];
    if (comp_outer[c] < 0 || orbit_area2[o] < orbit_area2[comp_outer[c]])
      comp_outer[c] = static_cast<int>(o);
  }
  std::vector<char> is_bounded_orbit(orbits.size(), 0);
  for (size_t o = 0; o < orbits.size(); ++o) {
    if (static_cast<int>(o) == comp_outer[orbit_comp[o]]) {
      assert(orbit_area2[o].sign() <= 0);
    } else {
      assert(orbit_area2[o].sign() > 0);
      is_bounded_orbit[o] = 1;
    }
  }

  // Regions for point location: one per bounded orbit.
  std::vector<int> orbit_region(orbits.size(), -1);
  for (size_t o = 0; o < orbits.size(); ++o) {
    if (!is_bounded_orbit[o]) continue;
    Region r;
    r.walk = orbits[o];
    r.area2 = orbit_area2[o];
    orbit_region[o] = static_cast<int>(arr.regions_.size());
    arr.regions_.push_back(std::move(r));
  }

  // Representative location per component, for containment tests.
  std::vector<Point> comp_rep(num_comps);
  std::vector<char> comp_rep_set(num_comps, 0);
  for (int n = 0; n < num_nodes; ++n) {
    const int c = arr.node_component_[n];
    if (!comp_rep_set[c]) {
      comp_rep[c] = arr.nodes_[n].location;
      comp_rep_set[c] = 1;
    }
  }

  // Innermost bounded orbit of another component containing each component.
  std::vector<int> comp_parent_orbit(num_comps, -1);
  for (int c = 0; c < num_comps; ++c) {
    int best = -1;
    for (size_t o = 0; o < orbits.size(); ++o) {
      if (!is_bounded_orbit[o] || orbit_comp[o] == c) continue;
      if (!arr.point_in_region(comp_rep[c], arr.regions_[orbit_region[o]])) continue;
      if (best < 0 || orbit_area2[o] < orbit_area2[best]) best = static_cast<int>(o);
    }
    comp_parent_orbit[c] = best;
  }

  // Faces: the unbounded face first, then one face per bounded orbit.
  Face unb;
  unb.id = 0;
  unb.is_unbounded = true;
  arr.faces_.push_back(std::move(unb));
  arr.unbounded_face_ = 0;
  std::vector<int> orbit_face(orbits.size(), -1);
  for (size_t o = 0; o < orbits.size(); ++o) {
    if (!is_bounded_orbit[o]) continue;
    Face f;
    f.id = static_cast<int>(arr.faces_.size());
    f.walks.push_back(orbits[o]);
    orbit_face[o] = f.id;
    arr.regions_[orbit_region[o]].face = f.id;
    arr.faces_.push_back(std::move(f));
  }
  // Outer walks land in the face of the component's parent orbit.
  for (int c = 0; c < num_comps; ++c) {
    const int po = comp_parent_orbit[c];
    const int face = po < 0 ? arr.unbounded_face_ : orbit_face[po];
    if (comp_outer[c] >= 0) arr.faces_[face].walks.push_back(orbits[comp_outer[c]]);
    arr.component_parent_face_.push_back(face);
  }
  for (size_t o = 0; o < orbits.size(); ++o) {
    if (is_bounded_orbit[o]) continue;
    if (static_cast<int>(o) != comp_outer[orbit_comp[o]])
      throw std::logic_error("unclassified orbit");
  }

  arr.dart_face_.assign(num_darts, -1);
  for (size_t f = 0; f < arr.faces_.size(); ++f)
    for (const auto& walk : arr.faces_[f].walks)
      for (int dart : walk) {
        assert(arr.dart_face_[dart] == -1);
        arr.dart_face_[dart] = static_cast<int>(f);
      }
  for (int dart = 0; dart < num_darts; ++dart) assert(arr.dart_face_[dart] >= 0);

  // Vertices on boundaries; isolated vertices inside faces.
  for (size_t f = 0; f < arr.faces_.size(); ++f) {
    for (const auto& walk : arr.faces_[f].walks)
      for (int dart : walk) {
        const Node& n = arr.nodes_[dart_from(dart)];
        if (n.kind == NodeKind::GraphVertex) arr.faces_[f].boundary_vertices.insert(n.vertex_id);
      }
  }
  for (int n = 0; n < num_nodes; ++n) {
    const Node& node = arr.nodes_[n];
    if (node.kind != NodeKind::GraphVertex) continue;
    const int c = arr.node_component_[n];
    bool isolated = true;
    for (const auto& e : d.edges)
      if (e.incident_to(node.vertex_id)) {
        isolated = false;
        break;
      }
    if (isolated)
      arr.faces_[arr.component_parent_face_[c]].isolated_inside.insert(node.vertex_id);
  }

  // Euler relation for the planarization.
  const long long euler = static_cast<long long>(num_nodes) - num_arcs +
                          static_cast<long long>(arr.faces_.size());
  if (euler != 1 + num_comps)
    throw std::logic_error("Euler relation violated: V-E+F=" + std::to_string(euler) +
                           " with C=" + std::to_string(num_comps));

  return arr;
}

bool Arrangement::point_in_region(const Point& p, const Region& r) const {
  bool inside = false;
  for (int dart : r.walk) {
    const Arc& a = arcs_[dart_arc(dart)];
    for (size_t i = 0; i + 1 < a.pts.size(); ++i) {
      const Point& u = a.pts[i];
      const Point& v = a.pts[i + 1];
      const bool ua = u.y > p.y, va = v.y > p.y;
      if (ua == va) continue;
      // x where the segment meets the horizontal line through p
      const Rational t = (p.y - u.y) / (v.y - u.y);
      const Rational x = u.x + t * (v.x - u.x);
      if (x > p.x) inside = !inside;
    }
  }
  return inside;
}

int Arrangement::crossing_count(int edge_id) const {
  auto it = edge_crossings_.find(edge_id);
  if (it == edge_crossings_.end())
    throw std::invalid_argument("unknown edge id " + std::to_string(edge_id));
  return it->second;
}

std::map<int, int> Arrangement::crossings_per_edge() const { return edge_crossings_; }

int Arrangement::crossings_between(int e, int f) const {
  drawing_.edge(e);
  drawing_.edge(f);
  auto pr = std::minmax(e, f);
  auto it = pair_crossings_.find({pr.first, pr.second});
  return it == pair_crossings_.end() ? 0 : it->second;
}

int Arrangement::common_points(int e, int f) const {
  if (e == f) throw std::invalid_argument("common_points requires distinct edges");
  const Edge& ea = drawing_.edge(e);
  const Edge& eb = drawing_.edge(f);
  const bool shared = ea.incident_to(eb.tail) || ea.incident_to(eb.head);
  return crossings_between(e, f) + (shared ? 1 : 0);
}

int Arrangement::face_of_dart(int dart) const { return dart_face_.at(dart); }

bool Arrangement::is_bridge(int arc) const {
  return dart_face_[dart_forward(arc)] == dart_face_[dart_forward(arc) + 1];
}

int Arrangement::other_side(int face, int arc) const {
  const int fa = dart_face_[dart_forward(arc)];
  const int fb = dart_face_[dart_forward(arc) + 1];
  if (fa == face) return fb;
  if (fb == face) return fa;
  throw std::invalid_argument("arc " + std::to_string(arc) + " not on face " +
                              std::to_string(face));
}

std::vector<int> Arrangement::arcs_on_face(int face) const {
  std::set<int> out;
  for (const auto& walk : faces_.at(face).walks)
    for (int dart : walk) out.insert(dart_arc(dart));
  return {out.begin(), out.end()};
}

std::vector<int> Arrangement::faces_incident_to_vertex(int vertex_id) const {
  std::vector<int> out;
  for (const auto& f : faces_) {
    if (f.boundary_vertices.count(vertex_id) || f.isolated_inside.count(vertex_id))
      out.push_back(f.id);
  }
  return out;
}

int Arrangement::node_of_vertex(int vertex_id) const {
  for (const auto& n : nodes_)
    if (n.kind == NodeKind::GraphVertex && n.vertex_id == vertex_id) return n.id;
  throw std::invalid_argument("unknown vertex id " + std::to_string(vertex_id));
}

const std::vector<int>& Arrangement::arcs_of_edge(int edge_id) const {
  auto it = edge_arcs_.find(edge_id);
  if (it == edge_arcs_.end())
    throw std::invalid_argument("unknown edge id " + std::to_string(edge_id));
  return it->second;
}

bool Arrangement::on_skeleton(const Point& p) const {
  for (const auto& n : nodes_)
    if (n.location == p) return true;
  for (const auto& a : arcs_)
    for (size_t i = 0; i + 1 < a.pts.size(); ++i)
      if (on_segment(p, {a.pts[i], a.pts[i + 1]})) return true;
  return false;
}

int Arrangement::locate(const Point& p) const {
  if (on_skeleton(p)) throw std::domain_error("locate: point lies on the arrangement");
  int best = -1;
  for (size_t r = 0; r < regions_.size(); ++r) {
    if (!point_in_region(p, regions_[r])) continue;
    if (best < 0 || regions_[r].area2 < regions_[best].area2) best = static_cast<int>(r);
  }
  return best < 0 ? unbounded_face_ : regions_[best].face;
}

Point Arrangement::interior_point(int face) const {
  const Face& f = faces_.at(face);
  if (f.is_unbounded) {
    Rational mx = 0, my = 0;
    bool any = false;
    for (const auto& a : arcs_)
      for (const auto& p : a.pts) {
        if (!any || p.x > mx) mx = p.x;
        if (!any || p.y > my) my = p.y;
        any = true;
      }
    for (const auto& n : nodes_) {
      if (!any || n.location.x > mx) mx = n.location.x;
      if (!any || n.location.y > my) my = n.location.y;
      any = true;
    }
    const Point out{mx + 1, my + 1};
    if (locate(out) != face) throw std::logic_error("interior_point: probe failed");
    return out;
  }

  // Stab the face with a horizontal line strictly between two consecutive
  // distinct y coordinates of the arrangement, then take midpoints of
  // consecutive intersections.
  std::set<Rational> face_ys;
  for (const auto& walk : f.walks)
    for (int dart : walk)
      for (const auto& p : arcs_[dart_arc(dart)].pts) face_ys.insert(p.y);
  std::set<Rational> global_ys;
  for (const auto& a : arcs_)
    for (const auto& p : a.pts) global_ys.insert(p.y);
  for (const auto& n : nodes_) global_ys.insert(n.location.y);
  const Rational ymin = *face_ys.begin();
  const Rational ymax = *face_ys.rbegin();

  std::vector<Rational> ys(global_ys.begin(), global_ys.end());
  for (size_t i = 0; i + 1 < ys.size(); ++i) {
    if (ys[i] < ymin || ys[i + 1] > ymax) continue;
    const Rational y = (ys[i] + ys[i + 1]) / 2;
    std::vector<Rational> xs;
    for (const auto& a : arcs_) {
      for (size_t k = 0; k + 1 < a.pts.size(); ++k) {
        const Point& u = a.pts[k];
        const Point& v = a.pts[k + 1];
        const bool ua = u.y > y, va = v.y > y;
        if (ua == va) continue;
        const Rational t = (y - u.y) / (v.y - u.y);
        xs.push_back(u.x + t * (v.x - u.x));
      }
    }
    std::sort(xs.begin(), xs.end());
    for (size_t k = 0; k + 1 < xs.size(); ++k) {
      const Point cand{(xs[k] + xs[k + 1]) / 2, y};
      if (locate(cand) == face) return cand;
    }
  }
  throw std::logic_error("interior_point: no stabbing line hit face " + std::to_string(face));
}

std::string Arrangement::dump() const {
  std::ostringstream os;
  os << "nodes " << nodes_.size() << " arcs " << arcs_.size() << " faces " << faces_.size()
     << " components " << component_count() << "\n";
  for (const auto& n : nodes_) {
    os << "node " << n.id << " ";
    if (n.kind == NodeKind::GraphVertex)
      os << "vertex " << n.vertex_id;
    else
      os << "crossing " << n.edge_a << "x" << n.edge_b;
    os << " at " << n.location << "\n";
  }
  for (const auto& a : arcs_)
    os << "arc " << a.id << " edge " << a.parent_edge << " index " << a.index << " nodes "
       << a.node_a << "-" << a.node_b << "\n";
  for (const auto& f : faces_) {
    os << "face " << f.id << (f.is_unbounded ? " unbounded" : "") << " walks";
    for (const auto& walk : f.walks) {
      os << " [";
      for (size_t i = 0; i < walk.size(); ++i)
        os << (i ? " " : "") << "a" << dart_arc(walk[i]) << (walk[i] & 1 ? "-" : "+");
      os << "]";
    }
    os << " vertices {";
    bool first = true;
    for (int v : f.incident_vertices()) {
      os << (first ? "" : ",") << v;
      first = false;
    }
    os << "}\n";
  }
  return os.str();
}

}  // namespace kplane
