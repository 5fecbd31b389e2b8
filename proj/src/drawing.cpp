#include "kplane/drawing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace kplane {

const Vertex* Drawing::find_vertex(int id) const {
  for (const auto& v : vertices)
    if (v.id == id) return &v;
  return nullptr;
}

const Edge* Drawing::find_edge(int id) const {
  for (const auto& e : edges)
    if (e.id == id) return &e;
  return nullptr;
}

const Vertex& Drawing::vertex(int id) const {
  const Vertex* v = find_vertex(id);
  if (!v) throw std::invalid_argument("unknown vertex id " + std::to_string(id));
  return *v;
}

const Edge& Drawing::edge(int id) const {
  const Edge* e = find_edge(id);
  if (!e) throw std::invalid_argument("unknown edge id " + std::to_string(id));
  return *e;
}

int Drawing::max_vertex_id() const {
  int m = -1;
  for (const auto& v : vertices) m = std::max(m, v.id);
  return m;
}

int Drawing::max_edge_id() const {
  int m = -1;
  for (const auto& e : edges) m = std::max(m, e.id);
  return m;
}

std::string ValidationReport::str() const {
  std::ostringstream os;
  if (ok()) {
    os << "valid\n";
  } else {
    for (const auto& v : violations) os << v.rule << ": " << v.detail << "\n";
  }
  return os.str();
}

InvalidDrawing::InvalidDrawing(const ValidationReport& r)
    : std::runtime_error("invalid drawing:\n" + r.str()), report(r) {}

int degree(const Drawing& d, int v) {
  d.vertex(v);  // id check
  int deg = 0;
  for (const auto& e : d.edges)
    if (e.incident_to(v)) ++deg;
  return deg;
}

namespace {

struct SegRef {
  int edge_id;
  int seg_index;
  Segment seg;
};

std::vector<SegRef> edge_segments(const Edge& e) {
  std::vector<SegRef> out;
  for (size_t i = 0; i + 1 < e.polyline.size(); ++i)
    out.push_back({e.id, static_cast<int>(i), {e.polyline[i], e.polyline[i + 1]}});
  return out;
}

std::string pt(const Point& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

}  // namespace

ValidationReport validate(const Drawing& d) {
  ValidationReport rep;
  auto bad = [&rep](std::string rule, std::string detail) {
    rep.violations.push_back({std::move(rule), std::move(detail)});
  };

  // Vertex ids and locations.
  std::set<int> vertex_ids;
  std::map<Point, int> locations;
  for (const auto& v : d.vertices) {
    if (!vertex_ids.insert(v.id).second)
      bad("duplicate-vertex-id", "vertex id " + std::to_string(v.id));
    auto [it, fresh] = locations.emplace(v.location, v.id);
    if (!fresh)
      bad("duplicate-vertex-location",
          "vertices " + std::to_string(it->second) + " and " + std::to_string(v.id) +
              " at " + pt(v.location));
  }

  // Edge-level structure.
  std::set<int> edge_ids;
  std::map<std::pair<int, int>, int> pairs;
  for (const auto& e : d.edges) {
    const std::string eid = "edge " + std::to_string(e.id);
    if (!edge_ids.insert(e.id).second) bad("duplicate-edge-id", eid);
    if (e.tail == e.head) bad("loop-edge", eid);
    const Vertex* t = d.find_vertex(e.tail);
    const Vertex* h = d.find_vertex(e.head);
    if (!t || !h) {
      bad("unknown-endpoint", eid);
      continue;
    }
    auto key = std::minmax(e.tail, e.head);
    auto [it, fresh] = pairs.emplace(std::pair(key.first, key.second), e.id);
    if (!fresh)
      bad("parallel-edges",
          "edges " + std::to_string(it->second) + " and " + std::to_string(e.id));
    if (e.polyline.size() < 2) {
      bad("short-polyline", eid);
      continue;
    }
    if (e.polyline.front() != t->location)
      bad("polyline-tail-mismatch", eid + " starts at " + pt(e.polyline.front()));
    if (e.polyline.back() != h->location)
      bad("polyline-head-mismatch", eid + " ends at " + pt(e.polyline.back()));
    for (size_t i = 0; i + 1 < e.polyline.size(); ++i)
      if (e.polyline[i] == e.polyline[i + 1]) {
        bad("repeated-polyline-point", eid + " at " + pt(e.polyline[i]));
        return rep;  // degenerate segments poison every later geometric test
      }

    // Self-intersection: non-adjacent segment pairs must be disjoint and
    // adjacent ones must meet only at the shared bend.
    const auto segs = edge_segments(e);
    for (size_t i = 0; i < segs.size(); ++i) {
      for (size_t j = i + 1; j < segs.size(); ++j) {
        const Intersection x = intersect_segments(segs[i].seg, segs[j].seg);
        if (j == i + 1) {
          if (x.kind == IntersectionKind::Overlap)
            bad("polyline-backtrack", eid + " at bend " + pt(segs[i].seg.b));
          else if (x.kind != IntersectionKind::SharedEndpoint)
            bad("self-intersection", eid);
        } else if (x.kind != IntersectionKind::Disjoint) {
          bad("self-intersection", eid + " segments " + std::to_string(i) + "," +
                                       std::to_string(j));
        }
      }
    }

    // An edge must not pass through any vertex location except its own
    // endpoints at the polyline ends.
    for (const auto& v : d.vertices) {
      for (const auto& s : segs) {
        if (!on_segment(v.location, s.seg)) continue;
        const bool at_tail = s.seg_index == 0 && v.location == e.polyline.front();
        const bool at_head =
            s.seg_index == static_cast<int>(segs.size()) - 1 && v.location == e.polyline.back();
        if (at_tail || at_head) continue;
        bad("edge-through-vertex",
            eid + " passes through vertex " + std::to_string(v.id));
      }
    }
  }
  if (!rep.ok()) return rep;

  // Pairwise edge interactions.
  std::vector<SegRef> all;
  for (const auto& e : d.edges) {
    auto s = edge_segments(e);
    all.insert(all.end(), s.begin(), s.end());
  }
  std::map<Point, std::set<int>> crossing_edges;  // crossing point -> edges through it
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = i + 1; j < all.size(); ++j) {
      if (all[i].edge_id == all[j].edge_id) continue;
      const Intersection x = intersect_segments(all[i].seg, all[j].seg);
      const std::string who = "edges " + std::to_string(all[i].edge_id) + " and " +
                              std::to_string(all[j].edge_id);
      switch (x.kind) {
        case IntersectionKind::Disjoint:
          break;
        case IntersectionKind::Overlap:
          bad("overlap", who);
          break;
        case IntersectionKind::Touch:
          bad("touch", who + " at " + pt(*x.point));
          break;
        case IntersectionKind::SharedEndpoint: {
          // Only legitimate at a common graph vertex.
          const Edge& ea = d.edge(all[i].edge_id);
          const Edge& eb = d.edge(all[j].edge_id);
          const bool at_vertex = (*x.point == d.vertex(ea.tail).location ||
                                  *x.point == d.vertex(ea.head).location) &&
                                 (*x.point == d.vertex(eb.tail).location ||
                                  *x.point == d.vertex(eb.head).location);
          if (!at_vertex) bad("meet-at-non-vertex", who + " at " + pt(*x.point));
          break;
        }
        case IntersectionKind::ProperCrossing: {
          auto& through = crossing_edges[*x.point];
          through.insert(all[i].edge_id);
          through.insert(all[j].edge_id);
          break;
        }
      }
    }
  }
  for (const auto& [p, through] : crossing_edges) {
    if (through.size() >= 3) {
      std::string ids;
      for (int id : through) ids += (ids.empty() ? "" : ",") + std::to_string(id);
      bad("triple-point", "edges " + ids + " cross at " + pt(p));
    }
  }
  return rep;
}

Drawing add_edge(const Drawing& d, int u, int v, std::vector<Point> polyline) {
  Drawing out = d;
  Edge e;
  e.id = d.max_edge_id() + 1;
  e.tail = u;
  e.head = v;
  e.polyline = std::move(polyline);
  out.edges.push_back(std::move(e));
  return out;
}

Drawing add_isolated_vertex(const Drawing& d, const Point& p) {
  Drawing out = d;
  out.vertices.push_back({d.max_vertex_id() + 1, p});
  return out;
}

Drawing remove_vertex(const Drawing& d, int v) {
  Drawing out;
  for (const auto& vx : d.vertices)
    if (vx.id != v) out.vertices.push_back(vx);
  for (const auto& e : d.edges)
    if (!e.incident_to(v)) out.edges.push_back(e);
  return out;
}

}  // namespace kplane
