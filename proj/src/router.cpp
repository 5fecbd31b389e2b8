#include "kplane/router.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>

namespace kplane {

namespace {

// Even-odd test against the face's own walks. The walks of a face are its
// complete boundary, so parity decides membership; the unbounded face is the
// complement of its top-level walks.
bool point_in_face(const Arrangement& arr, int face, const Point& p) {
  bool inside = false;
  for (const auto& walk : arr.faces()[face].walks) {
    for (int dart : walk) {
      const Arc& a = arr.arcs()[dart_arc(dart)];
      for (size_t i = 0; i + 1 < a.pts.size(); ++i) {
        const Point& u = a.pts[i];
        const Point& v = a.pts[i + 1];
        const bool ua = u.y > p.y, va = v.y > p.y;
        if (ua == va) continue;
        const Rational t = (p.y - u.y) / (v.y - u.y);
        if (u.x + t * (v.x - u.x) > p.x) inside = !inside;
      }
    }
  }
  // Each arc contributes both darts once per face side; a bridge flips twice.
  // Walks listed twice would cancel, which cannot happen by construction.
  return arr.faces()[face].is_unbounded ? !inside : inside;
}

Rational y_at(const Segment& s, const Rational& x) {
  const Rational t = (x - s.a.x) / (s.b.x - s.a.x);
  return s.a.y + t * (s.b.y - s.a.y);
}

Point l1_normalized(const Point& v) {
  const Rational n = abs(v.x) + abs(v.y);
  return {v.x / n, v.y / n};
}

// ---------------------------------------------------------------------------
// New-edge verification: the existing drawing is valid, so only interactions
// involving the candidate polyline need checking.

struct EdgeCheck {
  bool ok = false;
  std::map<int, int> crossings;  // per existing edge
  std::string why;
};

EdgeCheck check_new_edge(const Drawing& d, int u, int v, const std::vector<Point>& poly) {
  EdgeCheck out;
  if (poly.size() < 2) {
    out.why = "polyline too short";
    return out;
  }
  if (poly.front() != d.vertex(u).location || poly.back() != d.vertex(v).location) {
    out.why = "polyline does not join its endpoints";
    return out;
  }
  for (size_t i = 0; i + 1 < poly.size(); ++i)
    if (poly[i] == poly[i + 1]) {
      out.why = "repeated polyline point";
      return out;
    }

  // Self-intersection.
  for (size_t i = 0; i + 1 < poly.size(); ++i) {
    for (size_t j = i + 1; j + 1 < poly.size(); ++j) {
      const Intersection x =
          intersect_segments({poly[i], poly[i + 1]}, {poly[j], poly[j + 1]});
      if (j == i + 1) {
        if (x.kind != IntersectionKind::SharedEndpoint) {
          out.why = "self-intersection at a bend";
          return out;
        }
      } else if (x.kind != IntersectionKind::Disjoint) {
        out.why = "self-intersection";
        return out;
      }
    }
  }

  // Vertices: the new edge may meet only its own endpoints, at its ends.
  for (const auto& vx : d.vertices) {
    for (size_t i = 0; i + 1 < poly.size(); ++i) {
      if (!on_segment(vx.location, {poly[i], poly[i + 1]})) continue;
      const bool tail_ok = i == 0 && vx.location == poly.front();
      const bool head_ok = i + 2 == poly.size() && vx.location == poly.back();
      if (!(tail_ok || head_ok)) {
        out.why = "passes through vertex " + std::to_string(vx.id);
        return out;
      }
    }
  }

  // Existing edges: only clean crossings and endpoint sharing at u or v.
  std::set<Point> crossing_points;
  for (const auto& e : d.edges) out.crossings[e.id] = 0;
  for (const auto& e : d.edges) {
    for (size_t q = 0; q + 1 < e.polyline.size(); ++q) {
      const Segment es{e.polyline[q], e.polyline[q + 1]};
      for (size_t i = 0; i + 1 < poly.size(); ++i) {
        const Intersection x = intersect_segments({poly[i], poly[i + 1]}, es);
        switch (x.kind) {
          case IntersectionKind::Disjoint:
            break;
          case IntersectionKind::Overlap:
            out.why = "overlaps edge " + std::to_string(e.id);
            return out;
          case IntersectionKind::Touch:
            out.why = "touches edge " + std::to_string(e.id);
            return out;
          case IntersectionKind::SharedEndpoint: {
            const bool at_end = (*x.point == poly.front() && e.incident_to(u)) ||
                                (*x.point == poly.back() && e.incident_to(v));
            if (!at_end) {
              out.why = "meets edge " + std::to_string(e.id) + " at a non-vertex point";
              return out;
            }
            break;
          }
          case IntersectionKind::ProperCrossing: {
            if (!crossing_points.insert(*x.point).second) {
              out.why = "two crossings coincide";
              return out;
            }
            out.crossings[e.id] += 1;
            break;
          }
        }
      }
    }
  }
  out.ok = true;
  return out;
}

bool crossings_match(const EdgeCheck& chk, const Drawing& d, const Arrangement& arr,
                     const Corridor& c) {
  std::map<int, int> want;
  for (const auto& e : d.edges) want[e.id] = 0;
  for (const auto& [face, arc] : c.steps) want[arr.arcs()[arc].parent_edge] += 1;
  return chk.crossings == want;
}

// ---------------------------------------------------------------------------
// Trapezoidal decomposition of one face, used to route between two interior
// points. All comparisons are exact; trapezoids between consecutive spanning
// segments contain no face-boundary geometry, so segments between points of
// one trapezoid stay inside the face.

struct Trap {
  int slab = 0;
  Rational lo_left, hi_left;    // wall interval at the left slab boundary
  Rational lo_right, hi_right;  // wall interval at the right slab boundary
  Point center;
};

class FaceRouter {
 public:
  FaceRouter(const Arrangement& arr, int face, const std::vector<Point>& queries,
             const std::vector<Segment>& obstacles, const Rational& frac)
      : arr_(arr), face_(face) {
    collect_geometry(queries, obstacles);
    build_traps(frac);
    build_adjacency(frac);
  }

  // Waypoint chain from p to q, both strictly inside the face and on wall
  // x-coordinates. Returns the full chain including p and q.
  std::optional<std::vector<Point>> route(const Point& p, const Point& q) const {
    const int tp = host_trap(p);
    const int tq = host_trap(q);
    if (tp < 0 || tq < 0) return std::nullopt;
    if (tp == tq) return std::vector<Point>{p, traps_[tp].center, q};

    std::vector<int> prev(traps_.size(), -1);
    std::vector<char> seen(traps_.size(), 0);
    std::queue<int> bfs;
    bfs.push(tp);
    seen[tp] = 1;
    while (!bfs.empty()) {
      const int t = bfs.front();
      bfs.pop();
      if (t == tq) break;
      for (const auto& [to, gate] : adj_[t]) {
        if (seen[to]) continue;
        seen[to] = 1;
        prev[to] = t;
        bfs.push(to);
      }
    }
    if (!seen[tq]) return std::nullopt;

    std::vector<int> path;
    for (int t = tq; t != -1; t = prev[t]) path.push_back(t);
    std::reverse(path.begin(), path.end());

    std::vector<Point> way{p};
    for (size_t i = 0; i < path.size(); ++i) {
      way.push_back(traps_[path[i]].center);
      if (i + 1 < path.size()) {
        const Point* gate = nullptr;
        for (const auto& [to, g] : adj_[path[i]])
          if (to == path[i + 1]) {
            gate = &g;
            break;
          }
        if (!gate) return std::nullopt;
        way.push_back(*gate);
      }
    }
    way.push_back(q);
    return way;
  }

 private:
  const Arrangement& arr_;
  int face_;
  std::vector<Segment> segs_;        // face boundary plus the bounding box
  std::vector<Segment> verticals_;   // vertical pieces, indexed by wall x
  std::vector<Point> blockers_;      // nodes on the boundary and isolated vertices
  std::vector<Rational> walls_;      // slab boundaries, ascending
  std::vector<std::vector<int>> slab_segs_;  // spanning segment ids per slab, by y
  std::vector<Trap> traps_;
  std::vector<std::vector<int>> slab_traps_;
  std::vector<std::vector<std::pair<int, Point>>> adj_;

  void collect_geometry(const std::vector<Point>& queries, const std::vector<Segment>& obstacles) {
    std::set<Rational> xs;
    std::set<int> arcs;
    for (const auto& walk : arr_.faces()[face_].walks)
      for (int dart : walk) arcs.insert(dart_arc(dart));
    Rational minx(0), maxx(0), miny(0), maxy(0);
    bool any = false;
    auto grow = [&](const Point& p) {
      if (!any || p.x < minx) minx = p.x;
      if (!any || p.x > maxx) maxx = p.x;
      if (!any || p.y < miny) miny = p.y;
      if (!any || p.y > maxy) maxy = p.y;
      any = true;
    };
    auto add_segment = [&](const Point& a, const Point& b) {
      grow(a);
      grow(b);
      if (a.x == b.x)
        verticals_.push_back({a, b});
      else
        segs_.push_back({a, b});
      xs.insert(a.x);
      xs.insert(b.x);
      blockers_.push_back(a);  // bends and nodes both block gates
      blockers_.push_back(b);
    };
    for (int a : arcs) {
      const auto& pts = arr_.arcs()[a].pts;
      for (size_t i = 0; i + 1 < pts.size(); ++i) add_segment(pts[i], pts[i + 1]);
    }
    for (const auto& ob : obstacles) add_segment(ob.a, ob.b);
    for (int vid : arr_.faces()[face_].isolated_inside) {
      const Point& p = arr_.drawing().vertex(vid).location;
      grow(p);
      xs.insert(p.x);
      blockers_.push_back(p);
    }
    for (const auto& q : queries) {
      grow(q);
      xs.insert(q.x);
    }
    if (!any) grow({0, 0});

    const Rational margin(4);
    const Point bl{minx - margin, miny - margin}, br{maxx + margin, miny - margin};
    const Point tl{minx - margin, maxy + margin}, tr{maxx + margin, maxy + margin};
    segs_.push_back({bl, br});
    segs_.push_back({tl, tr});
    verticals_.push_back({bl, tl});
    verticals_.push_back({br, tr});
    xs.insert(bl.x);
    xs.insert(br.x);
    walls_.assign(xs.begin(), xs.end());
  }

  void build_traps(const Rational& frac) {
    const int nslabs = static_cast<int>(walls_.size()) - 1;
    slab_segs_.resize(nslabs);
    slab_traps_.resize(nslabs);
    for (int s = 0; s < nslabs; ++s) {
      const Rational& xl = walls_[s];
      const Rational& xr = walls_[s + 1];
      const Rational xm = (xl + xr) / 2;
      std::vector<int> ids;
      for (size_t i = 0; i < segs_.size(); ++i) {
        const Rational lo = min(segs_[i].a.x, segs_[i].b.x);
        const Rational hi = max(segs_[i].a.x, segs_[i].b.x);
        if (lo <= xl && hi >= xr) ids.push_back(static_cast<int>(i));
      }
      std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        return y_at(segs_[a], xm) < y_at(segs_[b], xm);
      });
      slab_segs_[s] = ids;
      for (size_t i = 0; i + 1 < ids.size(); ++i) {
        const Rational yl_lo = y_at(segs_[ids[i]], xl), yl_hi = y_at(segs_[ids[i + 1]], xl);
        const Rational yr_lo = y_at(segs_[ids[i]], xr), yr_hi = y_at(segs_[ids[i + 1]], xr);
        const Rational ym_lo = y_at(segs_[ids[i]], xm), ym_hi = y_at(segs_[ids[i + 1]], xm);
        if (ym_lo >= ym_hi) continue;  // degenerate gap
        Trap t;
        t.slab = s;
        t.lo_left = yl_lo;
        t.hi_left = yl_hi;
        t.lo_right = yr_lo;
        t.hi_right = yr_hi;
        t.center = {xm, ym_lo + frac * (ym_hi - ym_lo)};
        if (!point_in_face(arr_, face_, t.center)) continue;
        slab_traps_[s].push_back(static_cast<int>(traps_.size()));
        traps_.push_back(std::move(t));
      }
    }
  }

  void build_adjacency(const Rational& frac) {
    adj_.resize(traps_.size());
    const int nslabs = static_cast<int>(walls_.size()) - 1;
    for (int s = 0; s + 1 < nslabs; ++s) {
      const Rational& x = walls_[s + 1];
      // Blocked intervals on this wall.
      std::vector<std::pair<Rational, Rational>> blocked;
      for (const auto& vseg : verticals_) {
        if (vseg.a.x != x) continue;
        blocked.push_back({min(vseg.a.y, vseg.b.y), max(vseg.a.y, vseg.b.y)});
      }
      for (const auto& b : blockers_)
        if (b.x == x) blocked.push_back({b.y, b.y});
      std::sort(blocked.begin(), blocked.end());

      for (int tl : slab_traps_[s]) {
        for (int tr : slab_traps_[s + 1]) {
          const Rational lo = max(traps_[tl].lo_right, traps_[tr].lo_left);
          const Rational hi = min(traps_[tl].hi_right, traps_[tr].hi_left);
          if (lo >= hi) continue;
          // First open gap of the overlap after removing blocked intervals.
          Rational cur = lo;
          bool covered = false;
          for (const auto& [blo, bhi] : blocked) {
            if (bhi <= cur) continue;
            if (blo > cur) break;  // free gap (cur, min(blo, hi))
            cur = bhi;
            if (cur >= hi) {
              covered = true;
              break;
            }
          }
          if (covered || cur >= hi) continue;
          Rational gap_hi = hi;
          for (const auto& [blo, bhi] : blocked)
            if (blo > cur && blo < gap_hi) gap_hi = blo;
          const Point gate{x, cur + frac * (gap_hi - cur)};
          adj_[tl].push_back({tr, gate});
          adj_[tr].push_back({tl, gate});
        }
      }
    }
  }

  int host_trap(const Point& p) const {
    // p sits on a wall; try the slab to its right, then to its left.
    const int nslabs = static_cast<int>(walls_.size()) - 1;
    for (int side = 0; side < 2; ++side) {
      for (int s = 0; s < nslabs; ++s) {
        const bool right = side == 0;
        if ((right && walls_[s] != p.x) || (!right && walls_[s + 1] != p.x)) continue;
        for (int t : slab_traps_[s]) {
          const Rational lo = right ? traps_[t].lo_left : traps_[t].lo_right;
          const Rational hi = right ? traps_[t].hi_left : traps_[t].hi_right;
          if (lo < p.y && p.y < hi) return t;
        }
      }
    }
    // p may sit strictly inside a slab when it is a trapezoid-derived point.
    for (int s = 0; s < nslabs; ++s) {
      if (!(walls_[s] < p.x && p.x < walls_[s + 1])) continue;
      for (int t : slab_traps_[s]) {
        const Rational lo = y_at({{walls_[s], traps_[t].lo_left}, {walls_[s + 1], traps_[t].lo_right}}, p.x);
        const Rational hi = y_at({{walls_[s], traps_[t].hi_left}, {walls_[s + 1], traps_[t].hi_right}}, p.x);
        if (lo < p.y && p.y < hi) return t;
      }
    }
    return -1;
  }
};

// ---------------------------------------------------------------------------
// Stubs: short clean segments leaving a vertex into a face, or punching
// through an arc at a chosen interior point.

bool stub_segment_clean(const Arrangement& arr, const Segment& stub,
                        std::optional<Point> allowed_shared,
                        std::optional<std::pair<int, Point>> allowed_crossing) {
  for (const auto& a : arr.arcs()) {
    for (size_t i = 0; i + 1 < a.pts.size(); ++i) {
      const Segment s{a.pts[i], a.pts[i + 1]};
      const Intersection x = intersect_segments(stub, s);
      switch (x.kind) {
        case IntersectionKind::Disjoint:
          break;
        case IntersectionKind::SharedEndpoint:
          if (!allowed_shared || *x.point != *allowed_shared) return false;
          break;
        case IntersectionKind::ProperCrossing:
          if (!allowed_crossing || a.id != allowed_crossing->first ||
              *x.point != allowed_crossing->second)
            return false;
          break;
        default:
          return false;
      }
    }
  }
  for (const auto& n : arr.nodes()) {
    if (allowed_shared && n.location == *allowed_shared) continue;
    if (on_segment(n.location, stub)) return false;
  }
  return true;
}

std::optional<Point> vertex_stub(const Arrangement& arr, int face, int vertex_id,
                                 const Rational& first_step, const RoutingPolicy& policy) {
  const Point u = arr.drawing().vertex(vertex_id).location;
  const int u_node = arr.node_of_vertex(vertex_id);

  std::vector<Point> dirs;
  // Cone bisectors at each occurrence of the vertex on the face walks.
  for (const auto& walk : arr.faces()[face].walks) {
    const int n = static_cast<int>(walk.size());
    for (int i = 0; i < n; ++i) {
      const int dart = walk[i];
      const Arc& a = arr.arcs()[dart_arc(dart)];
      const int from = (dart & 1) ? a.node_b : a.node_a;
      if (from != u_node) continue;
      const auto dart_dir = [&arr](int dd) {
        const Arc& aa = arr.arcs()[dart_arc(dd)];
        if (dd & 1) return aa.pts[aa.pts.size() - 2] - aa.pts.back();
        return aa.pts[1] - aa.pts[0];
      };
      const Point out_dir = l1_normalized(dart_dir(dart));
      const int prev = walk[(i + n - 1) % n];
      const Point back_dir = l1_normalized(dart_dir(dart_twin(prev)));
      const Point sum = out_dir + back_dir;
      if (!(sum.x.is_zero() && sum.y.is_zero())) {
        dirs.push_back(sum);
        dirs.push_back({-sum.x, -sum.y});
      }
      // Perpendiculars of the outgoing direction as extra candidates.
      dirs.push_back({-out_dir.y, out_dir.x});
      dirs.push_back({out_dir.y, -out_dir.x});
    }
  }
  for (int dx = -1; dx <= 1; ++dx)
    for (int dy = -1; dy <= 1; ++dy)
      if (dx || dy) dirs.push_back({Rational(dx), Rational(dy)});

  for (const Point& dir : dirs) {
    Rational step = first_step;
    for (int t = 0; t <= policy.max_retries; ++t, step *= policy.shrink) {
      const Point g{u.x + step * dir.x, u.y + step * dir.y};
      if (arr.on_skeleton(g)) continue;
      if (!point_in_face(arr, face, g)) continue;
      if (!stub_segment_clean(arr, {u, g}, u, std::nullopt)) continue;
      return g;
    }
  }
  return std::nullopt;
}

struct CrossingStub {
  Point before;  // in the face preceding the crossing
  Point at;      // the crossing point on the arc
  Point after;   // in the face following it
};

std::optional<CrossingStub> crossing_stub(const Arrangement& arr, int face_before, int arc,
                                          int occurrence, int occurrences_total,
                                          const Rational& first_step,
                                          const RoutingPolicy& policy) {
  const Arc& a = arr.arcs()[arc];
  const int nsegs = static_cast<int>(a.pts.size()) - 1;
  // Interior point of the arc for this pass: spread the occurrences evenly
  // along the arc parameter, never landing on a bend or node.
  const Rational pos = Rational(nsegs) * Rational(2 * occurrence + 1, 2 * occurrences_total);
  long si = pos.floor().get_si();
  Rational frac = pos - Rational(pos.floor());
  if (si >= nsegs) {
    si = nsegs - 1;
    frac = Rational(1, 2);
  }
  if (frac.is_zero()) frac = Rational(1, 2);
  const Point sa = a.pts[si], sb = a.pts[si + 1];
  const Point x{sa.x + frac * (sb.x - sa.x), sa.y + frac * (sb.y - sa.y)};
  const Point d = sb - sa;
  const Point n{-d.y, d.x};  // points to the left of the forward dart

  const int fwd_face = arr.face_of_dart(dart_forward(arc));
  const int sign = (fwd_face == face_before) ? 1 : -1;
  const int face_after = arr.other_side(face_before, arc);

  Rational step = first_step;
  for (int trial = 0; trial <= policy.max_retries; ++trial, step *= policy.shrink) {
    const Point before{x.x + Rational(sign) * step * n.x, x.y + Rational(sign) * step * n.y};
    const Point after{x.x - Rational(sign) * step * n.x, x.y - Rational(sign) * step * n.y};
    if (arr.on_skeleton(before) || arr.on_skeleton(after)) continue;
    if (!point_in_face(arr, face_before, before)) continue;
    if (!point_in_face(arr, face_after, after)) continue;
    if (!stub_segment_clean(arr, {before, after}, std::nullopt, std::pair(arc, x))) continue;
    return CrossingStub{before, x, after};
  }
  return std::nullopt;
}

std::vector<Point> dedupe(std::vector<Point> pts) {
  std::vector<Point> out;
  for (auto& p : pts)
    if (out.empty() || !(out.back() == p)) out.push_back(std::move(p));
  return out;
}

// Per-edge crossing counts of one candidate segment against the drawing, or
// nullopt when the segment interacts in any disallowed way. end_share names
// the one point where meeting an incident edge's endpoint is legitimate.
std::optional<std::map<int, int>> segment_profile(const Drawing& d, const Segment& s,
                                                  const std::optional<Point>& tail_share,
                                                  const std::optional<Point>& head_share) {
  std::map<int, int> crossings;
  for (const auto& e : d.edges) {
    for (size_t q = 0; q + 1 < e.polyline.size(); ++q) {
      const Intersection x = intersect_segments(s, {e.polyline[q], e.polyline[q + 1]});
      switch (x.kind) {
        case IntersectionKind::Disjoint:
          break;
        case IntersectionKind::ProperCrossing:
          crossings[e.id] += 1;
          break;
        case IntersectionKind::SharedEndpoint:
          if (tail_share && *x.point == *tail_share) break;
          if (head_share && *x.point == *head_share) break;
          return std::nullopt;
        default:
          return std::nullopt;
      }
    }
  }
  for (const auto& vx : d.vertices) {
    if (tail_share && vx.location == *tail_share) continue;
    if (head_share && vx.location == *head_share) continue;
    if (on_segment(vx.location, s)) return std::nullopt;
  }
  return crossings;
}

// Replaces poly[i..j] by the direct segment when the crossing profile is
// unchanged and nothing else in the polyline is disturbed.
bool shortcut_ok(const Drawing& d, const Point& u_loc, const Point& v_loc,
                 const std::vector<Point>& poly, size_t i, size_t j) {
  const Segment cand{poly[i], poly[j]};
  if (cand.a == cand.b) return false;
  const auto prof =
      segment_profile(d, cand, i == 0 ? std::optional(u_loc) : std::nullopt,
                      j + 1 == poly.size() ? std::optional(v_loc) : std::nullopt);
  if (!prof) return false;
  std::map<int, int> replaced;
  for (size_t k = i; k < j; ++k) {
    const auto p = segment_profile(d, {poly[k], poly[k + 1]},
                                   k == 0 ? std::optional(u_loc) : std::nullopt,
                                   k + 2 == poly.size() ? std::optional(v_loc) : std::nullopt);
    if (!p) return false;
    for (const auto& [e, c] : *p) replaced[e] += c;
  }
  std::erase_if(replaced, [](const auto& kv) { return kv.second == 0; });
  std::map<int, int> mine = *prof;
  std::erase_if(mine, [](const auto& kv) { return kv.second == 0; });
  if (mine != replaced) return false;
  // The direct segment must not disturb the rest of the polyline.
  for (size_t k = 0; k + 1 < poly.size(); ++k) {
    if (k >= i && k < j) continue;
    const Intersection x = intersect_segments(cand, {poly[k], poly[k + 1]});
    const bool adj_before = (k + 1 == i);
    const bool adj_after = (k == j);
    if (adj_before || adj_after) {
      if (x.kind != IntersectionKind::SharedEndpoint) return false;
    } else if (x.kind != IntersectionKind::Disjoint) {
      return false;
    }
  }
  return true;
}

// Moving interior point i is sound when the two adjacent segments keep their
// joint crossing profile and stay clear of the rest of the polyline.
bool snap_ok(const Drawing& d, const Point& u_loc, const Point& v_loc,
             const std::vector<Point>& orig, const std::vector<Point>& moved, size_t i) {
  auto pair_profile = [&](const std::vector<Point>& pl) -> std::optional<std::map<int, int>> {
    std::map<int, int> sum;
    for (size_t k = i - 1; k <= i; ++k) {
      auto p = segment_profile(d, {pl[k], pl[k + 1]},
                               k == 0 ? std::optional(u_loc) : std::nullopt,
                               k + 2 == pl.size() ? std::optional(v_loc) : std::nullopt);
      if (!p) return std::nullopt;
      for (const auto& [e, c] : *p) sum[e] += c;
    }
    std::erase_if(sum, [](const auto& kv) { return kv.second == 0; });
    return sum;
  };
  const auto po = pair_profile(orig);
  const auto pm = pair_profile(moved);
  if (!po || !pm || *po != *pm) return false;
  if (intersect_segments({moved[i - 1], moved[i]}, {moved[i], moved[i + 1]}).kind !=
      IntersectionKind::SharedEndpoint)
    return false;
  for (size_t k = 0; k + 1 < moved.size(); ++k) {
    if (k + 1 >= i && k <= i) continue;  // the moved pair itself
    for (size_t m = i - 1; m <= i; ++m) {
      const Intersection x =
          intersect_segments({moved[m], moved[m + 1]}, {moved[k], moved[k + 1]});
      const bool adjacent = (k + 1 == m) || (k == m + 1);
      if (adjacent) {
        if (x.kind != IntersectionKind::SharedEndpoint) return false;
      } else if (x.kind != IntersectionKind::Disjoint) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Point> shortcut_pass(const Drawing& d, const Point& u_loc, const Point& v_loc,
                                 std::vector<Point> poly) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Point> out{poly.front()};
    size_t i = 0;
    while (i + 1 < poly.size()) {
      size_t next = i + 1;
      // Try the longest jumps first, halving the span geometrically.
      for (size_t span = poly.size() - 1 - i; span >= 2; span /= 2) {
        const size_t j = i + span;
        if (shortcut_ok(d, u_loc, v_loc, poly, i, j)) {
          next = j;
          break;
        }
      }
      if (next != i + 1) changed = true;
      out.push_back(poly[next]);
      i = next;
    }
    poly = std::move(out);
  }
  return poly;
}

}  // namespace

std::vector<Point> realize(const Drawing& d, const Arrangement& arr, const Corridor& c,
                           const RoutingPolicy& policy) {
  // Structural sanity: chained faces, incident endpoints. Crossing budgets
  // are the caller's concern.
  {
    const int first_face = c.steps.empty() ? c.final_face : c.steps.front().first;
    auto face_has = [&arr](int face, int vid) {
      const Face& f = arr.faces()[face];
      return f.boundary_vertices.count(vid) > 0 || f.isolated_inside.count(vid) > 0;
    };
    bool ok = face_has(first_face, c.start_vertex) && face_has(c.final_face, c.end_vertex);
    int cur = first_face;
    for (const auto& [face, arc] : c.steps) {
      if (!ok) break;
      ok = face == cur;
      if (ok) cur = arr.other_side(face, arc);
    }
    ok = ok && cur == c.final_face;
    if (!ok) throw std::invalid_argument("realize: corridor invalid for this drawing");
  }

  const int u = c.start_vertex;
  const int v = c.end_vertex;
  std::string verify_why;
  auto verify = [&](const std::vector<Point>& poly) {
    const EdgeCheck chk = check_new_edge(d, u, v, poly);
    if (!chk.ok) {
      verify_why = chk.why;
      return false;
    }
    if (!crossings_match(chk, d, arr, c)) {
      verify_why = "crossing multiset mismatch";
      return false;
    }
    return true;
  };

  // Center fractions tried per attempt; every other choice is deterministic.
  const Rational fracs[] = {Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(1, 5),
                            Rational(4, 5), Rational(2, 7), Rational(5, 7), Rational(1, 11)};
  std::string last_reason = "exhausted attempts";

  Rational scale(1, 2);
  for (const Rational& frac : fracs) {
    // Crossing stubs, one per corridor step.
    std::map<int, int> arc_total, arc_seen;
    for (const auto& [f, a] : c.steps) arc_total[a] += 1;
    std::vector<CrossingStub> stubs;
    bool stub_fail = false;
    for (const auto& [face, arc] : c.steps) {
      const int occ = arc_seen[arc]++;
      auto st = crossing_stub(arr, face, arc, occ, arc_total[arc], scale, policy);
      if (!st) {
        stub_fail = true;
        last_reason += "; no crossing stub at arc " + std::to_string(arc);
        break;
      }
      stubs.push_back(*st);
    }
    if (stub_fail) continue;

    const int first_face = c.steps.empty() ? c.final_face : c.steps.front().first;
    const std::optional<Point> g0 = vertex_stub(arr, first_face, u, scale, policy);
    const std::optional<Point> g1 = vertex_stub(arr, c.final_face, v, scale, policy);
    if (!g0 || !g1) {
      last_reason += "; no vertex stub";
      scale *= policy.shrink;
      continue;
    }

    // Route inside each corridor face. All stub segments plus everything
    // routed so far are obstacles, so pieces sharing a face stay disjoint.
    // Pieces can only interfere when a corridor revisits a face; trying the
    // piece orders exhaustively resolves mutual blocking there (corridors
    // have at most k+1 pieces).
    struct Piece {
      int face;
      Point from;
      Point to;
    };
    std::vector<Piece> pieces;
    {
      Point cursor = *g0;
      for (size_t i = 0; i <= c.steps.size(); ++i) {
        const int face = (i < c.steps.size()) ? c.steps[i].first : c.final_face;
        const Point target = (i < c.steps.size()) ? stubs[i].before : *g1;
        pieces.push_back({face, cursor, target});
        if (i < c.steps.size()) cursor = stubs[i].after;
      }
    }
    // Crossing stubs are split at the arc so that no obstacle crosses a
    // face-boundary segment anywhere except at a decomposition wall; the
    // trapezoid ordering relies on spanning segments being crossing-free.
    const std::vector<Segment> base_obstacles = [&] {
      std::vector<Segment> obs;
      obs.push_back({d.vertex(u).location, *g0});
      obs.push_back({*g1, d.vertex(v).location});
      for (const auto& st : stubs) {
        obs.push_back({st.before, st.at});
        obs.push_back({st.at, st.after});
      }
      return obs;
    }();

    std::vector<std::vector<Point>> routed(pieces.size());
    bool route_ok = false;
    std::vector<size_t> order(pieces.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    do {
      std::vector<Segment> obstacles = base_obstacles;
      bool fail = false;
      for (size_t idx : order) {
        const Piece& piece = pieces[idx];
        FaceRouter router(arr, piece.face, {piece.from, piece.to}, obstacles, frac);
        const auto way = router.route(piece.from, piece.to);
        if (!way) {
          fail = true;
          last_reason += "; no path inside face " + std::to_string(piece.face);
          break;
        }
        for (size_t w = 0; w + 1 < way->size(); ++w)
          if (!((*way)[w] == (*way)[w + 1])) obstacles.push_back({(*way)[w], (*way)[w + 1]});
        routed[idx] = *way;
      }
      if (!fail) {
        route_ok = true;
        break;
      }
    } while (std::next_permutation(order.begin(), order.end()));
    if (!route_ok) {
      scale *= policy.shrink;
      continue;
    }
    std::vector<Point> poly{d.vertex(u).location};
    for (const auto& way : routed) poly.insert(poly.end(), way.begin(), way.end());
    poly.push_back(d.vertex(v).location);
    poly = dedupe(std::move(poly));

    if (!verify(poly)) {
      last_reason += "; verification failed: " + verify_why;
      scale *= policy.shrink;
      continue;
    }

    if (policy.simplify) {
      const std::vector<Point> checked = poly;
      const Point u_loc = d.vertex(u).location;
      const Point v_loc = d.vertex(v).location;
      poly = shortcut_pass(d, u_loc, v_loc, std::move(poly));
      // Snap pass: pull interior waypoints to nearby low-complexity
      // rationals; only the two adjacent segments need rechecking.
      for (size_t i = 1; i + 1 < poly.size(); ++i) {
        for (Rational r(1, 2); r >= Rational(1, 128); r *= Rational(1, 8)) {
          const Point cand{simplest_between(poly[i].x - r, poly[i].x + r),
                           simplest_between(poly[i].y - r, poly[i].y + r)};
          if (cand == poly[i]) break;
          std::vector<Point> moved = poly;
          moved[i] = cand;
          if (moved[i] == moved[i - 1] || moved[i] == moved[i + 1]) continue;
          if (snap_ok(d, u_loc, v_loc, poly, moved, i)) {
            poly = std::move(moved);
            break;
          }
        }
      }
      // The local checks cover everything except exotic coincidences; fall
      // back to the already verified polyline if the full check disagrees.
      if (!verify(poly)) poly = checked;
    }

    assert(verify(poly));
    return poly;
  }
  throw RealizationFailed(c, last_reason);
}

std::string GreedyResult::trace_str() const {
  std::ostringstream os;
  os << "seed " << seed << "\n";
  for (const auto& rec : trace)
    os << "(" << rec.u << "," << rec.v << ") " << rec.corridor.str() << " -> edge "
       << rec.new_edge_id << "\n";
  return os.str();
}

GreedyResult greedy_saturate(const Drawing& d0, int k, int l, const RoutingPolicy& policy,
                             std::uint64_t seed) {
  GreedyResult res;
  res.seed = seed;
  res.drawing = d0;
  Arrangement arr = Arrangement::build(d0);
  if (!check_k_plane(arr, k).holds)
    throw std::invalid_argument("greedy_saturate: input not k-plane");
  if (!check_l_simple(arr, l).holds)
    throw std::invalid_argument("greedy_saturate: input not l-simple");

  const int n = static_cast<int>(d0.vertices.size());
  const int max_insertions = n * (n - 1) / 2;
  for (int round = 0; round <= max_insertions; ++round) {
    const auto next = first_addable(res.drawing, arr, k, l);
    if (!next) return res;
    const std::vector<Point> poly = realize(res.drawing, arr, next->corridor, policy);
    res.drawing = add_edge(res.drawing, next->u, next->v, poly);
    arr = Arrangement::build(res.drawing);
    if (!check_k_plane(arr, k).holds || !check_l_simple(arr, l).holds)
      throw std::logic_error("greedy_saturate: inserted edge broke the invariants");
    res.trace.push_back({next->u, next->v, next->corridor, res.drawing.max_edge_id()});
  }
  throw std::logic_error("greedy_saturate: did not converge");
}

}  // namespace kplane
