#include "kplane/constructions.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <stdexcept>

#include "kplane/structure.hpp"

namespace kplane {

namespace {

Point pt(int x, int y) { return {Rational(x), Rational(y)}; }

[[noreturn]] void defect(const std::string& what) {
  throw std::logic_error("construction failed post-check: " + what);
}

// Complex product, treating points as plane rotations.
Point rotate(const Point& a, const Point& b) {
  return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x};
}

Point snap_direction(const Point& p) {
  const Rational tol(1, 512);
  return {simplest_between(p.x - tol, p.x + tol), simplest_between(p.y - tol, p.y + tol)};
}

void check_propeller(const Drawing& d, int m) {
  const Arrangement arr = Arrangement::build(d);
  for (const auto& e : d.edges)
    if (arr.crossing_count(e.id) != 2)
      defect("propeller edge " + std::to_string(e.id) + " has " +
             std::to_string(arr.crossing_count(e.id)) + " crossings");
  if (m == 2) {
    if (arr.crossings_between(0, 1) != 2) defect("2-propeller edges must cross twice");
    const auto fu = arr.faces_incident_to_vertex(1);
    const auto fw = arr.faces_incident_to_vertex(2);
    std::vector<int> common;
    std::set_intersection(fu.begin(), fu.end(), fw.begin(), fw.end(),
                          std::back_inserter(common));
    if (!common.empty()) defect("2-propeller leaves share a cell");
  } else {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        const bool neighbors = (j == i + 1) || (i == 0 && j == m - 1);
        if (arr.crossings_between(i, j) != (neighbors ? 1 : 0))
          defect("propeller crossing pattern at edges " + std::to_string(i) + "," +
                 std::to_string(j));
      }
  }
  const SpecialReport sp = find_special(arr);
  if (!sp.applicable || sp.special_cells != std::vector<int>{arr.unbounded_face()})
    defect("propeller special cell must be exactly the unbounded cell");
}

Drawing propeller2() {
  Drawing d;
  d.vertices.push_back({0, pt(0, 0)});    // hub of the path
  d.vertices.push_back({1, pt(4, -1)});   // leaf of edge 0
  d.vertices.push_back({2, pt(-4, 1)});   // leaf of edge 1
  d.edges.push_back({0, 0, 1,
                     {pt(0, 0), pt(-6, -2), pt(-10, 2), pt(0, 8), pt(10, 2), pt(6, -2),
                      pt(4, -1)}});
  d.edges.push_back({1, 0, 2,
                     {pt(0, 0), pt(6, 2), pt(10, -2), pt(0, -8), pt(-10, -2), pt(-6, 2),
                      pt(-4, 1)}});
  return d;
}

// Pinwheel drawing for m >= 3: blade i runs out along direction 2i, hooks
// across the sector, and dives through spoke i+1, which gives every pair of
// cyclically adjacent blades exactly one crossing.
Drawing propeller_pinwheel(int m) {
  const long p = 13;
  const long q = 5L * (2 * m - 1);
  const Rational denom(p * p + q * q);
  const Point unit{Rational(q * q - p * p) / denom, Rational(2 * p * q) / denom};

  std::vector<Point> dirs;
  Point cur{1, 0};
  for (int j = 0; j < 2 * m; ++j) {
    dirs.push_back(snap_direction(cur));
    cur = rotate(cur, unit);
  }
  for (int j = 0; j < 2 * m; ++j) {
    const Point& a = dirs[j];
    const Point& b = dirs[(j + 1) % (2 * m)];
    if ((a.x * b.y - a.y * b.x).sign() <= 0) defect("propeller directions not in ccw order");
  }

  Drawing d;
  d.vertices.push_back({0, pt(0, 0)});
  for (int i = 0; i < m; ++i) {
    const Point spoke_end = dirs[2 * i];
    const Point hook = Rational(2) * dirs[2 * i + 1];
    const Point crossing = Rational(7, 10) * dirs[(2 * i + 2) % (2 * m)];
    const Point tip = crossing + Rational(1, 64) * (crossing - hook);
    d.vertices.push_back({i + 1, tip});
    d.edges.push_back({i, 0, i + 1, {pt(0, 0), spoke_end, hook, tip}});
  }
  return d;
}

}  // namespace

Drawing propeller(int m) {
  if (m < 2) throw std::invalid_argument("propeller requires m >= 2");
  Drawing d = m == 2 ? propeller2() : propeller_pinwheel(m);
  if (const auto rep = validate(d); !rep.ok()) defect("propeller invalid:\n" + rep.str());
  check_propeller(d, m);
  return d;
}

Drawing complete_drawing(int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("complete_drawing requires 1 <= n <= 3");
  Drawing d;
  const Point corners[3] = {pt(0, 0), pt(8, 0), pt(0, 8)};
  for (int i = 0; i < n; ++i) d.vertices.push_back({i, corners[i]});
  int id = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      d.edges.push_back({id++, i, j, {corners[i], corners[j]}});
  return d;
}

Drawing disjoint_union(const std::vector<Drawing>& parts) {
  Drawing out;
  Rational next_x(0);
  const Rational gap(8);
  int vbase = 0, ebase = 0;
  for (const auto& part : parts) {
    Rational minx(0), maxx(0);
    bool any = false;
    for (const auto& v : part.vertices) {
      if (!any || v.location.x < minx) minx = v.location.x;
      if (!any || v.location.x > maxx) maxx = v.location.x;
      any = true;
    }
    for (const auto& e : part.edges)
      for (const auto& p : e.polyline) {
        if (!any || p.x < minx) minx = p.x;
        if (!any || p.x > maxx) maxx = p.x;
        any = true;
      }
    const Rational shift = next_x - minx;
    if (any) next_x = next_x + (maxx - minx) + gap;

    std::vector<Vertex> vs = part.vertices;
    std::sort(vs.begin(), vs.end(), [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    std::map<int, int> vmap;
    for (const auto& v : vs) {
      vmap[v.id] = vbase;
      out.vertices.push_back({vbase++, {v.location.x + shift, v.location.y}});
    }
    std::vector<Edge> es = part.edges;
    std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (const auto& e : es) {
      Edge ne;
      ne.id = ebase++;
      ne.tail = vmap.at(e.tail);
      ne.head = vmap.at(e.head);
      for (const auto& p : e.polyline) ne.polyline.push_back({p.x + shift, p.y});
      out.edges.push_back(std::move(ne));
    }
  }

  if (const auto rep = validate(out); !rep.ok()) defect("disjoint union invalid:\n" + rep.str());
  if (!out.vertices.empty()) {
    const Arrangement arr = Arrangement::build(out);
    for (int c = 0; c < arr.component_count(); ++c)
      if (arr.component_parent_face(c) != arr.unbounded_face())
        defect("disjoint union part not in the unbounded cell");
  }
  return out;
}

int two_simple_edges(int n) {
  if (n == 3) return 3;
  return 3 * n / 4;
}

int three_simple_edges(int n) {
  if (n == 3) return 3;
  return 2 * n / 3;
}

Drawing family_2simple(int n) {
  if (n < 1) throw std::invalid_argument("family_2simple requires n >= 1");
  Drawing out;
  if (n <= 3) {
    out = complete_drawing(n);
  } else {
    std::vector<Drawing> parts;
    const int r = n % 4;
    int full = n / 4;
    if (r == 3) full = (n - 7) / 4;
    for (int i = 0; i < full; ++i) parts.push_back(propeller(3));
    if (r == 1) parts.push_back(complete_drawing(1));
    if (r == 2) parts.push_back(complete_drawing(2));
    if (r == 3) {
      parts.push_back(propeller(4));
      parts.push_back(complete_drawing(2));
    }
    out = disjoint_union(parts);
  }
  if (static_cast<int>(out.vertices.size()) != n ||
      static_cast<int>(out.edges.size()) != two_simple_edges(n))
    defect("family_2simple(" + std::to_string(n) + ") has wrong size");
  return out;
}

Drawing family_3simple(int n) {
  if (n < 1) throw std::invalid_argument("family_3simple requires n >= 1");
  Drawing out;
  if (n <= 3) {
    out = complete_drawing(n);
  } else {
    std::vector<Drawing> parts;
    const int r = n % 3;
    for (int i = 0; i < (n - r) / 3; ++i) parts.push_back(propeller(2));
    if (r == 1) parts.push_back(complete_drawing(1));
    if (r == 2) parts.push_back(complete_drawing(2));
    out = disjoint_union(parts);
  }
  if (static_cast<int>(out.vertices.size()) != n ||
      static_cast<int>(out.edges.size()) != three_simple_edges(n))
    defect("family_3simple(" + std::to_string(n) + ") has wrong size");
  return out;
}

}  // namespace kplane
