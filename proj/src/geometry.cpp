#include "kplane/geometry.hpp"

#include <algorithm>
#include <cassert>

namespace kplane {

Rational cross(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

int orient(const Point& p, const Point& q, const Point& r) { return cross(p, q, r).sign(); }

bool on_segment(const Point& p, const Segment& s) {
  if (orient(s.a, s.b, p) != 0) return false;
  return min(s.a.x, s.b.x) <= p.x && p.x <= max(s.a.x, s.b.x) &&
         min(s.a.y, s.b.y) <= p.y && p.y <= max(s.a.y, s.b.y);
}

Point line_intersection(const Segment& s, const Segment& t) {
  const Point r = s.b - s.a;
  const Point q = t.b - t.a;
  const Rational denom = r.x * q.y - r.y * q.x;
  assert(!denom.is_zero());
  const Point d = t.a - s.a;
  const Rational u = (d.x * q.y - d.y * q.x) / denom;
  return {s.a.x + u * r.x, s.a.y + u * r.y};
}

namespace {

// Projection of p onto the direction of s, used to order collinear points.
Rational axis_value(const Point& p, const Segment& s) {
  const Point d = s.b - s.a;
  return (p.x - s.a.x) * d.x + (p.y - s.a.y) * d.y;
}

bool is_endpoint_of(const Point& p, const Segment& s) { return p == s.a || p == s.b; }

}  // namespace

Intersection intersect_segments(const Segment& s, const Segment& t) {
  const int o1 = orient(s.a, s.b, t.a);
  const int o2 = orient(s.a, s.b, t.b);
  const int o3 = orient(t.a, t.b, s.a);
  const int o4 = orient(t.a, t.b, s.b);

  if (o1 == 0 && o2 == 0) {
    // Collinear. Order all four points along s's direction.
    const Rational sa = axis_value(s.a, s);
    const Rational sb = axis_value(s.b, s);
    const Rational ta = axis_value(t.a, s);
    const Rational tb = axis_value(t.b, s);
    const Rational lo1 = min(sa, sb), hi1 = max(sa, sb);
    const Rational lo2 = min(ta, tb), hi2 = max(ta, tb);
    const Rational lo = max(lo1, lo2), hi = min(hi1, hi2);
    if (lo > hi) return {IntersectionKind::Disjoint, std::nullopt};
    if (lo < hi) return {IntersectionKind::Overlap, std::nullopt};
    // Single common point; it must be an endpoint of both.
    const Point p = (ta == lo) ? t.a : t.b;
    return {IntersectionKind::SharedEndpoint, p};
  }

  // Endpoint coincidences.
  if (is_endpoint_of(t.a, s)) return {IntersectionKind::SharedEndpoint, t.a};
  if (is_endpoint_of(t.b, s)) return {IntersectionKind::SharedEndpoint, t.b};

  // An endpoint of one strictly inside the other.
  if (o1 == 0 && on_segment(t.a, s)) return {IntersectionKind::Touch, t.a};
  if (o2 == 0 && on_segment(t.b, s)) return {IntersectionKind::Touch, t.b};
  if (o3 == 0 && on_segment(s.a, t)) return {IntersectionKind::Touch, s.a};
  if (o4 == 0 && on_segment(s.b, t)) return {IntersectionKind::Touch, s.b};

  if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0)
    return {IntersectionKind::ProperCrossing, line_intersection(s, t)};

  return {IntersectionKind::Disjoint, std::nullopt};
}

const char* to_string(IntersectionKind k) {
  switch (k) {
    case IntersectionKind::Disjoint: return "disjoint";
    case IntersectionKind::SharedEndpoint: return "shared-endpoint";
    case IntersectionKind::Touch: return "touch";
    case IntersectionKind::ProperCrossing: return "proper-crossing";
    case IntersectionKind::Overlap: return "overlap";
  }
  return "?";
}

}  // namespace kplane
