#pragma once

#include <optional>
#include <ostream>

#include "kplane/rational.hpp"

namespace kplane {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend bool operator<(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
  friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }
  friend std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << "(" << p.x << "," << p.y << ")";
  }
};

/// Segment with distinct endpoints.
struct Segment {
  Point a;
  Point b;
};

/// Sign of the signed area of triangle pqr: +1 left turn, -1 right turn,
/// 0 collinear. Exact.
int orient(const Point& p, const Point& q, const Point& r);

/// Cross product of (b-a) and (c-a) as an exact rational.
Rational cross(const Point& a, const Point& b, const Point& c);

/// True iff p lies on the closed segment s.
bool on_segment(const Point& p, const Segment& s);

enum class IntersectionKind {
  Disjoint,
  SharedEndpoint,   // an endpoint of one coincides with an endpoint of the other
  Touch,            // an endpoint of one lies in the interior of the other
  ProperCrossing,   // interiors cross transversally
  Overlap,          // collinear with a common sub-segment of positive length
};

struct Intersection {
  IntersectionKind kind = IntersectionKind::Disjoint;
  std::optional<Point> point;  // set for SharedEndpoint, Touch, ProperCrossing
};

/// Classifies how two segments meet. Symmetric in its arguments; the returned
/// point is exact.
Intersection intersect_segments(const Segment& s, const Segment& t);

/// Intersection point of the supporting lines of s and t; requires the lines
/// to be non-parallel.
Point line_intersection(const Segment& s, const Segment& t);

const char* to_string(IntersectionKind k);

}  // namespace kplane
