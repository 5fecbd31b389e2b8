#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kplane/geometry.hpp"

namespace kplane {

struct Vertex {
  int id = 0;
  Point location;
};

/// Edge drawn as a polyline. The first and last points coincide with the
/// tail/head vertex locations.
struct Edge {
  int id = 0;
  int tail = 0;
  int head = 0;
  std::vector<Point> polyline;

  bool joins(int u, int v) const {
    return (tail == u && head == v) || (tail == v && head == u);
  }
  bool incident_to(int v) const { return tail == v || head == v; }
};

/// An embedded topological graph: vertices at exact rational points, edges as
/// polylines. Immutable by convention; operations return new drawings.
struct Drawing {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  const Vertex* find_vertex(int id) const;
  const Edge* find_edge(int id) const;
  const Vertex& vertex(int id) const;  // throws on unknown id
  const Edge& edge(int id) const;      // throws on unknown id
  int max_vertex_id() const;
  int max_edge_id() const;
};

struct Violation {
  std::string rule;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string str() const;
};

/// Checks every structural and general-position invariant: unique ids,
/// distinct vertex locations, no loops or parallel edges, well-formed
/// polylines without self-intersection, no edge through a vertex, pairwise
/// meetings only at shared endpoints or proper crossings, and no three edges
/// through a common point. Violations are data, not faults.
ValidationReport validate(const Drawing& d);

/// Number of edges incident to vertex v. Throws on unknown id.
int degree(const Drawing& d, int v);

/// Copy of d plus one edge joining u and v along the given polyline; the new
/// edge id is one past the current maximum.
Drawing add_edge(const Drawing& d, int u, int v, std::vector<Point> polyline);

/// Copy of d plus one isolated vertex at p.
Drawing add_isolated_vertex(const Drawing& d, const Point& p);

/// Copy of d without vertex v and without all edges incident to it.
Drawing remove_vertex(const Drawing& d, int v);

/// Thrown when an operation requires a valid drawing but validation failed.
struct InvalidDrawing : std::runtime_error {
  explicit InvalidDrawing(const ValidationReport& r);
  ValidationReport report;
};

}  // namespace kplane
