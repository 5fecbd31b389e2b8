#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "kplane/drawing.hpp"

namespace kplane {

enum class NodeKind { GraphVertex, CrossingPoint };

struct Node {
  int id = 0;
  NodeKind kind = NodeKind::GraphVertex;
  int vertex_id = -1;               // GraphVertex
  int edge_a = -1, edge_b = -1;     // CrossingPoint, edge_a < edge_b
  Point location;
};

/// A maximal crossing-free piece of an edge. pts runs along the parent edge
/// orientation; an edge with c crossings has arcs indexed 0..c.
struct Arc {
  int id = 0;
  int parent_edge = 0;
  int index = 0;
  int node_a = 0;  // start node (along the edge)
  int node_b = 0;  // end node
  std::vector<Point> pts;
};

/// Directed arcs: dart 2*a traverses arc a forward, 2*a+1 backward.
inline int dart_forward(int arc) { return 2 * arc; }
inline int dart_twin(int dart) { return dart ^ 1; }
inline int dart_arc(int dart) { return dart / 2; }

struct Face {
  int id = 0;
  bool is_unbounded = false;
  std::vector<std::vector<int>> walks;  // cyclic dart sequences; a bridge arc appears twice
  std::set<int> boundary_vertices;      // graph vertices on the boundary walks
  std::set<int> isolated_inside;        // isolated vertices contained in the face
  std::set<int> incident_vertices() const;
};

/// The planarization of a drawing: crossings become nodes, edges split into
/// arcs, faces carry boundary walks. Immutable after build; queries are pure.
class Arrangement {
 public:
  static Arrangement build(const Drawing& d);  // throws InvalidDrawing

  const Drawing& drawing() const { return drawing_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Face>& faces() const { return faces_; }

  int crossing_count(int edge_id) const;
  std::map<int, int> crossings_per_edge() const;
  /// Crossings plus a possible shared endpoint; e != f.
  int common_points(int e, int f) const;
  int crossings_between(int e, int f) const;

  int unbounded_face() const { return unbounded_face_; }
  int face_of_dart(int dart) const;
  /// Face on the other side of arc when seen from face f (f itself for a bridge).
  int other_side(int face, int arc) const;
  bool is_bridge(int arc) const;
  std::vector<int> arcs_on_face(int face) const;        // sorted, unique
  std::vector<int> faces_incident_to_vertex(int vertex_id) const;  // sorted

  int node_of_vertex(int vertex_id) const;
  const std::vector<int>& arcs_of_edge(int edge_id) const;

  /// Face containing p. Requires p strictly off every node and arc.
  int locate(const Point& p) const;  // throws std::domain_error when on the skeleton
  bool on_skeleton(const Point& p) const;

  /// A point strictly inside face f, found by horizontal-line stabbing and
  /// verified by locate.
  Point interior_point(int face) const;

  /// Connected components of the 1-skeleton; isolated vertices count.
  int component_count() const { return component_parent_face_.size(); }
  int component_of_node(int node) const { return node_component_[node]; }
  /// Face of some other component directly containing the component
  /// (the unbounded face for top-level components).
  int component_parent_face(int comp) const { return component_parent_face_[comp]; }

  /// Text listing of nodes, arcs, faces and counts.
  std::string dump() const;

 private:
  Drawing drawing_;
  std::vector<Node> nodes_;
  std::vector<Arc> arcs_;
  std::vector<Face> faces_;
  std::map<int, std::vector<int>> edge_arcs_;
  std::map<int, int> edge_crossings_;
  std::map<std::pair<int, int>, int> pair_crossings_;
  std::vector<int> node_component_;
  std::vector<int> component_parent_face_;
  std::vector<int> dart_face_;
  int unbounded_face_ = 0;

  // Bounded-orbit regions used by locate: walk dart lists plus twice the
  // signed area, sorted by discovery.
  struct Region {
    std::vector<int> walk;
    Rational area2;
    int face = -1;
  };
  std::vector<Region> regions_;
  bool point_in_region(const Point& p, const Region& r) const;
};

}  // namespace kplane
