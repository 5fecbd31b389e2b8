#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kplane/arrangement.hpp"

namespace kplane {

struct Flag {
  int leaf_vertex;
  int edge;
  friend bool operator==(const Flag& a, const Flag& b) {
    return a.leaf_vertex == b.leaf_vertex && a.edge == b.edge;
  }
};

struct KPlaneCheck {
  bool holds = true;
  std::optional<int> witness_edge;  // an edge with too many crossings
};

struct LSimpleCheck {
  bool holds = true;
  std::optional<std::pair<int, int>> witness_pair;  // edges with too many common points
};

struct PropertyCheck {
  bool holds = true;
  std::string witness;
};

struct SpecialReport {
  bool applicable = false;           // every edge has at most 2 crossings
  std::vector<int> middle_segments;  // arc ids, ascending
  std::vector<int> special_cells;    // face ids, ascending
  std::vector<int> special_edges;    // edge ids, ascending
};

struct StructureReport {
  KPlaneCheck k_plane;
  LSimpleCheck l_simple;
  int k = 0;
  int l = 0;
  std::vector<Flag> flags;
  std::vector<Flag> empty_flags;
  SpecialReport special;
  std::vector<std::vector<int>> essential_components;  // sorted vertex id lists
  std::vector<std::pair<int, int>> containment;        // (inner, outer) component indices
  std::string str() const;
};

/// True iff every edge has at most k crossings.
KPlaneCheck check_k_plane(const Arrangement& arr, int k);

/// True iff every edge pair has at most l common points (crossings plus a
/// possible shared endpoint).
LSimpleCheck check_l_simple(const Arrangement& arr, int l);

/// All (leaf, incident edge) pairs, and the sub-list whose edge is
/// crossing-free.
std::pair<std::vector<Flag>, std::vector<Flag>> find_flags(const Drawing& d,
                                                           const Arrangement& arr);

/// Middle segments (the piece of a twice-crossed edge between its crossings),
/// cells bounded only by middle segments and isolated vertices, and the edges
/// bounding such cells. Both characterizations of a special cell are computed
/// and compared. Not applicable when some edge has more than 2 crossings.
SpecialReport find_special(const Arrangement& arr);

/// No special edge bounds two special cells.
PropertyCheck check_unique_special_cell(const Arrangement& arr);

/// Every flag (u, uv) has d(v) >= 3 or u, v inside a 2-propeller
/// sub-drawing: adjacent edges crossing each other twice with no other
/// crossings on either.
PropertyCheck check_flag_support(const Drawing& d, const Arrangement& arr);

/// Connected components of the abstract graph with at least two vertices,
/// plus the partial order by containment: (i, j) when component i lies in a
/// bounded cell of component j drawn alone.
std::pair<std::vector<std::vector<int>>, std::vector<std::pair<int, int>>>
essential_components(const Drawing& d, const Arrangement& arr);

StructureReport analyze(const Drawing& d, const Arrangement& arr, int k, int l);

}  // namespace kplane
