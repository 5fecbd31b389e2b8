#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kplane/structure.hpp"

namespace kplane {

/// Combinatorial route for a prospective new edge: a face sequence connected
/// through crossed arcs, starting and ending at drawing vertices.
struct Corridor {
  int start_vertex = -1;
  int end_vertex = -1;
  std::vector<std::pair<int, int>> steps;  // (face before the crossing, crossed arc)
  int final_face = -1;

  int crossings() const { return static_cast<int>(steps.size()); }
  std::string str() const;
};

struct AddablePair {
  int u;
  int v;
  Corridor corridor;
};

struct SaturationReport {
  bool saturated = true;
  std::vector<AddablePair> addable;
  std::string str() const;
};

/// Remaining crossings edge e may absorb: k minus its crossing count.
/// Requires the drawing to be k-plane at e.
int residual_budget(const Arrangement& arr, int edge_id, int k);

/// A corridor for a new edge u-v that keeps the drawing k-plane and
/// l-simple, when one exists. The search enumerates crossing sequences of
/// length 0..k breadth-first and returns the lexicographically first hit, so
/// the answer is exact for the combinatorial routing model and deterministic.
/// Requires u != v and uv not already an edge.
std::optional<Corridor> addable(const Drawing& d, const Arrangement& arr, int u, int v, int k,
                                int l);

/// All corridor invariants checked against a specific drawing: incidences,
/// adjacency of consecutive faces, and the per-edge crossing budgets.
bool valid_corridor(const Drawing& d, const Arrangement& arr, const Corridor& c, int k, int l);

/// First addable pair in lexicographic vertex order, if any.
std::optional<AddablePair> first_addable(const Drawing& d, const Arrangement& arr, int k, int l);

/// The saturation predicate: collects every addable non-adjacent vertex pair
/// with a witness corridor. Requires d valid, k-plane and l-simple.
SaturationReport is_saturated(const Drawing& d, int k, int l);
SaturationReport is_saturated(const Drawing& d, const Arrangement& arr, int k, int l);

/// One new isolated vertex in every special cell that lacks one, placed at a
/// verified interior point. Requires a 2-plane drawing.
Drawing place_isolated_vertices(const Drawing& d);

}  // namespace kplane
