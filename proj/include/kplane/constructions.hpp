#pragma once

#include <vector>

#include "kplane/drawing.hpp"

namespace kplane {

/// Star with m edges (a path of two edges when m = 2) drawn so that every
/// edge carries exactly two crossings and the unbounded cell is bounded only
/// by middle segments. Post-conditions are re-checked on the built drawing;
/// a failure is a construction defect, not an input error. Requires m >= 2.
Drawing propeller(int m);

/// Straight-line complete graph, 1 <= n <= 3.
Drawing complete_drawing(int n);

/// Parts translated to pairwise disjoint x-ranges and renumbered; every part
/// ends up in the unbounded cell of the others (verified on the result).
Drawing disjoint_union(const std::vector<Drawing>& parts);

/// Saturated 2-plane 2-simple drawing on n vertices with two_simple_edges(n)
/// edges: disjoint 3-propellers padded with an isolated vertex, a K2, or a
/// 4-propeller depending on n mod 4. Requires n >= 1.
Drawing family_2simple(int n);

/// Saturated 2-plane 3-simple drawing on n vertices with three_simple_edges(n)
/// edges: disjoint 2-propellers plus an isolated vertex or a K2. Requires n >= 1.
Drawing family_3simple(int n);

/// Edge counts the families realize: 3 when n = 3, otherwise floor(3n/4)
/// resp. floor(2n/3).
int two_simple_edges(int n);
int three_simple_edges(int n);

}  // namespace kplane
