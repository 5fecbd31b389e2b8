#pragma once

#include <cstdint>
#include <stdexcept>

#include "kplane/saturation.hpp"

namespace kplane {

/// Deterministic knobs for corridor realization. Corridor preference itself
/// is fixed: fewest crossings, then lexicographic.
struct RoutingPolicy {
  Rational shrink{1, 2};  // factor applied to stub offsets and snap radii on retry
  int max_retries = 24;
  bool simplify = true;  // shortcut and snap passes on the realized polyline
};

struct RealizationFailed : std::runtime_error {
  RealizationFailed(const Corridor& c, const std::string& why)
      : std::runtime_error("realization failed (" + c.str() + "): " + why), corridor(c) {}
  Corridor corridor;
};

/// Polyline from the corridor's start vertex to its end vertex that crosses
/// exactly the corridor's parent-edge multiset, inside arc interiors, and
/// keeps the drawing in general position. Every candidate is re-verified
/// against the drawing before it is returned; failures raise
/// RealizationFailed, never a silently wrong polyline.
std::vector<Point> realize(const Drawing& d, const Arrangement& arr, const Corridor& c,
                           const RoutingPolicy& policy = {});

struct InsertionRecord {
  int u = 0;
  int v = 0;
  Corridor corridor;
  int new_edge_id = 0;
};

struct GreedyResult {
  Drawing drawing;
  std::vector<InsertionRecord> trace;
  std::uint64_t seed = 0;
  /// One line per insertion: pair, corridor, resulting edge id.
  std::string trace_str() const;
};

/// Repeatedly inserts the first addable pair (lexicographic order,
/// fewest-crossing corridor) until the drawing is saturated. The procedure is
/// deterministic; the seed only stamps the result for provenance. Requires a
/// valid k-plane l-simple input.
GreedyResult greedy_saturate(const Drawing& d, int k, int l, const RoutingPolicy& policy = {},
                             std::uint64_t seed = 0);

}  // namespace kplane
