#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kplane/drawing.hpp"
#include "kplane/rational.hpp"

namespace kplane {

struct ChargeGift {
  int recipient;  // vertex id
  Rational amount;
};

struct ChargeTrace {
  int edge;
  std::vector<ChargeGift> gives;
  Rational unassigned;  // weight kept by the edge (non-special remainders)
};

struct ChargeReport {
  bool preconditions_met = false;
  std::vector<std::string> precondition_failures;
  bool edgeless = false;  // no edges after the preprocessing: degenerate certificate
  std::map<int, Rational> charges;  // final charge per vertex
  std::vector<ChargeTrace> trace;
  Rational weight_per_edge;
  Rational unassigned_total;
  std::optional<Rational> min_charge;
  bool conservation_ok = false;  // sum of charges plus unassigned equals weight * e
  std::string str() const;
};

/// Deletes (leaf, crossing-free incident edge) pairs, lowest leaf id first,
/// until no empty flag remains. Each removal drops one vertex and one edge,
/// so e - n is preserved.
Drawing remove_empty_flags(const Drawing& d);

/// Weight-1 discharging for saturated simple 2-plane drawings without empty
/// flags and with exactly one isolated vertex per special cell: non-special
/// edges give 1/2 to each endpoint; special edges give 1/2 (degree 2) or 1/3
/// (degree >= 3) per endpoint and the remainder to the isolated vertex of
/// their cell. Every vertex is expected to end with charge at least 1.
ChargeReport unit_weight_charges(const Drawing& d);

/// Weight-3/2 discharging for saturated l-simple (l in {2,3}) 2-plane
/// drawings with isolated vertices placed: each endpoint receives 1/deg, and
/// special edges send their remainder to their cell's isolated vertex.
/// Published as a report without a universal lower-bound assertion.
ChargeReport three_halves_charges(const Drawing& d, int l);

}  // namespace kplane
