#pragma once

#include <string>

#include "kplane/structure.hpp"

namespace kplane {

/// SVG picture of the drawing: edges as polylines, vertices as dots (isolated
/// ones highlighted), crossings marked, special cells shaded. Coordinates are
/// floating point here; every decision was made upstream in exact arithmetic.
std::string render_svg(const Arrangement& arr);

}  // namespace kplane
