#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "kplane/drawing.hpp"

namespace kplane {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reads a drawing from its JSON text form. Throws ParseError with a field
/// locus on malformed input. Does not validate geometry; callers decide what
/// to do with the validation report.
Drawing parse_drawing(const std::string& text);
Drawing load_drawing(const std::string& path);

/// Canonical serialization: vertices and edges sorted by id, rationals in
/// lowest terms. parse(serialize(d)) reproduces d exactly.
std::string serialize_drawing(const Drawing& d);
void save_drawing(const Drawing& d, const std::string& path);

bool drawings_equal(const Drawing& a, const Drawing& b);

}  // namespace kplane
