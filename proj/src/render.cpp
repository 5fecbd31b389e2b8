#include "kplane/render.hpp"

#include <cmath>
#include <sstream>

namespace kplane {

namespace {

struct Box {
  double minx = 0, miny = 0, maxx = 0, maxy = 0;
  bool any = false;
  void grow(const Point& p) {
    const double x = p.x.to_double(), y = p.y.to_double();
    if (!any || x < minx) minx = x;
    if (!any || x > maxx) maxx = x;
    if (!any || y < miny) miny = y;
    if (!any || y > maxy) maxy = y;
    any = true;
  }
};

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

std::string render_svg(const Arrangement& arr) {
  Box box;
  for (const auto& n : arr.nodes()) box.grow(n.location);
  for (const auto& a : arr.arcs())
    for (const auto& p : a.pts) box.grow(p);
  if (!box.any) box.grow({0, 0});
  const double margin = std::max(2.0, 0.08 * std::max(box.maxx - box.minx, box.maxy - box.miny));
  const double w = box.maxx - box.minx + 2 * margin;
  const double h = box.maxy - box.miny + 2 * margin;
  // Flip y so the picture matches the usual orientation.
  auto X = [&](const Point& p) { return p.x.to_double() - box.minx + margin; };
  auto Y = [&](const Point& p) { return box.maxy - p.y.to_double() + margin; };
  const double dot = std::max(w, h) / 110.0;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << num(w) << " " << num(h)
      << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Special cells, shaded with the even-odd rule; the unbounded cell is the
  // complement of its walks within the picture frame.
  const SpecialReport sp = find_special(arr);
  for (int cell : sp.special_cells) {
    std::ostringstream path;
    if (arr.faces()[cell].is_unbounded)
      path << "M0 0H" << num(w) << "V" << num(h) << "H0Z ";
    for (const auto& walk : arr.faces()[cell].walks) {
      bool first = true;
      for (int dart : walk) {
        std::vector<Point> pts = arr.arcs()[dart_arc(dart)].pts;
        if (dart & 1) std::reverse(pts.begin(), pts.end());
        for (size_t i = first ? 0 : 1; i + 1 < pts.size(); ++i) {
          path << (first ? "M" : "L") << num(X(pts[i])) << " " << num(Y(pts[i])) << " ";
          first = false;
        }
      }
      path << "Z ";
    }
    svg << "<path d=\"" << path.str() << "\" fill=\"#ffe08a\" fill-opacity=\"0.7\" "
        << "fill-rule=\"evenodd\" stroke=\"none\" class=\"special-cell\"/>\n";
  }

  for (const auto& e : arr.drawing().edges) {
    svg << "<polyline points=\"";
    for (const auto& p : e.polyline) svg << num(X(p)) << "," << num(Y(p)) << " ";
    svg << "\" fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"" << num(dot / 2.5) << "\"/>\n";
  }

  for (const auto& n : arr.nodes()) {
    if (n.kind != NodeKind::CrossingPoint) continue;
    svg << "<circle cx=\"" << num(X(n.location)) << "\" cy=\"" << num(Y(n.location)) << "\" r=\""
        << num(dot / 1.6) << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\""
        << num(dot / 4) << "\" class=\"crossing\"/>\n";
  }

  for (const auto& v : arr.drawing().vertices) {
    const bool isolated = degree(arr.drawing(), v.id) == 0;
    svg << "<circle cx=\"" << num(X(v.location)) << "\" cy=\"" << num(Y(v.location)) << "\" r=\""
        << num(isolated ? dot * 1.2 : dot) << "\" fill=\""
        << (isolated ? "#27ae60" : "#1f4e79") << "\" class=\""
        << (isolated ? "vertex isolated" : "vertex") << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace kplane
