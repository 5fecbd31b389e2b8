#include "kplane/drawing_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace kplane {

namespace {

using nlohmann::json;

Rational parse_rational_field(const json& j, const std::string& locus) {
  if (!j.is_string()) throw ParseError(locus + ": expected rational string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(locus + ": " + e.what());
  }
}

int parse_int_field(const json& j, const std::string& locus) {
  if (!j.is_number_integer()) throw ParseError(locus + ": expected integer");
  return j.get<int>();
}

}  // namespace

Drawing parse_drawing(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("syntax error: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("top level: expected object");
  if (!root.contains("vertices") || !root["vertices"].is_array())
    throw ParseError("vertices: expected array");
  if (!root.contains("edges") || !root["edges"].is_array())
    throw ParseError("edges: expected array");

  Drawing d;
  std::set<int> vids, eids;
  size_t i = 0;
  for (const auto& jv : root["vertices"]) {
    const std::string locus = "vertices[" + std::to_string(i++) + "]";
    if (!jv.is_object()) throw ParseError(locus + ": expected object");
    Vertex v;
    v.id = parse_int_field(jv.value("id", json()), locus + ".id");
    v.location.x = parse_rational_field(jv.value("x", json()), locus + ".x");
    v.location.y = parse_rational_field(jv.value("y", json()), locus + ".y");
    if (!vids.insert(v.id).second)
      throw ParseError(locus + ": duplicate vertex id " + std::to_string(v.id));
    d.vertices.push_back(std::move(v));
  }
  i = 0;
  for (const auto& je : root["edges"]) {
    const std::string locus = "edges[" + std::to_string(i++) + "]";
    if (!je.is_object()) throw ParseError(locus + ": expected object");
    Edge e;
    e.id = parse_int_field(je.value("id", json()), locus + ".id");
    e.tail = parse_int_field(je.value("tail", json()), locus + ".tail");
    e.head = parse_int_field(je.value("head", json()), locus + ".head");
    if (!eids.insert(e.id).second)
      throw ParseError(locus + ": duplicate edge id " + std::to_string(e.id));
    const json& jp = je.value("points", json());
    if (!jp.is_array() || jp.size() < 2)
      throw ParseError(locus + ".points: expected array of at least 2 points");
    size_t k = 0;
    for (const auto& jq : jp) {
      const std::string plocus = locus + ".points[" + std::to_string(k++) + "]";
      if (!jq.is_array() || jq.size() != 2)
        throw ParseError(plocus + ": expected [x, y]");
      Point p;
      p.x = parse_rational_field(jq[0], plocus + "[0]");
      p.y = parse_rational_field(jq[1], plocus + "[1]");
      e.polyline.push_back(std::move(p));
    }
    d.edges.push_back(std::move(e));
  }
  return d;
}

Drawing load_drawing(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_drawing(ss.str());
}

std::string serialize_drawing(const Drawing& d) {
  Drawing sorted = d;
  std::sort(sorted.vertices.begin(), sorted.vertices.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  std::sort(sorted.edges.begin(), sorted.edges.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  json root;
  root["vertices"] = json::array();
  for (const auto& v : sorted.vertices) {
    root["vertices"].push_back(
        {{"id", v.id}, {"x", v.location.x.str()}, {"y", v.location.y.str()}});
  }
  root["edges"] = json::array();
  for (const auto& e : sorted.edges) {
    json pts = json::array();
    for (const auto& p : e.polyline) pts.push_back({p.x.str(), p.y.str()});
    root["edges"].push_back(
        {{"id", e.id}, {"tail", e.tail}, {"head", e.head}, {"points", std::move(pts)}});
  }
  return root.dump(2) + "\n";
}

void save_drawing(const Drawing& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_drawing(d);
}

bool drawings_equal(const Drawing& a, const Drawing& b) {
  return serialize_drawing(a) == serialize_drawing(b);
}

}  // namespace kplane
