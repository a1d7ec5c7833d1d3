#include "visicone/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace visicone {

namespace {

using nlohmann::json;

std::vector<double> number_array(const json& node, const std::string& field,
                                 std::size_t expected_len) {
  if (!node.is_array()) {
    throw MalformedInput(field + ": expected an array of numbers");
  }
  std::vector<double> out;
  out.reserve(node.size());
  for (const auto& v : node) {
    if (!v.is_number()) {
      throw MalformedInput(field + ": expected an array of numbers");
    }
    out.push_back(v.get<double>());
  }
  if (out.size() != expected_len) {
    throw MalformedInput(field + ": expected " + std::to_string(expected_len) +
                         " coordinates, got " + std::to_string(out.size()));
  }
  return out;
}

Vector point_field(const json& parent, const std::string& field,
                   std::size_t dim) {
  if (!parent.contains(field)) {
    throw MalformedInput(field + ": missing");
  }
  try {
    return Vector(number_array(parent.at(field), field, dim));
  } catch (const InvalidArgument& e) {
    throw MalformedInput(field + ": " + e.what());
  }
}

std::vector<Vector> point_list(const json& node, const std::string& field,
                               std::size_t dim) {
  if (!node.is_array()) {
    throw MalformedInput(field + ": expected an array of points");
  }
  std::vector<Vector> out;
  out.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    const std::string item = field + "[" + std::to_string(i) + "]";
    try {
      out.push_back(Vector(number_array(node.at(i), item, dim)));
    } catch (const InvalidArgument& e) {
      throw MalformedInput(item + ": " + e.what());
    }
  }
  return out;
}

Body parse_body(const json& node, std::size_t dim) {
  if (!node.is_object() || !node.contains("type") ||
      !node.at("type").is_string()) {
    throw MalformedInput("body.type: missing or not a string");
  }
  const std::string type = node.at("type").get<std::string>();
  try {
    if (type == "segment") {
      if (!node.contains("vertices")) {
        throw MalformedInput("body.vertices: missing");
      }
      auto vs = point_list(node.at("vertices"), "body.vertices", dim);
      if (vs.size() != 2) {
        throw MalformedInput("body.vertices: a segment needs exactly 2 points");
      }
      return Segment(vs[0], vs[1]);
    }
    if (type == "simplex") {
      if (!node.contains("vertices")) {
        throw MalformedInput("body.vertices: missing");
      }
      return Simplex(point_list(node.at("vertices"), "body.vertices", dim));
    }
    if (type == "polytope") {
      if (!node.contains("vertices")) {
        throw MalformedInput("body.vertices: missing");
      }
      return Polytope(point_list(node.at("vertices"), "body.vertices", dim));
    }
    if (type == "flat") {
      Vector base = point_field(node, "base", dim);
      if (!node.contains("directions")) {
        throw MalformedInput("body.directions: missing");
      }
      return AffineFlat(base,
                        point_list(node.at("directions"), "body.directions",
                                   dim));
    }
    if (type == "disk_cone") {
      if (dim != 3) {
        throw MalformedInput("dim: disk_cone requires dim = 3");
      }
      return DiskCone{};
    }
  } catch (const InvalidArgument& e) {
    throw MalformedInput("body: " + std::string(e.what()));
  }
  throw MalformedInput("body.type: unknown type '" + type + "'");
}

Query parse_query(const json& node, std::size_t dim) {
  if (!node.is_object() || node.size() != 1) {
    throw MalformedInput("query: expected an object with exactly one tag");
  }
  if (node.contains("project")) {
    return ProjectQuery{point_field(node.at("project"), "point", dim)};
  }
  if (node.contains("visible")) {
    const json& q = node.at("visible");
    return VisibleQuery{point_field(q, "from", dim),
                        point_field(q, "candidate", dim)};
  }
  if (node.contains("raycast")) {
    const json& q = node.at("raycast");
    return RaycastQuery{point_field(q, "from", dim),
                        point_field(q, "toward", dim)};
  }
  if (node.contains("sample")) {
    const json& q = node.at("sample");
    SampleQuery out{point_field(q, "from", dim), 0, std::nullopt};
    if (!q.contains("count") || !q.at("count").is_number_unsigned()) {
      throw MalformedInput("query.sample.count: missing or not a nonnegative "
                           "integer");
    }
    out.count = q.at("count").get<std::size_t>();
    if (q.contains("seed")) {
      if (!q.at("seed").is_number_unsigned()) {
        throw MalformedInput("query.sample.seed: not a nonnegative integer");
      }
      out.seed = q.at("seed").get<std::uint64_t>();
    }
    return out;
  }
  if (node.contains("separate")) {
    const json& q = node.at("separate");
    return SeparateQuery{point_field(q, "x", dim), point_field(q, "y", dim)};
  }
  throw MalformedInput(
      "query: expected one of project/visible/raycast/sample/separate");
}

}  // namespace

Problem parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedInput(std::string("document: ") + e.what());
  }
  if (!doc.is_object()) {
    throw MalformedInput("document: expected a JSON object");
  }
  if (!doc.contains("dim") || !doc.at("dim").is_number_unsigned() ||
      doc.at("dim").get<std::size_t>() == 0) {
    throw MalformedInput("dim: missing or not a positive integer");
  }
  Problem p;
  p.dim = doc.at("dim").get<std::size_t>();
  if (!doc.contains("body")) throw MalformedInput("body: missing");
  p.body = parse_body(doc.at("body"), p.dim);
  if (!doc.contains("query")) throw MalformedInput("query: missing");
  p.query = parse_query(doc.at("query"), p.dim);
  return p;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw MalformedInput("input: cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace visicone
