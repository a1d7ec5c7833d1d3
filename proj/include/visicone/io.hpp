#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "visicone/bodies.hpp"
#include "visicone/errors.hpp"

namespace visicone {

/// A problem file failed to parse or validate; the message names the
/// offending field.
struct MalformedInput : Error {
  using Error::Error;
};

struct ProjectQuery {
  Vector point;
};
struct VisibleQuery {
  Vector from;
  Vector candidate;
};
struct RaycastQuery {
  Vector from;
  Vector toward;
};
struct SampleQuery {
  Vector from;
  std::size_t count = 0;
  std::optional<std::uint64_t> seed;
};
struct SeparateQuery {
  Vector x;
  Vector y;
};

using Query = std::variant<ProjectQuery, VisibleQuery, RaycastQuery,
                           SampleQuery, SeparateQuery>;

/// One batch problem: ambient dimension, a body, and a single query.
struct Problem {
  std::size_t dim = 0;
  Body body = DiskCone{};
  Query query = ProjectQuery{};
};

/// Parse and validate a JSON problem document. Throws MalformedInput with
/// a field-naming message on any defect.
Problem parse_problem(const std::string& text);
Problem load_problem(const std::string& path);

/// Render a double with 17 significant digits (bit-faithful round trip).
std::string format_double(double v);

}  // namespace visicone
