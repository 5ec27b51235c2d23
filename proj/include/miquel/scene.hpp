#pragma once

/// \file
/// \brief JSON scene documents.
///
///     {"A": [x, y], "B": [x, y], "C": [x, y],
///      "P": [x, y], "triad": [u, v, w], "theta": t,
///      "options": {"angle_eps": e, "length_eps_rel": e}}
///
/// Only A, B and C are required. Unknown keys are rejected.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "miquel/triangle.hpp"

namespace miquel {

/// Malformed document: bad JSON, wrong types, missing or unknown keys.
class SceneError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SceneOptions {
  std::optional<double> angle_eps;
  std::optional<double> length_eps_rel;

  Tolerance tolerance() const;
  bool empty() const { return !angle_eps && !length_eps_rel; }
};

struct SceneSpec {
  std::array<Point, 3> vertices;
  std::optional<Point> p;
  std::optional<std::array<double, 3>> triad;
  /// Radians.
  std::optional<double> theta;
  SceneOptions options;

  Triangle triangle() const;
};

/// Throws SceneError for schema problems and GeometryError
/// (DegenerateTriangle) for collinear vertices.
SceneSpec parse_scene(const std::string& text);

/// Canonical form: sorted keys, shortest round-trip numbers.
std::string emit_scene(const SceneSpec& scene);

}  // namespace miquel
