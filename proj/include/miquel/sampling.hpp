#pragma once

/// \file
/// \brief Seeded random configurations for property checks.

#include <cstdint>
#include <random>
#include <string_view>

#include "miquel/triangle.hpp"

namespace miquel {

/// Deterministic stream for one trial, keyed by (seed, stream name, index).
class Rng {
 public:
  Rng(std::uint64_t seed, std::string_view stream, std::uint64_t index);

  /// Uniform in [lo, hi); platform independent.
  double uniform(double lo, double hi);
  bool coin() { return (engine_() >> 63) != 0; }
  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

enum class AngleClass {
  any,
  /// Every angle below 90 degrees.
  acute,
  /// Angle at A above 90 degrees.
  obtuse_at_a,
  /// Angle at A below 90 degrees, others unrestricted.
  acute_at_a,
};

struct TriangleShape {
  double min_angle_deg{10.0};
  /// Minimum pairwise difference between the three angles.
  double min_gap_deg{0.0};
  /// Minimum distance of every angle from 90 degrees.
  double right_margin_deg{0.0};
  AngleClass angle_class{AngleClass::any};
};

/// Random placement (rotation, scale in [0.5, 5], offset, mirror) of a
/// triangle with random angles satisfying `shape`.
Triangle random_triangle(Rng& rng, const TriangleShape& shape = {});

/// Isosceles at A with apex angle in [min_apex, max_apex] degrees.
Triangle random_isosceles(Rng& rng, double min_apex_deg, double max_apex_deg);

/// Uniform point in the disk of the circumcircle scaled by `fraction`.
Point random_in_circumdisk(Rng& rng, const Triangle& t, double fraction);
/// Uniform point inside the triangle.
Point random_in_triangle(Rng& rng, const Triangle& t);
/// Point at distance in [lo, hi] * R from the circumcenter.
Point random_in_annulus(Rng& rng, const Triangle& t, double lo, double hi);

/// Shortest distance from p to a side line, relative to the circumradius.
double side_clearance(const Triangle& t, const Point& p);

}  // namespace miquel
