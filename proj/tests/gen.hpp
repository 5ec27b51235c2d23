#pragma once

// Hand-rolled generators for property tests. Deliberately separate from the
// library's own samplers so the properties are not checked against the
// distribution they were tuned on.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "miquel/triangle.hpp"

namespace gen {

using miquel::Point;
using miquel::Triangle;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * std::generate_canonical<double, 53>(engine_);
  }
  bool coin() { return (engine_() & 1u) != 0; }

  Point point(double extent) { return {uniform(-extent, extent), uniform(-extent, extent)}; }

  Point in_disk(const Point& c, double r) {
    const double rho = r * std::sqrt(uniform(0.0, 1.0));
    const double phi = uniform(0.0, 2.0 * std::numbers::pi);
    return {c.x + rho * std::cos(phi), c.y + rho * std::sin(phi)};
  }

  // Three independent points, rejected until every angle exceeds min_deg.
  // The scale varies over two orders of magnitude.
  Triangle triangle(double min_deg = 10.0) {
    for (;;) {
      const double s = std::pow(10.0, uniform(-1.0, 1.0));
      const Point off = point(10.0);
      const Point a = off + point(s), b = off + point(s), c = off + point(s);
      if (min_angle_deg(a, b, c) > min_deg) return Triangle(a, b, c);
    }
  }

  // Scalene, all angles at least gap_deg apart and away from 90 degrees.
  Triangle generic_triangle(double gap_deg = 5.0) {
    for (;;) {
      const Triangle t = triangle(10.0);
      const double a = deg(t.angle(miquel::Vertex::A));
      const double b = deg(t.angle(miquel::Vertex::B));
      const double c = deg(t.angle(miquel::Vertex::C));
      if (std::abs(a - b) < gap_deg || std::abs(b - c) < gap_deg || std::abs(a - c) < gap_deg) continue;
      if (std::abs(a - 90) < gap_deg || std::abs(b - 90) < gap_deg || std::abs(c - 90) < gap_deg) continue;
      return t;
    }
  }

  // AB = AC, apex angle in degrees.
  Triangle isosceles(double apex_deg) {
    const double h = uniform(0.5, 3.0);
    const double half = apex_deg * std::numbers::pi / 360.0;
    const Point a = point(5.0);
    const double phi = uniform(0.0, 2.0 * std::numbers::pi);
    const Point d{std::cos(phi), std::sin(phi)};
    const Point b = a + miquel::rotate(d, half) * h;
    const Point c = a + miquel::rotate(d, -half) * h;
    return coin() ? Triangle(a, b, c) : Triangle(a, c, b);
  }

 private:
  static double deg(double r) { return r * 180.0 / std::numbers::pi; }
  static double min_angle_deg(const Point& a, const Point& b, const Point& c) {
    auto at = [](const Point& p, const Point& q, const Point& r) {
      return std::atan2(std::abs(miquel::cross(p - q, r - q)), miquel::dot(p - q, r - q));
    };
    return deg(std::min({at(b, a, c), at(a, b, c), at(a, c, b)}));
  }

  std::mt19937_64 engine_;
};

}  // namespace gen
