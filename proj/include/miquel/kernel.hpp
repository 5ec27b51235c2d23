#pragma once

/// \file
/// \brief Floating-point plane geometry primitives.
///
/// Points, directed angles (modulo a half turn), circles, lines and the
/// handful of constructions everything else is composed from. All functions
/// are pure. Length tolerances are relative to a scale that each operation
/// derives from its own arguments unless one is passed explicitly.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace miquel {

/// Cartesian point; doubles as a free vector.
struct Point {
  double x{0.0};
  double y{0.0};

  constexpr Point() = default;
  constexpr Point(double x_, double y_) : x(x_), y(y_) {}

  constexpr Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  constexpr Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
  constexpr Point operator-() const { return {-x, -y}; }
  constexpr Point operator*(double s) const { return {x * s, y * s}; }
  constexpr Point operator/(double s) const { return {x / s, y / s}; }
  friend constexpr Point operator*(double s, const Point& p) { return {p.x * s, p.y * s}; }
  Point& operator+=(const Point& o) { x += o.x; y += o.y; return *this; }
  Point& operator-=(const Point& o) { x -= o.x; y -= o.y; return *this; }

  constexpr bool operator==(const Point&) const = default;

  bool is_finite() const { return std::isfinite(x) && std::isfinite(y); }
};

constexpr double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
constexpr double norm2(const Point& a) { return dot(a, a); }
inline double norm(const Point& a) { return std::hypot(a.x, a.y); }
inline double distance(const Point& a, const Point& b) { return norm(a - b); }
constexpr Point midpoint(const Point& a, const Point& b) { return (a + b) * 0.5; }
/// Counter-clockwise quarter turn.
constexpr Point perp(const Point& a) { return {-a.y, a.x}; }
inline Point rotate(const Point& v, double radians) {
  const double c = std::cos(radians);
  const double s = std::sin(radians);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}
/// Twice the signed area of (a, b, c); positive for counter-clockwise order.
constexpr double orient2d(const Point& a, const Point& b, const Point& c) {
  return cross(b - a, c - a);
}

/// Angle between two lines, taken modulo pi.
///
/// The stored representative lies in (-pi/2, pi/2]. Sums and differences
/// wrap, so identities such as "angle(p,q,r) + angle(r,q,s) == angle(p,q,s)"
/// hold without case analysis on the configuration.
class DirectedAngle {
 public:
  constexpr DirectedAngle() = default;

  static DirectedAngle from_radians(double radians) {
    DirectedAngle a;
    a.value_ = canonical(radians);
    return a;
  }
  static DirectedAngle from_degrees(double degrees) {
    return from_radians(degrees * std::numbers::pi / 180.0);
  }

  double radians() const { return value_; }
  double degrees() const { return value_ * 180.0 / std::numbers::pi; }

  DirectedAngle operator+(DirectedAngle o) const { return from_radians(value_ + o.value_); }
  DirectedAngle operator-(DirectedAngle o) const { return from_radians(value_ - o.value_); }
  DirectedAngle operator-() const { return from_radians(-value_); }
  DirectedAngle operator*(int k) const { return from_radians(value_ * k); }

  /// Circular distance modulo pi, in [0, pi/2].
  friend double angular_distance(DirectedAngle a, DirectedAngle b) {
    return std::abs((a - b).value_);
  }

 private:
  static double canonical(double r) {
    constexpr double pi = std::numbers::pi;
    double v = std::fmod(r, pi);
    if (v <= -pi / 2) v += pi;
    if (v > pi / 2) v -= pi;
    return v;
  }

  double value_{0.0};
};

inline bool approx_equal(DirectedAngle a, DirectedAngle b, double eps) {
  return angular_distance(a, b) < eps;
}

/// Numerical tolerances. Lengths are relative to the working scale
/// (usually a circumradius); angles are absolute radians.
struct Tolerance {
  double angle_eps{1e-9};
  double length_eps_rel{1e-9};

  double length(double scale) const { return length_eps_rel * scale; }
};

enum class ErrorKind {
  Collinear,
  IdenticalCircles,
  DegenerateRay,
  CenterInversion,
  NotOnBoth,
  DegenerateTriangle,
  InvalidCircle,
  InvalidLine,
  RightAngleDegenerate,
  OnSideLine,
  NoFiniteConjugate,
  NotScalene,
  RightTriangle,
  DegenerateCircle,
  ThetaOutOfRange,
  AtVertex,
  NotAMiquelTriad,
  OnCircumcircle,
  NotOnCircumcircle,
  DegenerateStep,
  EmptySelection,
};

const char* to_string(ErrorKind kind);

/// Raised when a construction is undefined for the given configuration.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const { return kind_; }
  const char* name() const { return to_string(kind_); }

 private:
  ErrorKind kind_;
};

struct Circle {
  Point center;
  double radius{1.0};

  Circle() = default;
  Circle(Point c, double r);

  /// Unsigned distance from p to the circle itself.
  double distance_to(const Point& p) const { return std::abs(miquel::distance(p, center) - radius); }
  /// Signed power-like test: negative inside, positive outside.
  double signed_offset(const Point& p) const { return miquel::distance(p, center) - radius; }
  Point at(double radians) const {
    return {center.x + radius * std::cos(radians), center.y + radius * std::sin(radians)};
  }
};

/// Infinite line; `direction` and its negation describe the same line.
struct Line {
  Point anchor;
  Point direction{1.0, 0.0};

  Line() = default;
  Line(Point anchor_, Point direction_);
  static Line through(const Point& p, const Point& q);

  Point project(const Point& p) const { return anchor + direction * dot(p - anchor, direction); }
  double signed_distance(const Point& p) const { return cross(direction, p - anchor); }
  double distance_to(const Point& p) const { return std::abs(signed_distance(p)); }
  Point at(double t) const { return anchor + direction * t; }
};

Circle circumcircle(const Point& p1, const Point& p2, const Point& p3, const Tolerance& tol = {});

/// Zero, one (tangency) or two points, via the radical line.
std::vector<Point> circle_circle_intersections(const Circle& c1, const Circle& c2,
                                               const Tolerance& tol = {});

/// Angle from line qp to line qr, modulo pi. `scale` of 0 means "use the
/// longer of the two rays".
DirectedAngle directed_angle(const Point& p, const Point& q, const Point& r,
                             const Tolerance& tol = {}, double scale = 0.0);

Point invert_point(const Circle& c, const Point& p, const Tolerance& tol = {});

Point reflect_over_line(const Line& l, const Point& p);

/// Intersection of two lines, if they are not parallel.
bool intersect_lines(const Line& l1, const Line& l2, Point& out);

struct LineCircleHit {
  Point point;
  bool tangent{false};
};

/// Zero, one (tangency) or two points, ordered along the line direction.
std::vector<Point> line_circle_intersections(const Line& l, const Circle& c,
                                             const Tolerance& tol = {});

/// The intersection of l and c other than `known`, which must lie on both.
LineCircleHit second_intersection(const Line& l, const Circle& c, const Point& known,
                                  const Tolerance& tol = {});

}  // namespace miquel
