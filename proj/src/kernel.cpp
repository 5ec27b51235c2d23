#include "miquel/kernel.hpp"

#include <algorithm>

namespace miquel {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Collinear: return "Collinear";
    case ErrorKind::IdenticalCircles: return "IdenticalCircles";
    case ErrorKind::DegenerateRay: return "DegenerateRay";
    case ErrorKind::CenterInversion: return "CenterInversion";
    case ErrorKind::NotOnBoth: return "NotOnBoth";
    case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorKind::InvalidCircle: return "InvalidCircle";
    case ErrorKind::InvalidLine: return "InvalidLine";
    case ErrorKind::RightAngleDegenerate: return "RightAngleDegenerate";
    case ErrorKind::OnSideLine: return "OnSideLine";
    case ErrorKind::NoFiniteConjugate: return "NoFiniteConjugate";
    case ErrorKind::NotScalene: return "NotScalene";
    case ErrorKind::RightTriangle: return "RightTriangle";
    case ErrorKind::DegenerateCircle: return "DegenerateCircle";
    case ErrorKind::ThetaOutOfRange: return "ThetaOutOfRange";
    case ErrorKind::AtVertex: return "AtVertex";
    case ErrorKind::NotAMiquelTriad: return "NotAMiquelTriad";
    case ErrorKind::OnCircumcircle: return "OnCircumcircle";
    case ErrorKind::NotOnCircumcircle: return "NotOnCircumcircle";
    case ErrorKind::DegenerateStep: return "DegenerateStep";
    case ErrorKind::EmptySelection: return "EmptySelection";
  }
  return "Unknown";
}

GeometryError::GeometryError(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

Circle::Circle(Point c, double r) : center(c), radius(r) {
  if (!c.is_finite() || !std::isfinite(r) || !(r > 0.0)) {
    throw GeometryError(ErrorKind::InvalidCircle, "radius must be finite and positive");
  }
}

Line::Line(Point anchor_, Point direction_) : anchor(anchor_) {
  const double n = norm(direction_);
  if (!anchor_.is_finite() || !std::isfinite(n) || n == 0.0) {
    throw GeometryError(ErrorKind::InvalidLine, "direction must be a finite non-zero vector");
  }
  direction = direction_ / n;
}

Line Line::through(const Point& p, const Point& q) { return Line(p, q - p); }

Circle circumcircle(const Point& p1, const Point& p2, const Point& p3, const Tolerance& tol) {
  const Point b = p2 - p1;
  const Point c = p3 - p1;
  const double scale2 = std::max({norm2(b), norm2(c), norm2(p3 - p2)});
  const double d = 2.0 * cross(b, c);
  if (scale2 == 0.0 || std::abs(d) <= 2.0 * tol.length_eps_rel * scale2) {
    throw GeometryError(ErrorKind::Collinear, "no circle through three collinear points");
  }
  const double bb = norm2(b);
  const double cc = norm2(c);
  const Point u{(c.y * bb - b.y * cc) / d, (b.x * cc - c.x * bb) / d};
  return Circle(p1 + u, norm(u));
}

std::vector<Point> circle_circle_intersections(const Circle& c1, const Circle& c2,
                                               const Tolerance& tol) {
  const double scale = std::max(c1.radius, c2.radius);
  const double eps = tol.length(scale);
  const Point d = c2.center - c1.center;
  const double dist = norm(d);
  if (dist <= eps) {
    if (std::abs(c1.radius - c2.radius) <= eps) {
      throw GeometryError(ErrorKind::IdenticalCircles, "circles coincide");
    }
    return {};
  }
  const Point ex = d / dist;
  const Point ey = perp(ex);
  // Foot of the radical line on the line of centers.
  const double a = (dist * dist + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * dist);
  const Point base = c1.center + ex * a;
  const double h2 = c1.radius * c1.radius - a * a;
  if (h2 < 0.0) {
    const double gap = std::max(dist - (c1.radius + c2.radius),
                                std::abs(c1.radius - c2.radius) - dist);
    if (gap <= eps) return {base};
    return {};
  }
  const double h = std::sqrt(h2);
  if (2.0 * h <= eps) return {base};
  return {base + ey * h, base - ey * h};
}

DirectedAngle directed_angle(const Point& p, const Point& q, const Point& r,
                             const Tolerance& tol, double scale) {
  const Point u = p - q;
  const Point v = r - q;
  const double nu = norm(u);
  const double nv = norm(v);
  const double s = scale > 0.0 ? scale : std::max(nu, nv);
  const double eps = tol.length(s);
  if (nu <= eps || nv <= eps || nu == 0.0 || nv == 0.0) {
    throw GeometryError(ErrorKind::DegenerateRay, "ray endpoint coincides with the apex");
  }
  return DirectedAngle::from_radians(std::atan2(cross(u, v), dot(u, v)));
}

Point invert_point(const Circle& c, const Point& p, const Tolerance& tol) {
  const Point d = p - c.center;
  const double n2 = norm2(d);
  if (std::sqrt(n2) <= tol.length(c.radius)) {
    throw GeometryError(ErrorKind::CenterInversion, "the center inverts to a point at infinity");
  }
  return c.center + d * (c.radius * c.radius / n2);
}

Point reflect_over_line(const Line& l, const Point& p) {
  const Point foot = l.project(p);
  return foot * 2.0 - p;
}

bool intersect_lines(const Line& l1, const Line& l2, Point& out) {
  const double den = cross(l1.direction, l2.direction);
  if (den == 0.0) return false;
  const double t = cross(l2.anchor - l1.anchor, l2.direction) / den;
  out = l1.at(t);
  return true;
}

std::vector<Point> line_circle_intersections(const Line& l, const Circle& c,
                                             const Tolerance& tol) {
  const Point foot = l.project(c.center);
  const double off = distance(foot, c.center);
  const double h2 = c.radius * c.radius - off * off;
  const double eps = tol.length(c.radius);
  if (h2 < 0.0) {
    if (off - c.radius <= eps) return {foot};
    return {};
  }
  const double h = std::sqrt(h2);
  if (2.0 * h <= eps) return {foot};
  return {foot - l.direction * h, foot + l.direction * h};
}

LineCircleHit second_intersection(const Line& l, const Circle& c, const Point& known,
                                  const Tolerance& tol) {
  const double eps = tol.length(c.radius);
  if (l.distance_to(known) > eps || c.distance_to(known) > eps) {
    throw GeometryError(ErrorKind::NotOnBoth, "known point is not on both the line and the circle");
  }
  // known + t*dir is on the circle for t = 0 and for the other root of
  // t^2 + 2 t dir.(known - center) = 0.
  const double t = -2.0 * dot(l.direction, known - c.center);
  if (std::abs(t) <= eps) return {known, true};
  return {known + l.direction * t, false};
}

}  // namespace miquel
