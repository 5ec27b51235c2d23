#pragma once

// Independent reference constructions. None of these call into the library
// beyond Point arithmetic: each reaches the same point by a different route
// (numerical search, a different pair of circles, a classical identity).

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "miquel/kernel.hpp"

namespace oracle {

using miquel::Point;
using miquel::cross;
using miquel::dot;
using miquel::norm;

// Unsigned angle at q.
inline double angle(const Point& p, const Point& q, const Point& r) {
  return std::atan2(std::abs(cross(p - q, r - q)), dot(p - q, r - q));
}

// Cramer's rule on the two perpendicular-bisector equations.
inline Point circumcenter(const Point& a, const Point& b, const Point& c) {
  const double a1 = 2 * (b.x - a.x), b1 = 2 * (b.y - a.y);
  const double c1 = dot(b, b) - dot(a, a);
  const double a2 = 2 * (c.x - a.x), b2 = 2 * (c.y - a.y);
  const double c2 = dot(c, c) - dot(a, a);
  const double det = a1 * b2 - a2 * b1;
  return {(c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det};
}

inline Point orthocenter(const Point& a, const Point& b, const Point& c) {
  return a + b + c - circumcenter(a, b, c) * 2.0;
}

inline Point incenter(const Point& a, const Point& b, const Point& c) {
  const double la = norm(b - c), lb = norm(c - a), lc = norm(a - b);
  return (a * la + b * lb + c * lc) / (la + lb + lc);
}

inline Point foot(const Point& p, const Point& b, const Point& c) {
  const Point d = c - b;
  return b + d * (dot(p - b, d) / dot(d, d));
}

inline Point intersect(const Point& p1, const Point& d1, const Point& p2, const Point& d2) {
  const double t = cross(p2 - p1, d2) / cross(d1, d2);
  return p1 + d1 * t;
}

inline Point reflect(const Point& p, const Point& anchor, const Point& dir) {
  const Point f = anchor + dir * (dot(p - anchor, dir) / dot(dir, dir));
  return f * 2.0 - p;
}

inline bool inside(const Point& a, const Point& b, const Point& c, const Point& p) {
  const double s = cross(b - a, c - a);
  return cross(b - a, p - a) * s > 0 && cross(c - b, p - b) * s > 0 && cross(a - c, p - c) * s > 0;
}

// D on BC with angle BAD equal to angle EAC (E the midpoint of BC), found
// by bisection on the position along BC.
inline Point symmedian_foot(const Point& a, const Point& b, const Point& c) {
  const Point e = (b + c) * 0.5;
  const double target = angle(e, a, c);
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (angle(b, a, b + (c - b) * mid) < target) lo = mid; else hi = mid;
  }
  return b + (c - b) * (0.5 * (lo + hi));
}

// Isogonal conjugate: reflect cevians AP and BP over the bisectors at A and B
// and intersect the reflected lines.
inline Point isogonal(const Point& a, const Point& b, const Point& c, const Point& p) {
  auto mirrored = [&](const Point& v, const Point& s1, const Point& s2) {
    const Point bis = (s1 - v) / norm(s1 - v) + (s2 - v) / norm(s2 - v);
    return reflect(p, v, bis) - v;
  };
  return intersect(a, mirrored(a, b, c), b, mirrored(b, c, a));
}

// Midpoint of the symmedian chord from A.
inline Point dumpty(const Point& a, const Point& b, const Point& c) {
  const Point o = circumcenter(a, b, c);
  const Point d = symmedian_foot(a, b, c) - a;
  const double t = -2.0 * dot(a - o, d) / dot(d, d);
  return a + d * (t / 2.0);
}

// Foot of the perpendicular from H onto the median from A.
inline Point humpty(const Point& a, const Point& b, const Point& c) {
  return foot(orthocenter(a, b, c), a, (b + c) * 0.5);
}

// Second intersection of two circles sharing the point `common`: the mirror
// image of `common` in the line of centers.
inline Point second_common_point(const Point& o1, const Point& o2, const Point& common) {
  return reflect(common, o1, o2 - o1);
}

// Miquel point from circles (A, Y, Z) and (C, X, Y), which share Y.
inline Point miquel_point(const Point& a, const Point& b, const Point& c, double u, double v, double w) {
  const Point x = b + (c - b) * u, y = c + (a - c) * v, z = a + (b - a) * w;
  return second_common_point(circumcenter(a, y, z), circumcenter(c, x, y), y);
}

// Brocard point: a coarse grid search for the interior point minimizing
// the spread of the three angles, then Newton's method with a
// finite-difference Jacobian. first: BAP = CBP = ACP; second: PAC = PBA = PCB.
inline Point brocard(const Point& a, const Point& b, const Point& c, bool first) {
  auto residual = [&](const Point& p) -> std::array<double, 2> {
    const double x = first ? angle(b, a, p) : angle(p, a, c);
    const double y = first ? angle(c, b, p) : angle(p, b, a);
    const double z = first ? angle(a, c, p) : angle(p, c, b);
    return {x - y, y - z};
  };
  const double lo_x = std::min({a.x, b.x, c.x}), hi_x = std::max({a.x, b.x, c.x});
  const double lo_y = std::min({a.y, b.y, c.y}), hi_y = std::max({a.y, b.y, c.y});
  Point best = (a + b + c) / 3.0;
  double best_f = std::numeric_limits<double>::infinity();
  constexpr int kGrid = 200;
  for (int i = 1; i < kGrid; ++i) {
    for (int j = 1; j < kGrid; ++j) {
      const Point p{lo_x + (hi_x - lo_x) * i / kGrid, lo_y + (hi_y - lo_y) * j / kGrid};
      if (!inside(a, b, c, p)) continue;
      const auto r = residual(p);
      const double f = r[0] * r[0] + r[1] * r[1];
      if (f < best_f) best_f = f, best = p;
    }
  }
  const double h = 1e-7 * std::max(hi_x - lo_x, hi_y - lo_y);
  Point p = best;
  for (int it = 0; it < 50; ++it) {
    const auto r = residual(p);
    const auto rx = residual(p + Point{h, 0}), ry = residual(p + Point{0, h});
    const double j00 = (rx[0] - r[0]) / h, j01 = (ry[0] - r[0]) / h;
    const double j10 = (rx[1] - r[1]) / h, j11 = (ry[1] - r[1]) / h;
    const double det = j00 * j11 - j01 * j10;
    const Point step{(r[0] * j11 - r[1] * j01) / det, (j00 * r[1] - j10 * r[0]) / det};
    p -= step;
    if (norm(step) < 1e-15 * (hi_x - lo_x)) break;
  }
  return p;
}

}  // namespace oracle
