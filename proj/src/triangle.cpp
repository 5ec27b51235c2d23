#include "miquel/triangle.hpp"

#include <algorithm>
#include <stdexcept>

namespace miquel {

namespace {

double interior_angle(const Point& at, const Point& p, const Point& q) {
  const Point u = p - at;
  const Point v = q - at;
  return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

double segment_distance(const Point& p, const Point& a, const Point& b) {
  const Point d = b - a;
  const double t = std::clamp(dot(p - a, d) / norm2(d), 0.0, 1.0);
  return distance(p, a + d * t);
}

}  // namespace

Triangle::Triangle(Point a, Point b, Point c, const Tolerance& tol) : v_{a, b, c} {
  for (const Point& p : v_) {
    if (!p.is_finite()) {
      throw GeometryError(ErrorKind::DegenerateTriangle, "vertex coordinates must be finite");
    }
  }
  const double twice = orient2d(a, b, c);
  const double longest2 = std::max({norm2(b - a), norm2(c - b), norm2(a - c)});
  if (longest2 == 0.0 || std::abs(twice) <= tol.length_eps_rel * longest2) {
    throw GeometryError(ErrorKind::DegenerateTriangle, "vertices are collinear");
  }
  signed_area_ = 0.5 * twice;
  circum_ = miquel::circumcircle(a, b, c, tol);
  for (Vertex v : kVertices) {
    const Point& p = (*this)[v];
    const Point& q = (*this)[next(v)];
    const Point& r = (*this)[prev(v)];
    side_[index(v)] = distance(q, r);
    angle_[index(v)] = interior_angle(p, q, r);
  }
}

DirectedAngle Triangle::directed_angle(Vertex v) const {
  return DirectedAngle::from_radians(orientation() * angle(v));
}

bool Triangle::is_scalene(const Tolerance& tol) const {
  const double eps = length_tol(tol);
  return std::abs(side_[0] - side_[1]) > eps && std::abs(side_[1] - side_[2]) > eps &&
         std::abs(side_[2] - side_[0]) > eps;
}

bool Triangle::is_isosceles_at(Vertex v, const Tolerance& tol) const {
  return std::abs(side(next(v)) - side(prev(v))) <= length_tol(tol);
}

bool Triangle::is_right_at(Vertex v, const Tolerance& tol) const {
  return std::abs(angle(v) - std::numbers::pi / 2) <= tol.angle_eps;
}

bool Triangle::is_right(const Tolerance& tol) const {
  return std::any_of(kVertices.begin(), kVertices.end(),
                     [&](Vertex v) { return is_right_at(v, tol); });
}

bool Triangle::is_acute() const {
  return std::none_of(kVertices.begin(), kVertices.end(),
                      [&](Vertex v) { return angle(v) >= std::numbers::pi / 2; });
}

Triangle Triangle::rotated(Vertex first) const {
  return Triangle((*this)[first], (*this)[next(first)], (*this)[prev(first)]);
}

Containment triangle_contains(const Triangle& t, const Point& p, const Tolerance& tol) {
  const double eps = t.length_tol(tol);
  for (Vertex v : kVertices) {
    if (segment_distance(p, t[next(v)], t[prev(v)]) <= eps) return {false, true};
  }
  const int s = t.orientation();
  bool inside = true;
  for (Vertex v : kVertices) {
    if (s * orient2d(t[next(v)], t[prev(v)], p) <= 0.0) inside = false;
  }
  return {inside, false};
}

std::string Correspondence::name() const {
  std::string out;
  for (Vertex v : image) out.push_back("XYZ"[index(v)]);
  return out;
}

bool Correspondence::is_even() const {
  int inversions = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (index(image[i]) > index(image[j])) ++inversions;
    }
  }
  return inversions % 2 == 0;
}

Correspondence Correspondence::parse(const std::string& letters) {
  if (letters.size() != 3) throw std::invalid_argument("correspondence needs three letters");
  Correspondence c;
  int seen = 0;
  for (int i = 0; i < 3; ++i) {
    const char ch = letters[static_cast<std::size_t>(i)];
    int k = -1;
    if (ch == 'X' || ch == 'A') k = 0;
    if (ch == 'Y' || ch == 'B') k = 1;
    if (ch == 'Z' || ch == 'C') k = 2;
    if (k < 0 || (seen & (1 << k))) {
      throw std::invalid_argument("not a permutation of XYZ: " + letters);
    }
    seen |= 1 << k;
    c.image[static_cast<std::size_t>(i)] = vertex_at(k);
  }
  return c;
}

}  // namespace miquel
