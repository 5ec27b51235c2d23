#pragma once

#include <array>
#include <string>

#include "miquel/kernel.hpp"

namespace miquel {

enum class Vertex { A = 0, B = 1, C = 2 };

inline constexpr std::array<Vertex, 3> kVertices{Vertex::A, Vertex::B, Vertex::C};

constexpr int index(Vertex v) { return static_cast<int>(v); }
constexpr Vertex vertex_at(int i) { return static_cast<Vertex>(((i % 3) + 3) % 3); }
constexpr Vertex next(Vertex v) { return vertex_at(index(v) + 1); }
constexpr Vertex prev(Vertex v) { return vertex_at(index(v) + 2); }
constexpr char label(Vertex v) { return "ABC"[index(v)]; }

/// A non-degenerate triangle with semantic vertex labels.
///
/// Circumcircle, side lengths and interior angles are computed once at
/// construction; the object is immutable afterwards.
class Triangle {
 public:
  Triangle(Point a, Point b, Point c, const Tolerance& tol = {});

  const Point& a() const { return v_[0]; }
  const Point& b() const { return v_[1]; }
  const Point& c() const { return v_[2]; }
  const Point& operator[](Vertex v) const { return v_[index(v)]; }
  const std::array<Point, 3>& vertices() const { return v_; }

  /// +1 for counter-clockwise, -1 for clockwise.
  int orientation() const { return signed_area_ > 0.0 ? 1 : -1; }
  double signed_area() const { return signed_area_; }

  const Circle& circumcircle() const { return circum_; }
  const Point& circumcenter() const { return circum_.center; }
  double circumradius() const { return circum_.radius; }
  double length_tol(const Tolerance& tol) const { return tol.length(circum_.radius); }

  /// Length of the side opposite v.
  double side(Vertex v) const { return side_[index(v)]; }
  /// Interior angle at v, in (0, pi).
  double angle(Vertex v) const { return angle_[index(v)]; }
  /// Directed angle at v: the angle BAC for v = A, CBA for B, ACB for C.
  DirectedAngle directed_angle(Vertex v) const;
  /// The line through the two vertices other than v.
  Line side_line(Vertex v) const { return Line::through((*this)[next(v)], (*this)[prev(v)]); }

  bool is_scalene(const Tolerance& tol = {}) const;
  bool is_isosceles_at(Vertex v, const Tolerance& tol = {}) const;
  bool is_right(const Tolerance& tol = {}) const;
  bool is_right_at(Vertex v, const Tolerance& tol = {}) const;
  bool is_obtuse_at(Vertex v) const { return angle(v) > std::numbers::pi / 2; }
  bool is_acute() const;

  /// Same triangle with vertex `first` relabelled as A (cyclic shift).
  Triangle rotated(Vertex first) const;

 private:
  std::array<Point, 3> v_;
  double signed_area_;
  Circle circum_;
  std::array<double, 3> side_;
  std::array<double, 3> angle_;
};

struct Containment {
  bool inside{false};
  bool on_boundary{false};
};

/// Strict interior test; points within tolerance of a side line (and
/// between its endpoints' extensions) report on_boundary instead.
Containment triangle_contains(const Triangle& t, const Point& p, const Tolerance& tol = {});

/// Vertex correspondence between two triangles: `image[i]` is the vertex of
/// the second triangle matched with vertex i of the first. Printed with the
/// letters X, Y, Z for the second triangle, so "ZXY" means A->Z, B->X, C->Y.
struct Correspondence {
  std::array<Vertex, 3> image{Vertex::A, Vertex::B, Vertex::C};

  std::string name() const;
  bool is_even() const;
  bool operator==(const Correspondence&) const = default;

  /// Parses strings such as "XZY"; throws std::invalid_argument.
  static Correspondence parse(const std::string& letters);
};

}  // namespace miquel
