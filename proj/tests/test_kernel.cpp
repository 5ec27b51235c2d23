#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gen.hpp"
#include "miquel/kernel.hpp"
#include "miquel/triangle.hpp"
#include "oracles.hpp"

using namespace miquel;

namespace {

constexpr double kPi = std::numbers::pi;

bool near(const Point& p, const Point& q, double eps = 1e-12) { return distance(p, q) < eps; }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.kind();
  }
  FAIL("no GeometryError thrown");
  return ErrorKind::EmptySelection;
}

}  // namespace

TEST_CASE("circumcircle of known triangles") {
  const Circle right = circumcircle({0, 0}, {4, 0}, {0, 3});
  CHECK(near(right.center, {2, 1.5}));
  CHECK(right.radius == doctest::Approx(2.5).epsilon(1e-14));

  const double h = std::sqrt(3.0) / 2;
  const Circle eq = circumcircle({0, 1}, {-h, -0.5}, {h, -0.5});
  CHECK(near(eq.center, {0, 0}, 1e-15));
  CHECK(eq.radius == doctest::Approx(1.0).epsilon(1e-15));

  CHECK(kind_of([] { circumcircle({0, 0}, {1, 0}, {2, 0}); }) == ErrorKind::Collinear);
}

TEST_CASE("circle-circle intersections") {
  const auto lens = circle_circle_intersections({{0, 0}, 1}, {{1, 0}, 1});
  REQUIRE(lens.size() == 2);
  const double h = std::sqrt(3.0) / 2;
  CHECK(((near(lens[0], {0.5, h}) && near(lens[1], {0.5, -h})) ||
         (near(lens[0], {0.5, -h}) && near(lens[1], {0.5, h}))));

  const auto touch = circle_circle_intersections({{0, 0}, 1}, {{2, 0}, 1});
  REQUIRE(touch.size() == 1);
  CHECK(near(touch[0], {1, 0}));

  CHECK(circle_circle_intersections({{0, 0}, 1}, {{5, 0}, 1}).empty());
  CHECK(kind_of([] { circle_circle_intersections({{1, 1}, 2}, {{1, 1}, 2}); }) ==
        ErrorKind::IdenticalCircles);
}

TEST_CASE("directed angle examples") {
  CHECK(directed_angle({1, 0}, {0, 0}, {0, 1}).radians() == doctest::Approx(kPi / 2));
  CHECK(directed_angle({1, 0}, {0, 0}, {2, 0}).radians() == doctest::Approx(0.0));
  CHECK(directed_angle({1, 0}, {0, 0}, {1, 1}).radians() == doctest::Approx(kPi / 4));
  // Opposite rays are the same line.
  CHECK(directed_angle({1, 0}, {0, 0}, {-3, 0}).radians() == doctest::Approx(0.0));
  CHECK(kind_of([] { directed_angle({0, 0}, {0, 0}, {1, 1}); }) == ErrorKind::DegenerateRay);
}

TEST_CASE("directed angles wrap into (-pi/2, pi/2]") {
  CHECK(DirectedAngle::from_radians(kPi / 2).radians() == doctest::Approx(kPi / 2));
  CHECK(DirectedAngle::from_radians(-kPi / 2).radians() == doctest::Approx(kPi / 2));
  CHECK(DirectedAngle::from_radians(3 * kPi + 0.25).radians() == doctest::Approx(0.25));
  CHECK(DirectedAngle::from_degrees(135).degrees() == doctest::Approx(-45.0));
  CHECK(angular_distance(DirectedAngle::from_radians(kPi / 2 - 1e-3),
                         DirectedAngle::from_radians(-kPi / 2 + 1e-3)) == doctest::Approx(2e-3));
}

TEST_CASE("inversion examples") {
  const Circle unit{{0, 0}, 1};
  CHECK(near(invert_point(unit, {2, 0}), {0.5, 0}));
  CHECK(near(invert_point(unit, {0, 1}), {0, 1}));
  CHECK(kind_of([&] { invert_point(unit, {0, 0}); }) == ErrorKind::CenterInversion);
}

TEST_CASE("reflection examples") {
  const Line y_axis({0, 0}, {0, 1});
  CHECK(near(reflect_over_line(y_axis, {1, 0}), {-1, 0}));
  CHECK(near(reflect_over_line(y_axis, {0, 5}), {0, 5}));
  CHECK(near(reflect_over_line(Line::through({0, 0}, {1, 1}), {2, 0}), {0, 2}, 1e-12));
}

TEST_CASE("second intersection of line and circle") {
  const Circle unit{{0, 0}, 1};
  const LineCircleHit diameter = second_intersection(Line({0, 0}, {0, 1}), unit, {0, 1});
  CHECK(near(diameter.point, {0, -1}));
  CHECK_FALSE(diameter.tangent);

  const LineCircleHit touch = second_intersection(Line({0, 1}, {1, 0}), unit, {0, 1});
  CHECK(near(touch.point, {0, 1}));
  CHECK(touch.tangent);

  const double s = std::sqrt(0.5);
  CHECK(near(second_intersection(Line::through({0, 0}, {1, 1}), unit, {s, s}).point, {-s, -s}));
  CHECK(kind_of([&] { second_intersection(Line({0, 0}, {1, 0}), unit, {0, 0.5}); }) ==
        ErrorKind::NotOnBoth);
}

TEST_CASE("triangle containment") {
  const Triangle t({0, 0}, {4, 0}, {0, 3});
  CHECK(triangle_contains(t, {1, 1}).inside);
  CHECK_FALSE(triangle_contains(t, {10, 10}).inside);
  const Containment edge = triangle_contains(t, {2, 0});
  CHECK(edge.on_boundary);
  CHECK_FALSE(edge.inside);
}

TEST_CASE("triangle basics") {
  CHECK(kind_of([] { Triangle({0, 0}, {1, 0}, {2, 0}); }) == ErrorKind::DegenerateTriangle);
  const Triangle t({0, 0}, {4, 0}, {0, 3});
  CHECK(t.is_right_at(Vertex::A));
  CHECK(t.side(Vertex::A) == doctest::Approx(5.0));
  CHECK(t.orientation() == 1);
  CHECK(Triangle({0, 0}, {0, 3}, {4, 0}).orientation() == -1);
  CHECK(t.directed_angle(Vertex::A).radians() == doctest::Approx(kPi / 2));
  const Triangle r = t.rotated(Vertex::B);
  CHECK(r.a() == t.b());
  CHECK(r.c() == t.a());
  CHECK(Correspondence::parse("ZXY").name() == "ZXY");
  CHECK_FALSE(Correspondence::parse("XZY").is_even());
  CHECK(Correspondence::parse("YZX").is_even());
  CHECK_THROWS_AS(Correspondence::parse("XXY"), std::invalid_argument);
}

// ------------------------------------------------------------- properties

TEST_CASE("property: directed angles add") {
  gen::Gen g(101);
  for (int i = 0; i < 2000; ++i) {
    const Point q = g.point(5);
    Point p, r, s;
    do {
      p = g.point(5), r = g.point(5), s = g.point(5);
    } while (distance(p, q) < 1e-3 || distance(r, q) < 1e-3 || distance(s, q) < 1e-3);
    CAPTURE(i);
    const DirectedAngle lhs = directed_angle(p, q, r) + directed_angle(r, q, s);
    CHECK(angular_distance(lhs, directed_angle(p, q, s)) < 1e-12);
  }
}

TEST_CASE("property: inversion is an involution") {
  gen::Gen g(102);
  for (int i = 0; i < 2000; ++i) {
    const Circle c{g.point(10), g.uniform(0.1, 10)};
    const double d = c.radius * g.uniform(0.1, 10);
    const Point p = c.center + rotate({d, 0}, g.uniform(0, 2 * kPi));
    CAPTURE(i);
    CHECK(distance(invert_point(c, invert_point(c, p)), p) < 1e-9 * c.radius);
  }
}

TEST_CASE("property: circumcircle ignores argument order and matches Cramer") {
  gen::Gen g(103);
  for (int i = 0; i < 1000; ++i) {
    const Triangle t = g.triangle(5);
    const Circle base = circumcircle(t.a(), t.b(), t.c());
    const double R = base.radius;
    CAPTURE(i);
    for (const auto& perm : {std::array{1, 0, 2}, std::array{2, 1, 0}, std::array{1, 2, 0}}) {
      const auto& v = t.vertices();
      const Circle c = circumcircle(v[perm[0]], v[perm[1]], v[perm[2]]);
      CHECK(distance(c.center, base.center) < 1e-9 * R);
      CHECK(std::abs(c.radius - R) < 1e-9 * R);
    }
    CHECK(distance(base.center, oracle::circumcenter(t.a(), t.b(), t.c())) < 1e-9 * R);
  }
}

TEST_CASE("property: reflection preserves distances to the mirror") {
  gen::Gen g(104);
  for (int i = 0; i < 2000; ++i) {
    const Point a = g.point(10);
    Point b;
    do b = g.point(10); while (distance(a, b) < 1e-3);
    const Line l = Line::through(a, b);
    const Point p = g.point(10);
    const Point q = reflect_over_line(l, p);
    const Point on = l.at(g.uniform(-20, 20));
    CAPTURE(i);
    CHECK(std::abs(distance(p, on) - distance(q, on)) <= 1e-12 * distance(p, on) + 1e-15);
  }
}

TEST_CASE("property: intersection points lie on both circles") {
  gen::Gen g(105);
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    const Circle c1{g.point(5), g.uniform(0.2, 5)};
    const Circle c2{g.point(5), g.uniform(0.2, 5)};
    const double scale = std::max(c1.radius, c2.radius);
    for (const Point& p : circle_circle_intersections(c1, c2)) {
      ++checked;
      CAPTURE(i);
      CHECK(c1.distance_to(p) < 1e-9 * scale);
      CHECK(c2.distance_to(p) < 1e-9 * scale);
    }
  }
  CHECK(checked > 1000);
}
