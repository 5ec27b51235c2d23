#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gen.hpp"
#include "miquel/centers.hpp"
#include "miquel/miquel.hpp"
#include "oracles.hpp"

using namespace miquel;

namespace {

constexpr double kPi = std::numbers::pi;
const double kH = std::sqrt(3.0) / 2;

const Triangle k345({0, 0}, {4, 0}, {0, 3});
const Triangle kEquilateral({0, 1}, {-kH, -0.5}, {kH, -0.5});
// Scalene, acute; coordinates chosen so every named point is rational.
const Triangle kRef({0, 0}, {4, 0}, {1, 3});

bool near(const Point& p, const Point& q, double eps = 1e-12) { return distance(p, q) < eps; }

}  // namespace

TEST_CASE("classic centers of the 3-4-5 triangle") {
  CHECK(near(classic_center(k345, {CenterType::circumcenter}), {2, 1.5}));
  CHECK(near(classic_center(k345, {CenterType::orthocenter}), {0, 0}));
  CHECK(near(classic_center(k345, {CenterType::incenter}), {1, 1}));
  CHECK(near(classic_center(k345, {CenterType::centroid}), {4.0 / 3, 1}));
  CHECK_THROWS_AS(classic_center(k345, {CenterType::first_brocard}), std::invalid_argument);
}

TEST_CASE("excenters are equidistant from the three side lines") {
  for (Vertex v : kVertices) {
    const Point e = classic_center(kRef, {CenterType::excenter, v});
    const double r = kRef.side_line(Vertex::A).distance_to(e);
    CHECK(kRef.side_line(Vertex::B).distance_to(e) == doctest::Approx(r));
    CHECK(kRef.side_line(Vertex::C).distance_to(e) == doctest::Approx(r));
    CHECK_FALSE(triangle_contains(kRef, e).inside);
  }
}

TEST_CASE("symmedian foot") {
  const Triangle iso({0, 2}, {-1, 0}, {1, 0});
  CHECK(near(symmedian_foot(iso, Vertex::A), {0, 0}));
  CHECK(near(symmedian_foot(kEquilateral, Vertex::A), {0, -0.5}, 1e-15));

  const Point d = symmedian_foot(kRef, Vertex::A);
  CHECK(near(d, {28.0 / 13, 24.0 / 13}, 1e-14));
  CHECK(near(d, oracle::symmedian_foot(kRef.a(), kRef.b(), kRef.c()), 1e-12));
  const double ratio = distance(kRef.b(), d) / distance(d, kRef.c());
  CHECK(ratio == doctest::Approx(16.0 / 10).epsilon(1e-13));
}

TEST_CASE("Brocard points") {
  CHECK(near(brocard_point(kEquilateral, BrocardKind::first), {0, 0}, 1e-14));
  CHECK(near(brocard_point(kEquilateral, BrocardKind::second), {0, 0}, 1e-14));
  const Point e = brocard_point(kEquilateral, BrocardKind::first);
  CHECK(oracle::angle(kEquilateral.b(), kEquilateral.a(), e) == doctest::Approx(kPi / 6));

  const Point o1 = brocard_point(kRef, BrocardKind::first);
  const Point o2 = brocard_point(kRef, BrocardKind::second);
  CHECK(near(o1, {220.0 / 157, 120.0 / 157}, 1e-13));
  CHECK(near(o2, {232.0 / 157, 216.0 / 157}, 1e-13));
  CHECK(near(o1, oracle::brocard(kRef.a(), kRef.b(), kRef.c(), true), 1e-10));
  CHECK(near(o2, oracle::brocard(kRef.a(), kRef.b(), kRef.c(), false), 1e-10));
  const double omega = 0.4993467216801300856;
  CHECK(oracle::angle(kRef.b(), kRef.a(), o1) == doctest::Approx(omega).epsilon(1e-13));
  CHECK(oracle::angle(o2, kRef.a(), kRef.c()) == doctest::Approx(omega).epsilon(1e-13));
}

TEST_CASE("Brocard points of an isosceles triangle mirror each other") {
  gen::Gen g(201);
  for (int i = 0; i < 100; ++i) {
    const Triangle t = g.isosceles(g.uniform(20, 140));
    const Point o1 = brocard_point(t, BrocardKind::first);
    const Point o2 = brocard_point(t, BrocardKind::second);
    const Line axis = Line::through(t.a(), midpoint(t.b(), t.c()));
    CAPTURE(i);
    CHECK(distance(reflect_over_line(axis, o1), o2) < 1e-9 * t.circumradius());
  }
}

TEST_CASE("S-points") {
  CHECK(near(s_point(kEquilateral, Vertex::A), {0, 0}, 1e-14));
  const DirectedAngle bsc = directed_angle(kEquilateral.b(), {0, 0}, kEquilateral.c());
  CHECK(angular_distance(bsc, DirectedAngle::from_radians(2 * kPi / 3)) < 1e-14);

  const Point s = s_point(kRef, Vertex::A);
  CHECK(near(s, {28.0 / 17, 24.0 / 17}, 1e-13));
  CHECK(near(s, oracle::dumpty(kRef.a(), kRef.b(), kRef.c()), 1e-12));
  // SD bisects angle BSC, so BD / DC = BS / CS = (AB / AC)^2.
  const Point d = symmedian_foot(kRef, Vertex::A);
  const double lhs = distance(kRef.b(), d) / distance(d, kRef.c());
  CHECK(lhs == doctest::Approx(distance(kRef.b(), s) / distance(kRef.c(), s)).epsilon(1e-13));
  CHECK(lhs == doctest::Approx(16.0 / 10).epsilon(1e-13));

  const Triangle right({0, 0}, {4, 0}, {0, 3});
  try {
    s_point(right, Vertex::A);
    FAIL("expected RightAngleDegenerate");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::RightAngleDegenerate);
  }
}

TEST_CASE("M-points") {
  CHECK(near(m_point(kEquilateral, Vertex::A), {0, 0}, 1e-14));
  const Point m = m_point(kRef, Vertex::A);
  CHECK(near(m, {20.0 / 17, 12.0 / 17}, 1e-13));
  CHECK(near(m, oracle::humpty(kRef.a(), kRef.b(), kRef.c()), 1e-12));

  const MPointConstruction acute = m_point_construction(kRef, Vertex::A);
  CHECK_FALSE(acute.obtuse);
  CHECK(distance(acute.e, acute.m) == doctest::Approx(distance(acute.e, acute.f)));

  // Obtuse at C: ABFC-style parallelogram on the vertex C.
  const Triangle obtuse({0, 0}, {4, 0}, {1.6, 0.9});
  REQUIRE(obtuse.is_obtuse_at(Vertex::C));
  const MPointConstruction c = m_point_construction(obtuse, Vertex::C);
  CHECK(c.obtuse);
  CHECK(near(c.f, {2.4, -0.9}, 1e-14));
  CHECK(near(c.m, {34.0 / 97, 360.0 / 97}, 1e-13));
  const Point fc = oracle::circumcenter(c.f, obtuse.a(), obtuse.b());
  CHECK(std::abs(distance(c.m, fc) - distance(obtuse.a(), fc)) < 1e-12);
  CHECK(near(c.m, oracle::humpty(obtuse.c(), obtuse.a(), obtuse.b()), 1e-12));
}

TEST_CASE("isogonal conjugates of named pairs") {
  const Point l = classic_center(kRef, {CenterType::incenter});
  CHECK(near(isogonal_conjugate(kRef, l), l, 1e-12));
  CHECK(near(isogonal_conjugate(kRef, kRef.circumcenter()), {1, 1}, 1e-12));
  for (Vertex v : kVertices) {
    CAPTURE(label(v));
    CHECK(near(isogonal_conjugate(kRef, s_point(kRef, v)), m_point(kRef, v), 1e-12));
  }
  try {
    isogonal_conjugate(kRef, {2, 0});
    FAIL("expected OnSideLine");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::OnSideLine);
  }
  try {
    isogonal_conjugate(kRef, {2, 1 + std::sqrt(5.0)});
    FAIL("expected NoFiniteConjugate");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::NoFiniteConjugate);
  }
}

TEST_CASE("inversion in the circumcircle") {
  CHECK(near(inverse_in_circumcircle(kEquilateral, {0, 0.5}), {0, 2}, 1e-14));
  CHECK(near(inverse_in_circumcircle(kEquilateral, kEquilateral.b()), kEquilateral.b(), 1e-15));
  try {
    inverse_in_circumcircle(kRef, kRef.circumcenter());
    FAIL("expected CenterInversion");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::CenterInversion);
  }
}

TEST_CASE("eleven-point catalog") {
  const auto cat = eleven_point_catalog(kRef);
  REQUIRE(cat.size() == 11);
  const double R = kRef.circumradius();
  CHECK(R == doctest::Approx(std::sqrt(5.0)));
  CHECK(near(kRef.circumcenter(), {2, 1}, 1e-15));
  for (std::size_t i = 0; i < cat.size(); ++i) {
    CAPTURE(cat[i].label());
    CHECK((distance(cat[i].location, kRef.circumcenter()) < R) == (i < 6));
    CHECK(cat[i].inverted == (i >= 6));
    for (std::size_t j = 0; j < i; ++j) CHECK(distance(cat[i].location, cat[j].location) > 1e-6 * R);
    const Triangle xyz = pedal_triangle(kRef, cat[i].location);
    for (Vertex v : kVertices) {
      CHECK(std::abs(kRef.angle(v) - xyz.angle(cat[i].expected.image[index(v)])) < 1e-7);
    }
  }
  CHECK(cat[0].label() == "O");
  CHECK(cat[6].label() == "inv(Ω₁)");
  CHECK(cat[1].expected.name() == "ZXY");
  CHECK(cat[3].expected.name() == "XZY");

  try {
    eleven_point_catalog(kEquilateral);
    FAIL("expected NotScalene");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::NotScalene);
  }
  try {
    eleven_point_catalog(Triangle({0, 0}, {4, 0}, {0, 3}));
    FAIL("expected RightTriangle");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::RightTriangle);
  }
}

TEST_CASE("inverted S-points sit on the opposite side line") {
  const auto cat = eleven_point_catalog(kRef);
  for (const CatalogEntry& e : cat) {
    if (!e.inverted || e.kind.type != CenterType::s_point) continue;
    CAPTURE(e.label());
    CHECK(kRef.side_line(e.kind.vertex).distance_to(e.location) < 1e-12);
  }
}

// ------------------------------------------------------------- properties

TEST_CASE("property: Brocard angle conditions") {
  gen::Gen g(202);
  for (int i = 0; i < 200; ++i) {
    const Triangle t = g.generic_triangle(2.0);
    const Point& a = t.a();
    const Point& b = t.b();
    const Point& c = t.c();
    const Point p = brocard_point(t, BrocardKind::first);
    const Point q = brocard_point(t, BrocardKind::second);
    CAPTURE(i);
    const DirectedAngle x = directed_angle(b, a, p), y = directed_angle(c, b, p), z = directed_angle(a, c, p);
    CHECK(angular_distance(x, y) < 1e-8);
    CHECK(angular_distance(y, z) < 1e-8);
    const DirectedAngle u = directed_angle(q, a, c), v = directed_angle(q, b, a), w = directed_angle(q, c, b);
    CHECK(angular_distance(u, v) < 1e-8);
    CHECK(angular_distance(v, w) < 1e-8);
    if (i < 20) {
      CHECK(distance(p, oracle::brocard(a, b, c, true)) < 1e-8 * t.circumradius());
      CHECK(distance(q, oracle::brocard(a, b, c, false)) < 1e-8 * t.circumradius());
    }
  }
}

TEST_CASE("property: S-point directed angles") {
  gen::Gen g(203);
  for (int i = 0; i < 200; ++i) {
    const Triangle t = g.generic_triangle(2.0);
    for (Vertex v : kVertices) {
      const Point s = s_point(t, v);
      const Point& a = t[v];
      const Point& b = t[next(v)];
      const Point& c = t[prev(v)];
      const DirectedAngle A = directed_angle(b, a, c);
      CAPTURE(i);
      CHECK(angular_distance(directed_angle(b, s, c), A * 2) < 1e-8);
      // CSA = pi - A, i.e. -A modulo pi.
      CHECK(angular_distance(directed_angle(c, s, a), -A) < 1e-8);
      CHECK(distance(s, oracle::dumpty(a, b, c)) < 1e-9 * t.circumradius());
    }
  }
}

TEST_CASE("property: M-points match the foot of H on the median") {
  gen::Gen g(204);
  int obtuse = 0;
  for (int i = 0; i < 300; ++i) {
    const Triangle t = g.generic_triangle(2.0);
    for (Vertex v : kVertices) {
      obtuse += t.is_obtuse_at(v);
      CAPTURE(i);
      CHECK(distance(m_point(t, v), oracle::humpty(t[v], t[next(v)], t[prev(v)])) < 1e-9 * t.circumradius());
    }
  }
  CHECK(obtuse > 30);
}

TEST_CASE("property: isogonal conjugation") {
  gen::Gen g(205);
  for (int i = 0; i < 300; ++i) {
    const Triangle t = g.triangle(10);
    const double R = t.circumradius();
    Point p;
    do {
      p = g.in_disk(t.circumcenter(), 0.95 * R);
    } while (std::min({t.side_line(Vertex::A).distance_to(p), t.side_line(Vertex::B).distance_to(p),
                       t.side_line(Vertex::C).distance_to(p)}) < 0.05 * R);
    CAPTURE(i);
    const Point q = isogonal_conjugate(t, p);
    CHECK(distance(q, oracle::isogonal(t.a(), t.b(), t.c(), p)) < 1e-8 * R * std::max(1.0, distance(q, t.circumcenter()) / R));
    if (distance(q, t.circumcenter()) < 20 * R &&
        t.circumcircle().distance_to(q) > 1e-3 * R) {
      CHECK(distance(isogonal_conjugate(t, q), p) < 1e-8 * R);
    }
    CHECK(distance(isogonal_conjugate(t, t.circumcenter()), classic_center(t, {CenterType::orthocenter})) < 1e-8 * R);
    const Point l = classic_center(t, {CenterType::incenter});
    CHECK(distance(isogonal_conjugate(t, l), l) < 1e-8 * R);
  }
}

TEST_CASE("property: isogonal(S_v) = M_v, acute and obtuse") {
  gen::Gen g(206);
  int obtuse = 0;
  for (int i = 0; i < 200; ++i) {
    const Triangle t = g.generic_triangle(2.0);
    for (Vertex v : kVertices) {
      obtuse += t.is_obtuse_at(v);
      CAPTURE(i);
      CHECK(distance(isogonal_conjugate(t, s_point(t, v)), m_point(t, v)) < 1e-8 * t.circumradius());
    }
  }
  CHECK(obtuse > 20);
}

TEST_CASE("property: catalog points are pairwise distinct") {
  gen::Gen g(207);
  for (int i = 0; i < 200; ++i) {
    const Triangle t = g.generic_triangle(5.0);
    const auto cat = eleven_point_catalog(t);
    REQUIRE(cat.size() == 11);
    CAPTURE(i);
    for (std::size_t a = 0; a < cat.size(); ++a) {
      for (std::size_t b = 0; b < a; ++b) {
        CHECK(distance(cat[a].location, cat[b].location) > 1e-6 * t.circumradius());
      }
    }
  }
}

TEST_CASE("symmedian direction is the mirror of the median") {
  gen::Gen g(208);
  for (int i = 0; i < 200; ++i) {
    const Triangle t = g.triangle(10);
    const Point d = symmedian_foot(t, Vertex::A);
    const Point e = midpoint(t.b(), t.c());
    CAPTURE(i);
    CHECK(std::abs(oracle::angle(t.b(), t.a(), d) - oracle::angle(e, t.a(), t.c())) < 1e-12);
  }
}
