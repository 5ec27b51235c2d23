#include "miquel/miquel.hpp"

#include <cmath>

#include "miquel/centers.hpp"

namespace miquel {

namespace {

constexpr double kPi = std::numbers::pi;

double side_parameter(const Point& p, const Point& from, const Point& to) {
  const Point d = to - from;
  return dot(p - from, d) / norm2(d);
}

void require_off_side_lines(const Triangle& t, const Point& p, const Tolerance& tol) {
  const double eps = t.length_tol(tol);
  for (Vertex v : kVertices) {
    if (t.side_line(v).distance_to(p) <= eps) {
      throw GeometryError(ErrorKind::OnSideLine,
                          std::string("point lies on the line opposite ") + label(v));
    }
  }
}

Circle miquel_circle(const Point& vertex, const Point& p, const Point& q, const Tolerance& tol) {
  try {
    return circumcircle(vertex, p, q, tol);
  } catch (const GeometryError&) {
    throw GeometryError(ErrorKind::DegenerateCircle, "a Miquel circle's defining points are collinear");
  }
}

double unsigned_angle(const Point& p, const Point& apex, const Point& q) {
  const Point u = p - apex;
  const Point v = q - apex;
  return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

}  // namespace

Triad::Triad(const Triangle& host_, double u_, double v_, double w_)
    : host(host_), u(u_), v(v_), w(w_) {
  if (!std::isfinite(u) || !std::isfinite(v) || !std::isfinite(w)) {
    throw std::invalid_argument("triad parameters must be finite");
  }
}

Triad Triad::from_points(const Triangle& host, const Point& x, const Point& y, const Point& z) {
  return Triad(host, side_parameter(x, host.b(), host.c()), side_parameter(y, host.c(), host.a()),
               side_parameter(z, host.a(), host.b()));
}

std::array<Point, 3> pedal_feet(const Triangle& t, const Point& p, const Tolerance& tol) {
  require_off_side_lines(t, p, tol);
  return {t.side_line(Vertex::A).project(p), t.side_line(Vertex::B).project(p),
          t.side_line(Vertex::C).project(p)};
}

Triangle pedal_triangle(const Triangle& t, const Point& p, const Tolerance& tol) {
  return Triangle(t.side_line(Vertex::A).project(p), t.side_line(Vertex::B).project(p),
                  t.side_line(Vertex::C).project(p), tol);
}

PedalResult pedal_triad(const Triangle& t, const Point& p, const Tolerance& tol) {
  const auto feet = pedal_feet(t, p, tol);
  if (t.circumcircle().distance_to(p) < kSimsonBand * t.circumradius()) {
    // Fit the line through the two feet farthest apart.
    int i0 = 0, i1 = 1;
    double best = -1.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const double d = distance(feet[i], feet[j]);
        if (d > best) {
          best = d;
          i0 = i;
          i1 = j;
        }
      }
    }
    SimsonLine s{Line::through(feet[i0], feet[i1]), feet, 0.0};
    for (const Point& f : feet) s.max_deviation = std::max(s.max_deviation, s.line.distance_to(f));
    return s;
  }
  return Triad::from_points(t, feet[0], feet[1], feet[2]);
}

MiquelResult miquel_point(const Triangle& t, const Triad& triad, const Tolerance& tol) {
  const double eps = t.length_tol(tol);
  const auto [x, y, z] = triad.points();
  for (const Point& q : {x, y, z}) {
    for (const Point& vtx : t.vertices()) {
      if (distance(q, vtx) <= eps) {
        throw GeometryError(ErrorKind::DegenerateCircle, "a triad point coincides with a vertex");
      }
    }
  }
  MiquelResult r;
  r.circles = {miquel_circle(t.a(), y, z, tol), miquel_circle(t.b(), z, x, tol),
               miquel_circle(t.c(), x, y, tol)};
  // Both of the first two circles pass through Z; take their other common point.
  r.point = reflect_over_line(Line::through(r.circles[0].center, r.circles[1].center), z);
  r.tangent = distance(r.point, z) <= eps;
  if (r.tangent) r.point = z;
  for (const Circle& c : r.circles) r.residual = std::max(r.residual, c.distance_to(r.point));
  return r;
}

Triad family_member(const Triangle& t, const Point& p, DirectedAngle theta, const Tolerance& tol) {
  if (std::abs(theta.radians()) >= kPi / 2 - tol.angle_eps) {
    throw GeometryError(ErrorKind::ThetaOutOfRange, "rotation must stay below a quarter turn");
  }
  const auto feet = pedal_feet(t, p, tol);
  std::array<Point, 3> pts;
  for (Vertex v : kVertices) {
    const Point& foot = feet[index(v)];
    const Line rotated(p, rotate(foot - p, theta.radians()));
    if (!intersect_lines(rotated, t.side_line(v), pts[index(v)])) {
      throw GeometryError(ErrorKind::ThetaOutOfRange, "rotated line is parallel to a side");
    }
  }
  return Triad::from_points(t, pts[0], pts[1], pts[2]);
}

AngleSextet angle_sextet(const Triangle& t, const Point& p, const Tolerance& tol) {
  const double eps = t.length_tol(tol);
  for (const Point& vtx : t.vertices()) {
    if (distance(p, vtx) <= eps) throw GeometryError(ErrorKind::AtVertex, "point coincides with a vertex");
  }
  const double s = t.circumradius();
  const Point& a = t.a();
  const Point& b = t.b();
  const Point& c = t.c();
  return {directed_angle(p, a, c, tol, s), directed_angle(b, a, p, tol, s),
          directed_angle(p, b, a, tol, s), directed_angle(c, b, p, tol, s),
          directed_angle(p, c, b, tol, s), directed_angle(a, c, p, tol, s)};
}

MiquelAngles miquel_triangle_angles(const Triangle& t, const Point& p, const Tolerance& tol) {
  const AngleSextet s = angle_sextet(t, p, tol);
  return {s.beta1 + s.gamma2, s.gamma1 + s.alpha2, s.alpha1 + s.beta2,
          distance(p, t.circumcenter()) >= t.circumradius()};
}

MiquelAngles measured_angles(const Triangle& xyz, const Tolerance&) {
  return {xyz.directed_angle(Vertex::A), xyz.directed_angle(Vertex::B),
          xyz.directed_angle(Vertex::C), false};
}

MiquelEquationResiduals verify_miquel_equations(const Triangle& t, const Point& p,
                                                const Triad& triad, const Tolerance& tol) {
  const MiquelResult m = miquel_point(t, triad, tol);
  if (distance(m.point, p) > t.length_tol(tol)) {
    throw GeometryError(ErrorKind::NotAMiquelTriad, "the triad's Miquel point differs from P");
  }
  const double s = t.circumradius();
  const auto [x, y, z] = triad.points();
  const DirectedAngle ax = directed_angle(y, x, z, tol, s);
  const DirectedAngle ay = directed_angle(z, y, x, tol, s);
  const DirectedAngle az = directed_angle(x, z, y, tol, s);
  const DirectedAngle bpc = directed_angle(t.b(), p, t.c(), tol, s);
  const DirectedAngle cpa = directed_angle(t.c(), p, t.a(), tol, s);
  const DirectedAngle apb = directed_angle(t.a(), p, t.b(), tol, s);
  const DirectedAngle a = t.directed_angle(Vertex::A);
  const DirectedAngle b = t.directed_angle(Vertex::B);
  const DirectedAngle c = t.directed_angle(Vertex::C);
  return {angular_distance(a + ax, bpc), angular_distance(b + ay, cpa),
          angular_distance(c + az, apb), angular_distance(a + az, apb)};
}

std::vector<SimilarityClass> classify_similarity(const Triangle& t1, const Triangle& t2,
                                                 const Tolerance& tol) {
  static constexpr std::array<std::array<int, 3>, 6> kPerms{
      {{0, 1, 2}, {2, 0, 1}, {1, 2, 0}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}}};
  std::vector<SimilarityClass> out;
  for (const auto& perm : kPerms) {
    SimilarityClass s;
    double cot_sum = 0.0;
    double ratio_lo = INFINITY, ratio_hi = 0.0, ratio_sum = 0.0;
    for (int i = 0; i < 3; ++i) {
      const Vertex v1 = vertex_at(i);
      const Vertex v2 = vertex_at(perm[i]);
      s.correspondence.image[i] = v2;
      s.residual = std::max(s.residual, std::abs(t1.angle(v1) - t2.angle(v2)));
      cot_sum += std::abs(1.0 / std::tan(t1.angle(v1)));
      const double r = t2.side(v2) / t1.side(v1);
      ratio_lo = std::min(ratio_lo, r);
      ratio_hi = std::max(ratio_hi, r);
      ratio_sum += r;
    }
    if (s.residual > tol.angle_eps) continue;
    s.ratio = ratio_sum / 3.0;
    // Law of sines: an angle error e moves a side ratio by about cot(angle) e.
    if ((ratio_hi - ratio_lo) / s.ratio > cot_sum * tol.angle_eps + tol.length_eps_rel) continue;
    const int parity = s.correspondence.is_even() ? 1 : -1;
    s.orientation = t1.orientation() == t2.orientation() * parity ? Orientation::direct
                                                                   : Orientation::inverse;
    out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SimilarityClass& a, const SimilarityClass& b) { return a.residual < b.residual; });
  return out;
}

std::string SpecialRole::name() const {
  const std::string v = std::string("(") + label(vertex) + ")";
  switch (type) {
    case RoleType::circumcenter: return "circumcenter";
    case RoleType::orthocenter: return "orthocenter";
    case RoleType::incenter: return "incenter";
    case RoleType::excenter: return "excenter" + v;
    case RoleType::first_brocard: return "first_brocard";
    case RoleType::second_brocard: return "second_brocard";
    case RoleType::s_role: return "s_role" + v;
    case RoleType::m_role: return "m_role" + v;
    case RoleType::q_role: return "q_role" + v;
    case RoleType::none: return "none";
  }
  return "none";
}

std::vector<SpecialRole> detect_special_roles(const Triangle& t, const Point& p, const Tolerance& tol) {
  const double eps = t.length_tol(tol);
  std::vector<SpecialRole> out;
  auto check = [&](RoleType type, Vertex v, const Point& q) {
    if (distance(p, q) < eps) out.push_back({type, v});
  };
  using CT = CenterType;
  check(RoleType::circumcenter, Vertex::A, t.circumcenter());
  check(RoleType::orthocenter, Vertex::A, classic_center(t, {CT::orthocenter}));
  check(RoleType::incenter, Vertex::A, classic_center(t, {CT::incenter}));
  for (Vertex v : kVertices) check(RoleType::excenter, v, classic_center(t, {CT::excenter, v}));
  check(RoleType::first_brocard, Vertex::A, brocard_point(t, BrocardKind::first));
  check(RoleType::second_brocard, Vertex::A, brocard_point(t, BrocardKind::second));
  for (Vertex v : kVertices) {
    if (!t.is_right_at(v, tol)) check(RoleType::s_role, v, s_point(t, v, tol));
  }
  for (Vertex v : kVertices) {
    if (!t.is_right_at(v, tol)) check(RoleType::m_role, v, m_point(t, v, tol));
  }
  const Point incenter = classic_center(t, {CT::incenter});
  for (Vertex v : kVertices) {
    if (!t.is_isosceles_at(v, tol)) continue;
    const Circle bcl = circumcircle(t[next(v)], t[prev(v)], incenter, tol);
    if (bcl.distance_to(p) < eps) out.push_back({RoleType::q_role, v});
  }
  return out;
}

SpecialRole detect_special_role(const Triangle& t, const Point& p, const Tolerance& tol) {
  const auto roles = detect_special_roles(t, p, tol);
  return roles.empty() ? SpecialRole{} : roles.front();
}

ParityReport containment_parity(const Triangle& t, const Point& p, const Tolerance& tol) {
  require_off_side_lines(t, p, tol);
  if (t.circumcircle().distance_to(p) < kSimsonBand * t.circumradius()) {
    throw GeometryError(ErrorKind::OnCircumcircle, "pedal triangle collapses to a Simson line");
  }
  const auto feet = pedal_feet(t, p, tol);
  const Triangle xyz(feet[0], feet[1], feet[2]);
  const Containment host = triangle_contains(t, p, tol);
  const Containment inner = triangle_contains(xyz, p, tol);
  ParityReport r;
  r.inside_host = host.inside;
  r.inside_miquel = inner.inside;
  r.boundary = host.on_boundary || inner.on_boundary;
  r.agree = r.inside_host == r.inside_miquel;
  r.ray_angle_sum = unsigned_angle(feet[0], p, feet[1]) + unsigned_angle(feet[1], p, feet[2]) +
                    unsigned_angle(feet[2], p, feet[0]);
  return r;
}

}  // namespace miquel
