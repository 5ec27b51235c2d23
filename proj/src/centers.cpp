#include "miquel/centers.hpp"

#include <stdexcept>

namespace miquel {

namespace {

// Circle through `through` that touches the line (at, at + dir) at `at`.
Circle tangent_circle(const Point& through, const Point& at, const Point& dir) {
  const Point n = perp(dir) / norm(dir);
  const Point d = at - through;
  const double t = -norm2(d) / (2.0 * dot(n, d));
  return Circle(at + n * t, std::abs(t));
}

// Second common point of two circles that both pass through `known`.
Point other_common_point(const Circle& c1, const Circle& c2, const Point& known) {
  return reflect_over_line(Line::through(c1.center, c2.center), known);
}

// Vertices relabelled so that v plays the role of A.
struct Labelled {
  Point a, b, c;
};

Labelled relabel(const Triangle& t, Vertex v) { return {t[v], t[next(v)], t[prev(v)]}; }

}  // namespace

std::string CenterKind::symbol() const {
  const std::string suffix = std::string("_") + label(vertex);
  switch (type) {
    case CenterType::circumcenter: return "O";
    case CenterType::orthocenter: return "H";
    case CenterType::centroid: return "G";
    case CenterType::incenter: return "L";
    case CenterType::excenter: return "L" + suffix;
    case CenterType::first_brocard: return "Ω₁";
    case CenterType::second_brocard: return "Ω₂";
    case CenterType::s_point: return "S" + suffix;
    case CenterType::m_point: return "M" + suffix;
  }
  return "?";
}

Point classic_center(const Triangle& t, CenterKind kind) {
  const double a = t.side(Vertex::A);
  const double b = t.side(Vertex::B);
  const double c = t.side(Vertex::C);
  switch (kind.type) {
    case CenterType::circumcenter:
      return t.circumcenter();
    case CenterType::orthocenter:
      // Euler: H - O = (A - O) + (B - O) + (C - O).
      return t.a() + t.b() + t.c() - t.circumcenter() * 2.0;
    case CenterType::centroid:
      return (t.a() + t.b() + t.c()) / 3.0;
    case CenterType::incenter:
      return (t.a() * a + t.b() * b + t.c() * c) / (a + b + c);
    case CenterType::excenter: {
      double w[3] = {a, b, c};
      w[index(kind.vertex)] = -w[index(kind.vertex)];
      return (t.a() * w[0] + t.b() * w[1] + t.c() * w[2]) / (w[0] + w[1] + w[2]);
    }
    default:
      throw std::invalid_argument("classic_center: " + kind.symbol() + " is not a classical center");
  }
}

Point center_of(const Triangle& t, CenterKind kind, const Tolerance& tol) {
  switch (kind.type) {
    case CenterType::first_brocard: return brocard_point(t, BrocardKind::first);
    case CenterType::second_brocard: return brocard_point(t, BrocardKind::second);
    case CenterType::s_point: return s_point(t, kind.vertex, tol);
    case CenterType::m_point: return m_point(t, kind.vertex, tol);
    default: return classic_center(t, kind);
  }
}

Point symmedian_foot(const Triangle& t, Vertex v) {
  const auto [a, b, c] = relabel(t, v);
  const double ab2 = norm2(b - a);
  const double ac2 = norm2(c - a);
  // BD : DC = AB^2 : AC^2
  return b + (c - b) * (ab2 / (ab2 + ac2));
}

Point brocard_point(const Triangle& t, BrocardKind which) {
  const Point& a = t.a();
  const Point& b = t.b();
  const Point& c = t.c();
  if (which == BrocardKind::first) {
    // Through A and B touching BC at B; through B and C touching CA at C.
    const Circle k1 = tangent_circle(a, b, c - b);
    const Circle k2 = tangent_circle(b, c, a - c);
    return other_common_point(k1, k2, b);
  }
  // Through A and C touching BC at C; through B and C touching AB at B.
  const Circle k1 = tangent_circle(a, c, b - c);
  const Circle k2 = tangent_circle(c, b, a - b);
  return other_common_point(k1, k2, c);
}

Point s_point(const Triangle& t, Vertex v, const Tolerance& tol) {
  if (t.is_right_at(v, tol)) {
    throw GeometryError(ErrorKind::RightAngleDegenerate,
                        std::string("S-point undefined for a right angle at ") + label(v));
  }
  const auto [a, b, c] = relabel(t, v);
  const Point& o = t.circumcenter();
  Circle boc;
  try {
    boc = circumcircle(b, c, o, tol);
  } catch (const GeometryError&) {
    throw GeometryError(ErrorKind::RightAngleDegenerate,
                        std::string("circumcenter lies on the side opposite ") + label(v));
  }
  const Line symmedian = Line::through(a, symmedian_foot(t, v));
  const double o_side = orient2d(b, c, o);
  const auto hits = line_circle_intersections(symmedian, boc, tol);
  const Point* best = nullptr;
  double best_score = 0.0;
  for (const Point& p : hits) {
    const double score = orient2d(b, c, p) * o_side;
    if (best == nullptr || score > best_score) {
      best = &p;
      best_score = score;
    }
  }
  if (best == nullptr) {
    throw GeometryError(ErrorKind::RightAngleDegenerate, "symmedian misses circle(B, C, O)");
  }
  return *best;
}

MPointConstruction m_point_construction(const Triangle& t, Vertex v, const Tolerance& tol) {
  if (t.is_right_at(v, tol)) {
    throw GeometryError(ErrorKind::RightAngleDegenerate,
                        std::string("M-point undefined for a right angle at ") + label(v));
  }
  const auto [a, b, c] = relabel(t, v);
  MPointConstruction out;
  out.e = midpoint(b, c);
  const Line median = Line::through(a, out.e);
  if (!t.is_obtuse_at(v)) {
    // F: second hit of the median with the circumcircle; E is the midpoint of M F.
    out.f = second_intersection(median, t.circumcircle(), a, tol).point;
    out.m = out.e * 2.0 - out.f;
  } else {
    // ABFC is a parallelogram; M is the second hit of the median with circle(F, B, C).
    out.obtuse = true;
    out.f = b + c - a;
    const Circle fbc = circumcircle(out.f, b, c, tol);
    out.m = second_intersection(median, fbc, out.f, tol).point;
  }
  return out;
}

Point m_point(const Triangle& t, Vertex v, const Tolerance& tol) {
  return m_point_construction(t, v, tol).m;
}

Point isogonal_conjugate(const Triangle& t, const Point& p, const Tolerance& tol) {
  const double eps = t.length_tol(tol);
  for (Vertex v : kVertices) {
    if (t.side_line(v).distance_to(p) <= eps) {
      throw GeometryError(ErrorKind::OnSideLine, "point lies on a side line");
    }
  }
  if (t.circumcircle().distance_to(p) <= eps) {
    throw GeometryError(ErrorKind::NoFiniteConjugate, "conjugate of a circumcircle point is at infinity");
  }
  // Barycentrics (u : v : w) map to (a^2/u : b^2/v : c^2/w); scaled by uvw.
  const double u = orient2d(p, t.b(), t.c());
  const double v = orient2d(p, t.c(), t.a());
  const double w = orient2d(p, t.a(), t.b());
  const double a2 = t.side(Vertex::A) * t.side(Vertex::A);
  const double b2 = t.side(Vertex::B) * t.side(Vertex::B);
  const double c2 = t.side(Vertex::C) * t.side(Vertex::C);
  const double wa = a2 * v * w;
  const double wb = b2 * w * u;
  const double wc = c2 * u * v;
  const Point g = (t.a() + t.b() + t.c()) / 3.0;
  const Point q = ((t.a() - g) * wa + (t.b() - g) * wb + (t.c() - g) * wc) / (wa + wb + wc);
  return g + q;
}

Point inverse_in_circumcircle(const Triangle& t, const Point& p, const Tolerance& tol) {
  return invert_point(t.circumcircle(), p, tol);
}

std::string CatalogEntry::label() const {
  return inverted ? "inv(" + kind.symbol() + ")" : kind.symbol();
}

std::vector<CatalogEntry> eleven_point_catalog(const Triangle& t, const Tolerance& band) {
  if (!t.is_scalene(band)) {
    throw GeometryError(ErrorKind::NotScalene, "catalog requires a scalene triangle");
  }
  if (t.is_right(band)) {
    throw GeometryError(ErrorKind::RightTriangle, "catalog requires a non-right triangle");
  }
  using CT = CenterType;
  const struct {
    CenterKind kind;
    const char* perm;
  } interior[] = {
      {{CT::circumcenter, Vertex::A}, "XYZ"},  {{CT::first_brocard, Vertex::A}, "ZXY"},
      {{CT::second_brocard, Vertex::A}, "YZX"}, {{CT::s_point, Vertex::A}, "XZY"},
      {{CT::s_point, Vertex::B}, "ZYX"},        {{CT::s_point, Vertex::C}, "YXZ"},
  };
  std::vector<CatalogEntry> out;
  out.reserve(11);
  for (const auto& e : interior) {
    out.push_back({e.kind, false, center_of(t, e.kind), Correspondence::parse(e.perm)});
  }
  // The circumcenter has no finite inverse.
  for (std::size_t i = 1; i < 6; ++i) {
    CatalogEntry inv = out[i];
    inv.inverted = true;
    inv.location = inverse_in_circumcircle(t, out[i].location);
    out.push_back(inv);
  }
  return out;
}

}  // namespace miquel
