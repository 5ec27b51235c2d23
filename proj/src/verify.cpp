#include "miquel/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "miquel/centers.hpp"
#include "miquel/chains.hpp"
#include "miquel/miquel.hpp"
#include "miquel/sampling.hpp"

namespace miquel {

namespace {

constexpr double kPi = std::numbers::pi;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string sci(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// Everything needed to rebuild one random instance.
class Witness {
 public:
  Witness(std::string suite, std::uint64_t seed, int trial)
      : head_(suite + " seed " + std::to_string(seed) + " trial " + std::to_string(trial)) {}

  void triangle(const Triangle& t) {
    put("A", t.a());
    put("B", t.b());
    put("C", t.c());
  }
  void put(const std::string& name, const Point& p) {
    set(name, "(" + g17(p.x) + ", " + g17(p.y) + ")");
  }
  void put(const std::string& name, double v) { set(name, g17(v)); }
  void put(const std::string& name, const std::string& v) { set(name, v); }

  std::string str() const {
    std::string s = head_ + ":";
    for (const auto& [k, v] : fields_) s += " " + k + "=" + v;
    return s;
  }

 private:
  void set(const std::string& name, const std::string& v) {
    for (auto& f : fields_) {
      if (f.first == name) {
        f.second = v;
        return;
      }
    }
    fields_.emplace_back(name, v);
  }

  std::string head_;
  std::vector<std::pair<std::string, std::string>> fields_;
};

class Suite {
 public:
  Suite(std::string name, std::uint64_t seed, int trials)
      : name_(std::move(name)), seed_(seed), trials_(trials) {
    declare("constructions", 0.5);
  }

  Claim& declare(const std::string& name, double threshold, bool asserted = true) {
    Claim c;
    c.name = name;
    c.threshold = threshold;
    c.asserted = asserted;
    claims_.push_back(c);
    return claims_.back();
  }

  Claim& operator[](const std::string& name) {
    for (Claim& c : claims_) {
      if (c.name == name) return c;
    }
    throw std::logic_error("undeclared claim " + name);
  }

  void check(const std::string& name, double residual, const Witness& w) {
    (*this)[name].record(residual, [&] { return w.str(); });
  }
  void check(const std::string& name, bool ok, const Witness& w) { check(name, ok ? 0.0 : 1.0, w); }

  template <class Body>
  void each(Body&& body) {
    for (int i = 0; i < trials_; ++i) {
      Rng rng(seed_, name_, static_cast<std::uint64_t>(i));
      Witness w(name_, seed_, i);
      try {
        body(rng, w, i);
        check("constructions", 0.0, w);
      } catch (const GeometryError& e) {
        w.put("error", e.what());
        check("constructions", 1.0, w);
      } catch (const std::exception& e) {
        w.put("error", e.what());
        check("constructions", 1.0, w);
      }
    }
  }

  VerifyReport report() && {
    VerifyReport r;
    r.suite = name_;
    r.trials = trials_;
    r.seed = seed_;
    r.claims = std::move(claims_);
    return r;
  }

 private:
  std::string name_;
  std::uint64_t seed_;
  int trials_;
  std::vector<Claim> claims_;
};

// ---------------------------------------------------------------- helpers

double rel(const Point& p, const Point& q, double scale) { return distance(p, q) / scale; }

// Interior-angle mismatch under a fixed vertex correspondence.
double correspondence_residual(const Triangle& t1, const Triangle& t2, const Correspondence& c) {
  double r = 0.0;
  for (Vertex v : kVertices) r = std::max(r, std::abs(t1.angle(v) - t2.angle(c.image[index(v)])));
  return r;
}

// Similarity up to any correspondence: compare sorted angle multisets.
double shape_residual(const Triangle& t1, const Triangle& t2) {
  std::array<double, 3> a{t1.angle(Vertex::A), t1.angle(Vertex::B), t1.angle(Vertex::C)};
  std::array<double, 3> b{t2.angle(Vertex::A), t2.angle(Vertex::B), t2.angle(Vertex::C)};
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double r = 0.0;
  for (int i = 0; i < 3; ++i) r = std::max(r, std::abs(a[i] - b[i]));
  return r;
}

bool clear_of_vertices(const Triangle& t, const Point& p, double fraction) {
  for (Vertex v : kVertices) {
    if (distance(t[v], p) < fraction * t.circumradius()) return false;
  }
  return true;
}

// Interior point of the circumdisk, away from side lines and vertices.
Point generic_interior(Rng& rng, const Triangle& t) {
  for (;;) {
    const Point p = random_in_circumdisk(rng, t, 0.95);
    if (side_clearance(t, p) > 0.02 && clear_of_vertices(t, p, 0.05)) return p;
  }
}

Point nearest_l_center(const Triangle& t, const Point& p) {
  Point best = classic_center(t, {CenterType::incenter});
  for (Vertex v : kVertices) {
    const Point e = classic_center(t, {CenterType::excenter, v});
    if (distance(e, p) < distance(best, p)) best = e;
  }
  return best;
}

std::string role_sequence(const ChainRecord& rec) {
  std::string s;
  for (const SpecialRole& r : rec.roles) s += (s.empty() ? "" : ",") + r.name();
  return s;
}

std::vector<DirectedAngle> random_schedule(Rng& rng, int k, double max_abs) {
  std::vector<DirectedAngle> out;
  for (int i = 0; i < k; ++i) out.push_back(DirectedAngle::from_radians(rng.uniform(-max_abs, max_abs)));
  return out;
}

const TriangleShape kGeneric{10.0, 0.0, 0.0, AngleClass::any};
const TriangleShape kChainSeed{15.0, 2.0, 5.0, AngleClass::any};
constexpr int kChainSteps = 9;

// ----------------------------------------------------------------- suites

void theorem1(Suite& s) {
  s.declare("miquel-concurrency", 1e-8);
  s.declare("second-circle-pair", 1e-8);
  s.each([&](Rng& rng, Witness& w, int) {
    const Triangle t = random_triangle(rng, {10.0, 1.0, 0.0, AngleClass::any});
    auto param = [&] {
      for (;;) {
        const double x = rng.uniform(-1.0, 2.0);
        if (std::abs(x) > 0.02 && std::abs(x - 1.0) > 0.02) return x;
      }
    };
    const Triad triad(t, param(), param(), param());
    w.triangle(t);
    w.put("u", triad.u);
    w.put("v", triad.v);
    w.put("w", triad.w);
    const MiquelResult m = miquel_point(t, triad);
    const double R = t.circumradius();
    s.check("miquel-concurrency", m.residual / R, w);
    // Independent route: circles (B, Z, X) and (C, X, Y) meet at X and M.
    const auto hits = circle_circle_intersections(m.circles[1], m.circles[2]);
    if (hits.empty()) {
      s.check("second-circle-pair", INFINITY, w);
      return;
    }
    Point other = hits.front();
    for (const Point& h : hits) {
      if (distance(h, triad.x()) > distance(other, triad.x())) other = h;
    }
    s.check("second-circle-pair", rel(other, m.point, R), w);
  });
}

void theorem2(Suite& s) {
  s.declare("A+X=BPC", 1e-9);
  s.declare("B+Y=CPA", 1e-9);
  s.declare("C+Z=APB", 1e-9);
  s.declare("printed A+Z=APB", 1e-9, false);
  s.declare("miquel-point-is-P", 1e-8);
  int printed_off = 0;
  s.each([&](Rng& rng, Witness& w, int) {
    const Triangle t = random_triangle(rng, kGeneric);
    const Point p = generic_interior(rng, t);
    const double theta = rng.uniform(-1.2, 1.2);
    w.triangle(t);
    w.put("P", p);
    w.put("theta", theta);
    const Triad triad = family_member(t, p, DirectedAngle::from_radians(theta));
    s.check("miquel-point-is-P", rel(miquel_point(t, triad).point, p, t.circumradius()), w);
    const MiquelEquationResiduals r = verify_miquel_equations(t, p, triad);
    s.check("A+X=BPC", r.bpc, w);
    s.check("B+Y=CPA", r.cpa, w);
    s.check("C+Z=APB", r.apb, w);
    s.check("printed A+Z=APB", r.printed_apb, w);
    if (r.printed_apb > 1e-6) ++printed_off;
  });
  s["printed A+Z=APB"].note =
      "off by more than 1e-6 in " + std::to_string(printed_off) + " trials";
}

void corollary1(Suite& s) {
  s.declare("family-similar-to-pedal", 1e-8);
  s.declare("ratio-is-sec-theta", 1e-8);
  s.declare("miquel-point-is-P", 1e-8);
  s.each([&](Rng& rng, Witness& w, int) {
    const Triangle t = random_triangle(rng, kGeneric);
    const Point p = generic_interior(rng, t);
    w.triangle(t);
    w.put("P", p);
    const Triangle pedal = pedal_triangle(t, p);
    for (int j = 0; j < 5; ++j) {
      const double theta = rng.uniform(-1.3, 1.3);
      w.put("theta", theta);
      const Triad triad = family_member(t, p, DirectedAngle::from_radians(theta));
      const Triangle member = triad.triangle();
      s.check("family-similar-to-pedal", correspondence_residual(pedal, member, {}), w);
      const double ratio = member.side(Vertex::A) / pedal.side(Vertex::A);
      s.check("ratio-is-sec-theta", std::abs(ratio * std::cos(theta) - 1.0), w);
      s.check("miquel-point-is-P", rel(miquel_point(t, triad).point, p, t.circumradius()), w);
    }
  });
}

void lemma1(Suite& s) {
  s.declare("containment-parity", 0.5);
  s.declare("ray-angle-sum-inside", 1e-9);
  s.declare("outside-host-sampled", 0.5);
  int boundary = 0, outside = 0;
  s.each([&](Rng& rng, Witness& w, int i) {
    const Triangle t = random_triangle(rng, kGeneric);
    Point p;
    for (;;) {
      if (i % 2 == 0) {
        p = random_in_triangle(rng, t);
      } else if (i % 4 == 1) {
        p = random_in_circumdisk(rng, t, 0.999);
        if (triangle_contains(t, p).inside) continue;
      } else {
        p = random_in_annulus(rng, t, 1.001, 3.0);
      }
      if (side_clearance(t, p) > 1e-3 && t.circumcircle().distance_to(p) > 1e-3 * t.circumradius()) {
        break;
      }
    }
    w.triangle(t);
    w.put("P", p);
    const ParityReport r = containment_parity(t, p);
    if (!r.inside_host) ++outside;
    if (r.boundary) {
      ++boundary;
      return;
    }
    s.check("containment-parity", r.agree, w);
    if (r.inside_miquel) s.check("ray-angle-sum-inside", std::abs(r.ray_angle_sum - 2.0 * kPi), w);
  });
  s["outside-host-sampled"].record(outside > 0 ? 0.0 : 1.0, [] { return std::string("no exterior sample"); });
  s["containment-parity"].note = std::to_string(boundary) + " boundary cases skipped";
}

void lemma2(Suite& s) {
  s.declare("pedal-angles", 1e-8);
  s.declare("family-angles", 1e-8);
  s.declare("exterior-extrapolation", 1e-8, false);
  s.each([&](Rng& rng, Witness& w, int) {
    const Triangle t = random_triangle(rng, kGeneric);
    const Point p = generic_interior(rng, t);
    w.triangle(t);
    w.put("P", p);
    const MiquelAngles predicted = miquel_triangle_angles(t, p);
    auto mismatch = [&](const Triangle& xyz) {
      const MiquelAngles m = measured_angles(xyz);
      return std::max({angular_distance(m.x, predicted.x), angular_distance(m.y, predicted.y),
                       angular_distance(m.z, predicted.z)});
    };
    s.check("pedal-angles", mismatch(pedal_triangle(t, p)), w);
    const double theta = rng.uniform(-1.2, 1.2);
    w.put("theta", theta);
    s.check("family-angles",
            mismatch(family_member(t, p, DirectedAngle::from_radians(theta)).triangle()), w);

    Point q;
    do {
      q = random_in_annulus(rng, t, 1.05, 3.0);
    } while (side_clearance(t, q) < 0.02);
    w.put("Q", q);
    const MiquelAngles ex = miquel_triangle_angles(t, q);
    const MiquelAngles m = measured_angles(pedal_triangle(t, q));
    s.check("exterior-extrapolation",
            std::max({angular_distance(m.x, ex.x), angular_distance(m.y, ex.y),
                      angular_distance(m.z, ex.z)}),
            w);
  });
  s["exterior-extrapolation"].note = "P outside the circumcircle; flagged, not asserted";
}

void theorem3(Suite& s) {
  s.declare("inverse-pedal-similar", 1e-7);
  s.declare("opposite-orientation", 0.5);
  s.each([&](Rng& rng, Witness& w, int) {
    const Triangle t = random_triangle(rng, kGeneric);
    Point p, q;
    for (;;) {
      p = random_in_annulus(rng, t, 0.05, 3.0);
      if (std::abs(distance(p, t.circumcenter()) / t.circumradius() - 1.0) < 0.05) continue;
      if (side_clearance(t, p) < 0.02 || !clear_of_vertices(t, p, 0.05)) continue;
      q = inverse_in_circumcircle(t, p);
      if (side_clearance(t, q) < 0.02 || !clear_of_vertices(t, q, 0.05)) continue;
      break;
    }
    w.triangle(t);
    w.put("P", p);
    const Triangle tp = pedal_triangle(t, p);
    const Triangle tq = pedal_triangle(t, q);
    s.check("inverse-pedal-similar", correspondence_residual(tp, tq, {}), w);
    s.check("opposite-orientation", tp.orientation() != tq.orientation(), w);
  });
}

void theorem4(Suite& s) {
  s.declare("eleven-distinct-points", 0.5);
  s.declare("interior-angle-match", 1e-7);
  s.declare("exterior-angle-match", 1e-7);
  s.declare("orientation", 0.0, false);
  std::vector<std::pair<std::string, int>> direct;  // catalog order
  s.each([&](Rng& rng, Witness& w, int) {
    const Triangle t = random_triangle(rng, {5.0, 5.0, 20.0, AngleClass::any});
    w.triangle(t);
    const auto cat = eleven_point_catalog(t);
    const double R = t.circumradius();
    bool ok = cat.size() == 11;
    for (std::size_t i = 0; ok && i < cat.size(); ++i) {
      const bool inside = distance(cat[i].location, t.circumcenter()) < R;
      ok = inside == (i < 6);
      for (std::size_t j = 0; ok && j < i; ++j) ok = rel(cat[i].location, cat[j].location, R) > 1e-6;
    }
    s.check("eleven-distinct-points", ok, w);
    for (std::size_t i = 0; i < cat.size(); ++i) {
      const CatalogEntry& e = cat[i];
      w.put("point", e.label());
      w.put("P", e.location);
      const Triangle xyz = pedal_triangle(t, e.location);
      s.check(i < 6 ? "interior-angle-match" : "exterior-angle-match",
              correspondence_residual(t, xyz, e.expected), w);
      // The matching map is orientation preserving when the labelled
      // orientations agree and the correspondence is even, or neither.
      if (direct.size() < cat.size()) direct.emplace_back(e.label(), 0);
      if ((xyz.orientation() == t.orientation()) == e.expected.is_even()) ++direct[i].second;
    }
  });
  std::string note;
  for (const auto& [label, n] : direct) {
    note += (note.empty() ? "" : "; ") + label + " direct " + std::to_string(n) + "/" +
            std::to_string(s["constructions"].checked);
  }
  s["orientation"].note = note;
}

void theorem5(Suite& s) {
  s.declare("O->orthocenter", 1e-8);
  s.each([&](Rng& rng, Witness& w, int) {
    const Triangle t = random_triangle(rng, {10.0, 0.0, 2.0, AngleClass::any});
    const Point p = t.circumcenter();
    w.triangle(t);
    const Triangle xyz = pedal_triangle(t, p);
    s.check("O->orthocenter", rel(classic_center(xyz, {CenterType::orthocenter}), p, t.circumradius()), w);
  });
}

void theorem6(Suite& s) {
  s.declare("H->incenter (acute)", 1e-8);
  s.declare("H->excenter (obtuse)", 1e-8);
  s.declare("role-detected", 0.5);
  s.each([&](Rng& rng, Witness& w, int i) {
    const bool acute = i % 2 == 0;
    const Triangle t = random_triangle(
        rng, {10.0, 0.0, 5.0, acute ? AngleClass::acute : AngleClass::obtuse_at_a});
    const Point h = classic_center(t, {CenterType::orthocenter});
    w.triangle(t);
    const Triangle xyz = pedal_triangle(t, h);
    const double R = t.circumradius();
    // X sits on the side opposite the obtuse vertex A.
    const CenterKind expect = acute ? CenterKind{CenterType::incenter}
                                    : CenterKind{CenterType::excenter, Vertex::A};
    s.check(acute ? "H->incenter (acute)" : "H->excenter (obtuse)",
            rel(classic_center(xyz, expect), h, R), w);
    const SpecialRole role = detect_special_role(xyz, h, {1e-8, 1e-8});
    const SpecialRole want = acute ? SpecialRole{RoleType::incenter}
                                   : SpecialRole{RoleType::excenter, Vertex::A};
    w.put("role", role.name());
    s.check("role-detected", role == want, w);
  });
}

void theorem7(Suite& s) {
  s.declare("incenter->circumcenter", 1e-8);
  s.declare("excenter->circumcenter", 1e-8);
  s.each([&](Rng& rng, Witness& w, int) {
    const Triangle t = random_triangle(rng, kGeneric);
    w.triangle(t);
    const double R = t.circumradius();
    const Point l = classic_center(t, {CenterType::incenter});
    s.check("incenter->circumcenter", rel(pedal_triangle(t, l).circumcenter(), l, R), w);
    for (Vertex v : kVertices) {
      const Point e = classic_center(t, {CenterType::excenter, v});
      w.put("P", e);
      s.check("excenter->circumcenter", rel(pedal_triangle(t, e).circumcenter(), e, R), w);
    }
  });
}

void theorem8(Suite& s) {
  s.declare("first-brocard-angles", 1e-8);
  s.declare("second-brocard-angles", 1e-8);
  s.declare("brocard-positions", 1e-8);
  s.each([&](Rng& rng, Witness& w, int) {
    const Triangle t = random_triangle(rng, kGeneric);
    w.triangle(t);
    const double R = t.circumradius();
    for (BrocardKind kind : {BrocardKind::first, BrocardKind::second}) {
      const bool first = kind == BrocardKind::first;
      const Point p = brocard_point(t, kind);
      w.put("P", p);
      const Triangle xyz = pedal_triangle(t, p);
      const AngleSextet a = angle_sextet(xyz, p);
      const auto [u, v, x] = first ? std::array{a.alpha2, a.beta2, a.gamma2}
                                   : std::array{a.alpha1, a.beta1, a.gamma1};
      s.check(first ? "first-brocard-angles" : "second-brocard-angles",
              std::max(angular_distance(u, v), angular_distance(v, x)), w);
      s.check("brocard-positions", rel(brocard_point(xyz, kind), p, R), w);
    }
  });
}

void theorem9(Suite& s) {
  s.declare("S_A-on-median-of-X", 1e-7);
  s.declare("acute: M_X E = E F", 1e-7);
  s.declare("obtuse: X E = E F", 1e-7);
  s.declare("S_A=M_X", 1e-7);
  s.each([&](Rng& rng, Witness& w, int i) {
    const bool acute = i % 2 == 0;
    const Triangle t = random_triangle(
        rng, {10.0, 0.0, 5.0, acute ? AngleClass::acute_at_a : AngleClass::obtuse_at_a});
    w.triangle(t);
    const double R = t.circumradius();
    const Point p = s_point(t, Vertex::A);
    const Triangle xyz = pedal_triangle(t, p);
    const Point x = xyz.a(), y = xyz.b(), z = xyz.c();
    const Point e = midpoint(y, z);
    s.check("S_A-on-median-of-X", Line::through(x, e).distance_to(p) / R, w);
    if (acute) {
      const Point f = second_intersection(Line::through(x, p), xyz.circumcircle(), x).point;
      s.check("acute: M_X E = E F", rel(p, e * 2.0 - f, R), w);
    } else {
      // XP extended meets the Miquel circle through A again at F.
      const Point f =
          second_intersection(Line::through(x, p), circumcircle(t.a(), y, z), p).point;
      s.check("obtuse: X E = E F", rel(f, e * 2.0 - x, R), w);
    }
    s.check("S_A=M_X", rel(m_point(xyz, Vertex::A), p, R), w);
  });
}

void theorem10(Suite& s) {
  s.declare("isosceles: ZYX = XZY = A", 1e-8);
  s.declare("on-circle-YZL", 1e-8);
  s.declare("XY-XZ-tangent", 1e-7);
  s.declare("arc-side", 0.5);
  s.declare("containment", 0.5);
  s.each([&](Rng& rng, Witness& w, int i) {
    const bool acute = i % 2 == 0;
    const Triangle t = random_triangle(
        rng, {10.0, 0.0, 5.0, acute ? AngleClass::acute : AngleClass::obtuse_at_a});
    w.triangle(t);
    const double R = t.circumradius();
    const Point p = m_point(t, Vertex::A);
    const Triangle xyz = pedal_triangle(t, p);
    const DirectedAngle a = t.directed_angle(Vertex::A);
    s.check("isosceles: ZYX = XZY = A",
            std::max(angular_distance(xyz.directed_angle(Vertex::B), a),
                     angular_distance(xyz.directed_angle(Vertex::C), a)),
            w);
    const Point l = classic_center(xyz, {CenterType::incenter});
    const Circle c = circumcircle(xyz.b(), xyz.c(), l);
    s.check("on-circle-YZL", c.distance_to(p) / R, w);
    const double tangency =
        std::max(std::abs(Line::through(xyz.a(), xyz.b()).distance_to(c.center) - c.radius),
                 std::abs(Line::through(xyz.a(), xyz.c()).distance_to(c.center) - c.radius));
    s.check("XY-XZ-tangent", tangency / R, w);
    const Line yz = Line::through(xyz.b(), xyz.c());
    const bool same_side = (yz.signed_distance(p) > 0) == (yz.signed_distance(l) > 0);
    s.check("arc-side", same_side == acute, w);
    s.check("containment", triangle_contains(xyz, p).inside == acute, w);
  });
}

void theorem11(Suite& s) {
  s.declare("P=S_X", 1e-7);
  s.declare("role-detected", 0.5);
  int skipped = 0;
  s.each([&](Rng& rng, Witness& w, int) {
    const Triangle t = random_isosceles(rng, 20.0, 150.0);
    w.triangle(t);
    const double R = t.circumradius();
    const Point l = classic_center(t, {CenterType::incenter});
    const Circle arc = circumcircle(t.b(), t.c(), l);
    auto ang = [&](const Point& q) { return std::atan2(q.y - arc.center.y, q.x - arc.center.x); };
    auto wrap = [](double x) { return x - 2.0 * kPi * std::floor(x / (2.0 * kPi)); };
    const double tb = ang(t.b());
    const double d = wrap(ang(t.c()) - tb);
    const double sweep = wrap(ang(l) - tb) < d ? d : d - 2.0 * kPi;
    const Point p = arc.at(tb + rng.uniform(0.03, 0.97) * sweep);
    w.put("P", p);
    const Triangle xyz = pedal_triangle(t, p);
    if (xyz.is_right_at(Vertex::A, {1e-6, 1e-6})) {
      ++skipped;
      return;
    }
    s.check("P=S_X", rel(s_point(xyz, Vertex::A), p, R), w);
    const auto roles = detect_special_roles(xyz, p, {1e-7, 1e-7});
    const SpecialRole want{RoleType::s_role, Vertex::A};
    s.check("role-detected", std::find(roles.begin(), roles.end(), want) != roles.end(), w);
  });
  s["P=S_X"].note = std::to_string(skipped) + " right-angled Miquel triangles skipped";
}

void theorem12(Suite& s) {
  s.declare("isogonal(S_v)=M_v", 1e-8);
  s.declare("S_v-angles", 1e-8);
  s.declare("obtuse-vertex-covered", 0.5);
  int obtuse = 0;
  s.each([&](Rng& rng, Witness& w, int i) {
    const Triangle t = random_triangle(
        rng, {10.0, 0.0, 5.0, i % 2 == 0 ? AngleClass::any : AngleClass::obtuse_at_a});
    w.triangle(t);
    const double R = t.circumradius();
    for (Vertex v : kVertices) {
      w.put("vertex", std::string(1, label(v)));
      if (t.is_obtuse_at(v)) ++obtuse;
      const Point sv = s_point(t, v);
      const Point mv = m_point(t, v);
      s.check("isogonal(S_v)=M_v", rel(isogonal_conjugate(t, sv), mv, R), w);
      const Point a = t[v], b = t[next(v)], c = t[prev(v)];
      const DirectedAngle av = t.directed_angle(v);
      s.check("S_v-angles",
              std::max({angular_distance(directed_angle(b, sv, c), av * 2),
                        angular_distance(directed_angle(c, sv, a), -av),
                        angular_distance(directed_angle(a, sv, b), -av)}),
              w);
    }
  });
  s["obtuse-vertex-covered"].record(obtuse > 0 ? 0.0 : 1.0, [] { return std::string("no obtuse vertex"); });
  s["obtuse-vertex-covered"].note = std::to_string(obtuse) + " obtuse vertices";
}

void theorem13(Suite& s) {
  s.declare("CBT=QBA, BAQ=TAC, ACT=QCB", 1e-8);
  s.declare("isogonal(Q)=T", 1e-8);
  s.each([&](Rng& rng, Witness& w, int) {
    const Triangle t = random_isosceles(rng, 20.0, 150.0);
    w.triangle(t);
    const double R = t.circumradius();
    const Circle c = circumcircle(t.b(), t.c(), classic_center(t, {CenterType::incenter}));
    Point q;
    do {
      q = c.at(rng.uniform(0.0, 2.0 * kPi));
    } while (side_clearance(t, q) < 0.01 || !clear_of_vertices(t, q, 0.02));
    const Point tq = reflect_over_line(Line::through(t.a(), midpoint(t.b(), t.c())), q);
    w.put("Q", q);
    const Point a = t.a(), b = t.b(), cc = t.c();
    s.check("CBT=QBA, BAQ=TAC, ACT=QCB",
            std::max({angular_distance(directed_angle(cc, b, tq), directed_angle(q, b, a)),
                      angular_distance(directed_angle(b, a, q), directed_angle(tq, a, cc)),
                      angular_distance(directed_angle(a, cc, tq), directed_angle(q, cc, b))}),
            w);
    s.check("isogonal(Q)=T", rel(isogonal_conjugate(t, q), tq, R), w);
  });
}

Point chain_point(const Triangle& t, int kind, Rng& rng) {
  switch (kind) {
    case 0: return t.circumcenter();
    case 1: return classic_center(t, {CenterType::orthocenter});
    case 2: return classic_center(t, {CenterType::incenter});
    case 3: return brocard_point(t, BrocardKind::first);
    default:
      for (;;) {
        const Point p = random_in_triangle(rng, t);
        if (side_clearance(t, p) > 0.02) return p;
      }
  }
}

void theorem14(Suite& s) {
  s.declare("mod3 (pedal chains)", 1e-6);
  s.declare("mod3 (rotated chains)", 1e-6);
  s.declare("generic cross-class similarity", 0.0, false);
  int generic = 0, generic_similar = 0;
  s.each([&](Rng& rng, Witness& w, int i) {
    const Triangle t = random_triangle(rng, kChainSeed);
    const int kind = i % 5;
    const Point p = chain_point(t, kind, rng);
    w.triangle(t);
    w.put("P", p);
    const ChainRecord pedal = iterate_chain(t, p, kChainSteps);
    const Mod3Report m0 = check_mod3_similarity(pedal);
    s.check("mod3 (pedal chains)", m0.holds ? m0.max_residual : INFINITY, w);
    const auto schedule = random_schedule(rng, kChainSteps, 1.0);
    w.put("schedule", "random");
    const Mod3Report m1 = check_mod3_similarity(iterate_chain(t, p, kChainSteps, schedule));
    s.check("mod3 (rotated chains)", m1.holds ? m1.max_residual : INFINITY, w);
    if (kind == 4) {
      ++generic;
      if (!m0.cross_class_similar.empty()) ++generic_similar;
    }
  });
  s["generic cross-class similarity"].note = std::to_string(generic_similar) + " of " +
                                             std::to_string(generic) +
                                             " generic chains had a cross-class similar pair";
}

void theorem15(Suite& s) {
  s.declare("brocard-fixed", 1e-7);
  s.declare("brocard: all steps similar", 1e-6);
  s.declare("O/S_v: k = 0,1 (mod 3) similar", 1e-6);
  s.declare("H/M_v: k = 2,0 (mod 3) similar", 1e-6);
  s.each([&](Rng& rng, Witness& w, int i) {
    const Triangle t = random_triangle(rng, kChainSeed);
    const Vertex v = vertex_at(static_cast<int>(rng.bits() % 3));
    const auto schedule =
        i % 2 == 0 ? std::vector<DirectedAngle>{} : random_schedule(rng, kChainSteps, 1.0);
    w.triangle(t);
    w.put("schedule", i % 2 == 0 ? "pedal" : "random");
    struct Case {
      const char* name;
      Point p;
      int group;  // 0 Brocard first, 1 Brocard second, 2 O/S, 3 H/M
    };
    const Case cases[] = {
        {"first Brocard", brocard_point(t, BrocardKind::first), 0},
        {"second Brocard", brocard_point(t, BrocardKind::second), 1},
        {"O", t.circumcenter(), 2},
        {"S_v", s_point(t, v), 2},
        {"H", classic_center(t, {CenterType::orthocenter}), 3},
        {"M_v", m_point(t, v), 3},
    };
    for (const Case& c : cases) {
      w.put("point", c.name);
      w.put("vertex", std::string(1, label(v)));
      w.put("P", c.p);
      const ChainRecord rec = iterate_chain(t, c.p, kChainSteps, schedule);
      for (int k = 0; k <= kChainSteps; ++k) {
        const Triangle& tk = rec.triangles[static_cast<std::size_t>(k)];
        w.put("k", static_cast<double>(k));
        const double shape = shape_residual(t, tk);
        if (c.group < 2) {
          const BrocardKind kind = c.group == 0 ? BrocardKind::first : BrocardKind::second;
          s.check("brocard-fixed", rel(brocard_point(tk, kind), c.p, tk.circumradius()), w);
          s.check("brocard: all steps similar", shape, w);
        } else if (c.group == 2 && k % 3 != 2) {
          s.check("O/S_v: k = 0,1 (mod 3) similar", shape, w);
        } else if (c.group == 3 && k % 3 != 1) {
          s.check("H/M_v: k = 2,0 (mod 3) similar", shape, w);
        }
      }
    }
  });
}

void corollary4(Suite& s) {
  s.declare("O->H->L cycle", 0.5);
  s.declare("O->H->L positions", 1e-6);
  s.declare("S->M->Q cycle", 0.5);
  s.declare("S->M->Q positions", 1e-6);
  s.each([&](Rng& rng, Witness& w, int i) {
    const Triangle t = random_triangle(rng, kChainSeed);
    const Vertex v = vertex_at(static_cast<int>(rng.bits() % 3));
    const auto schedule =
        i % 2 == 0 ? std::vector<DirectedAngle>{} : random_schedule(rng, kChainSteps, 1.0);
    w.triangle(t);
    w.put("schedule", i % 2 == 0 ? "pedal" : "random");

    const Point o = t.circumcenter();
    const ChainRecord oc = iterate_chain(t, o, kChainSteps, schedule);
    bool ok = true;
    double pos = 0.0;
    for (int k = 0; k <= kChainSteps; ++k) {
      const Triangle& tk = oc.triangles[static_cast<std::size_t>(k)];
      const RoleType got = oc.roles[static_cast<std::size_t>(k)].type;
      Point expected;
      switch (k % 3) {
        case 0:
          ok = ok && got == RoleType::circumcenter;
          expected = tk.circumcenter();
          break;
        case 1:
          ok = ok && got == RoleType::orthocenter;
          expected = classic_center(tk, {CenterType::orthocenter});
          break;
        default:
          ok = ok && (got == RoleType::incenter || got == RoleType::excenter);
          expected = nearest_l_center(tk, o);
      }
      pos = std::max(pos, rel(expected, o, tk.circumradius()));
    }
    w.put("roles", role_sequence(oc));
    s.check("O->H->L cycle", ok, w);
    s.check("O->H->L positions", pos, w);

    const Point sp = s_point(t, v);
    w.put("vertex", std::string(1, label(v)));
    w.put("P", sp);
    const ChainRecord sc = iterate_chain(t, sp, kChainSteps, schedule);
    ok = true;
    pos = 0.0;
    for (int k = 0; k <= kChainSteps; ++k) {
      const Triangle& tk = sc.triangles[static_cast<std::size_t>(k)];
      const SpecialRole got = sc.roles[static_cast<std::size_t>(k)];
      const double rk = tk.circumradius();
      switch (k % 3) {
        case 0:
          ok = ok && got == SpecialRole{RoleType::s_role, v};
          pos = std::max(pos, rel(s_point(tk, v), sp, rk));
          break;
        case 1:
          ok = ok && got == SpecialRole{RoleType::m_role, v};
          pos = std::max(pos, rel(m_point(tk, v), sp, rk));
          break;
        default: {
          ok = ok && got == SpecialRole{RoleType::q_role, v};
          const Circle c =
              circumcircle(tk[next(v)], tk[prev(v)], classic_center(tk, {CenterType::incenter}));
          pos = std::max({pos, std::abs(tk.side(next(v)) - tk.side(prev(v))) / rk,
                          c.distance_to(sp) / rk});
        }
      }
    }
    w.put("roles", role_sequence(sc));
    s.check("S->M->Q cycle", ok, w);
    s.check("S->M->Q positions", pos, w);
  });
}

void simson(Suite& s) {
  s.declare("detected-as-collinear", 0.5);
  s.declare("collinearity", 1e-9);
  s.each([&](Rng& rng, Witness& w, int) {
    const Triangle t = random_triangle(rng, {5.0, 0.0, 0.0, AngleClass::any});
    Point p;
    do {
      p = t.circumcircle().at(rng.uniform(0.0, 2.0 * kPi));
    } while (!clear_of_vertices(t, p, 1e-3));
    w.triangle(t);
    w.put("P", p);
    const PedalResult r = pedal_triad(t, p);
    const auto* line = std::get_if<SimsonLine>(&r);
    s.check("detected-as-collinear", line != nullptr, w);
    // Recomputed from the raw feet rather than trusting the fitted line.
    const auto f = pedal_feet(t, p);
    int far_i = 0, far_j = 1;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (distance(f[i], f[j]) > distance(f[far_i], f[far_j])) far_i = i, far_j = j;
      }
    }
    const int mid = 3 - far_i - far_j;
    s.check("collinearity", Line::through(f[far_i], f[far_j]).distance_to(f[mid]) / t.circumradius(), w);
  });
}

struct Entry {
  const char* name;
  int trials;
  void (*run)(Suite&);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r{
      {"theorem1", 1000, theorem1},  {"theorem2", 500, theorem2},
      {"corollary1", 100, corollary1}, {"lemma1", 400, lemma1},
      {"lemma2", 500, lemma2},       {"theorem3", 200, theorem3},
      {"theorem4", 50, theorem4},    {"theorem5", 100, theorem5},
      {"theorem6", 100, theorem6},   {"theorem7", 100, theorem7},
      {"theorem8", 100, theorem8},   {"theorem9", 100, theorem9},
      {"theorem10", 100, theorem10}, {"theorem11", 100, theorem11},
      {"theorem12", 200, theorem12}, {"theorem13", 100, theorem13},
      {"theorem14", 50, theorem14},  {"theorem15", 50, theorem15},
      {"corollary4", 50, corollary4}, {"simson", 200, simson},
  };
  return r;
}

const Entry& find_entry(const std::string& name) {
  for (const Entry& e : registry()) {
    if (name == e.name) return e;
  }
  throw std::invalid_argument("unknown suite \"" + name + "\"");
}

}  // namespace

void Claim::record(double residual, const std::function<std::string()>& witness_fn) {
  ++checked;
  const bool ok = residual < threshold;
  if (!ok) ++failures;
  // NaN compares false everywhere; treat it as the worst possible value.
  const bool worse = std::isnan(residual) ? !std::isnan(max_residual) : residual > max_residual;
  if (worse) {
    max_residual = residual;
    witness = witness_fn();
  }
}

bool VerifyReport::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.passed(); });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Entry& e : registry()) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

int default_trials(const std::string& suite) { return find_entry(suite).trials; }

VerifyReport run_suite(const std::string& suite, std::uint64_t seed, std::optional<int> trials) {
  const Entry& e = find_entry(suite);
  const int n = trials.value_or(e.trials);
  if (n <= 0) throw std::invalid_argument("trials must be positive");
  const auto start = std::chrono::steady_clock::now();
  Suite s(e.name, seed, n);
  e.run(s);
  VerifyReport r = std::move(s).report();
  r.duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<VerifyReport> run_verify(const std::string& suite, std::uint64_t seed,
                                     std::optional<int> trials) {
  std::vector<VerifyReport> out;
  if (suite == "all") {
    for (const std::string& name : suite_names()) out.push_back(run_suite(name, seed, trials));
  } else {
    out.push_back(run_suite(suite, seed, trials));
  }
  return out;
}

std::string format_text(const std::vector<VerifyReport>& reports) {
  std::ostringstream os;
  int failed = 0;
  for (const VerifyReport& r : reports) {
    if (!r.passed()) ++failed;
    os << r.suite << "  seed " << r.seed << "  trials " << r.trials << "  "
       << (r.passed() ? "PASS" : "FAIL") << "\n";
    for (const Claim& c : r.claims) {
      const char* status = !c.asserted ? "info" : c.passed() ? "pass" : "FAIL";
      char line[256];
      if (c.checked == 0 && !c.asserted) {
        std::snprintf(line, sizeof line, "  %-4s  %s", status, c.name.c_str());
        os << line << "\n";
        if (!c.note.empty()) os << "        " << c.note << "\n";
        continue;
      }
      std::snprintf(line, sizeof line, "  %-4s  %-34s max %-10s", status, c.name.c_str(),
                    sci(c.max_residual).c_str());
      os << line;
      if (c.asserted) os << " < " << sci(c.threshold);
      os << "  n=" << c.checked;
      if (c.asserted && c.failures > 0) os << "  failures=" << c.failures;
      os << "\n";
      if (!c.note.empty()) os << "        " << c.note << "\n";
      if (c.asserted && !c.passed() && !c.witness.empty()) os << "        worst: " << c.witness << "\n";
    }
  }
  if (reports.size() > 1) {
    os << reports.size() << " suites, " << failed << " failed\n";
  }
  return os.str();
}

std::string format_json(const std::vector<VerifyReport>& reports) {
  using nlohmann::ordered_json;
  auto number = [](double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); };
  ordered_json arr = ordered_json::array();
  bool all = true;
  for (const VerifyReport& r : reports) {
    all = all && r.passed();
    ordered_json claims = ordered_json::array();
    for (const Claim& c : r.claims) {
      ordered_json j;
      j["name"] = c.name;
      j["asserted"] = c.asserted;
      j["passed"] = c.passed();
      j["max_residual"] = number(c.max_residual);
      j["threshold"] = c.threshold;
      j["checked"] = c.checked;
      j["failures"] = c.failures;
      if (!c.note.empty()) j["note"] = c.note;
      if (!c.witness.empty() && !c.passed()) j["witness"] = c.witness;
      claims.push_back(j);
    }
    ordered_json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["passed"] = r.passed();
    j["claims"] = claims;
    arr.push_back(j);
  }
  ordered_json doc;
  doc["passed"] = all;
  doc["reports"] = arr;
  return doc.dump(2) + "\n";
}

}  // namespace miquel
