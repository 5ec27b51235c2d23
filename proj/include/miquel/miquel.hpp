#pragma once

/// \file
/// \brief Miquel points, Miquel triangles and their families.
///
/// A triad is three points on the side lines of a host triangle, given by
/// affine parameters so that points on the extensions are allowed:
///
///     X = B + u (C - B),  Y = C + v (A - C),  Z = A + w (B - A).
///
/// The Miquel point is the common point of circles (A, Y, Z), (B, Z, X)
/// and (C, X, Y). Every point P (off the side lines) is the Miquel point of
/// a one-parameter family of triads; the family is parametrized by rotating
/// the perpendiculars from P to the sides through a common angle theta, so
/// theta = 0 is the pedal triad.

#include <algorithm>
#include <array>
#include <string>
#include <variant>
#include <vector>

#include "miquel/triangle.hpp"

namespace miquel {

struct Triad {
  Triangle host;
  double u{0.5};
  double v{0.5};
  double w{0.5};

  Triad(const Triangle& host_, double u_, double v_, double w_);
  /// Parameters recovered by projecting each point onto its side line.
  static Triad from_points(const Triangle& host, const Point& x, const Point& y, const Point& z);

  Point x() const { return host.b() + (host.c() - host.b()) * u; }
  Point y() const { return host.c() + (host.a() - host.c()) * v; }
  Point z() const { return host.a() + (host.b() - host.a()) * w; }
  std::array<Point, 3> points() const { return {x(), y(), z()}; }
  /// Triangle XYZ; throws DegenerateTriangle for collinear triads.
  Triangle triangle(const Tolerance& tol = {}) const { return Triangle(x(), y(), z(), tol); }
};

struct MiquelResult {
  Point point;
  /// Circles through (A, Y, Z), (B, Z, X), (C, X, Y).
  std::array<Circle, 3> circles;
  /// Largest distance from `point` to any of the three circles.
  double residual{0.0};
  /// The first two circles touch at Z, which is then the Miquel point.
  bool tangent{false};
};

/// Collinear pedal feet of a point on the circumcircle.
struct SimsonLine {
  Line line;
  std::array<Point, 3> feet;
  double max_deviation{0.0};
};

/// |dist(P, O) - R| below this fraction of R is treated as on the circumcircle.
inline constexpr double kSimsonBand = 1e-7;

using PedalResult = std::variant<Triad, SimsonLine>;

/// Feet of the perpendiculars from p. Throws OnSideLine.
std::array<Point, 3> pedal_feet(const Triangle& t, const Point& p, const Tolerance& tol = {});

PedalResult pedal_triad(const Triangle& t, const Point& p, const Tolerance& tol = {});

/// Triangle of the feet, also for p on a side line (that foot is p
/// itself; the inverses of S_A, S_B, S_C sit there). Throws
/// DegenerateTriangle when the feet are collinear.
Triangle pedal_triangle(const Triangle& t, const Point& p, const Tolerance& tol = {});

/// Throws DegenerateCircle when a triad point sits on a vertex.
MiquelResult miquel_point(const Triangle& t, const Triad& triad, const Tolerance& tol = {});

/// Family member of p for rotation theta, |theta| < pi/2.
Triad family_member(const Triangle& t, const Point& p, DirectedAngle theta,
                    const Tolerance& tol = {});

struct AngleSextet {
  DirectedAngle alpha1;  // PAC
  DirectedAngle alpha2;  // BAP
  DirectedAngle beta1;   // PBA
  DirectedAngle beta2;   // CBP
  DirectedAngle gamma1;  // PCB
  DirectedAngle gamma2;  // ACP
};

AngleSextet angle_sextet(const Triangle& t, const Point& p, const Tolerance& tol = {});

struct MiquelAngles {
  DirectedAngle x;
  DirectedAngle y;
  DirectedAngle z;
  /// p is not strictly inside the circumcircle.
  bool extrapolated{false};
};

/// Angles of the Miquel triangle predicted from the sextet:
/// X = beta1 + gamma2, Y = gamma1 + alpha2, Z = alpha1 + beta2.
MiquelAngles miquel_triangle_angles(const Triangle& t, const Point& p, const Tolerance& tol = {});

/// Measured directed angles YXZ, ZYX, XZY of a triangle XYZ.
MiquelAngles measured_angles(const Triangle& xyz, const Tolerance& tol = {});

struct MiquelEquationResiduals {
  double bpc{0.0};  // A + X = BPC
  double cpa{0.0};  // B + Y = CPA
  double apb{0.0};  // C + Z = APB
  /// A + Z = APB, kept for comparison; generically non-zero.
  double printed_apb{0.0};

  double max() const { return std::max({bpc, cpa, apb}); }
};

/// Throws NotAMiquelTriad if the triad's Miquel point is not p.
MiquelEquationResiduals verify_miquel_equations(const Triangle& t, const Point& p,
                                                const Triad& triad, const Tolerance& tol = {});

enum class Orientation { direct, inverse };

struct SimilarityClass {
  Correspondence correspondence;
  Orientation orientation{Orientation::direct};
  /// Side of the second triangle over the matched side of the first.
  double ratio{1.0};
  /// Largest interior-angle mismatch.
  double residual{0.0};
};

/// Every correspondence whose interior angles agree within tol.angle_eps,
/// best first. Empty when the triangles are not similar.
std::vector<SimilarityClass> classify_similarity(const Triangle& t1, const Triangle& t2,
                                                 const Tolerance& tol = {});

enum class RoleType {
  circumcenter,
  orthocenter,
  incenter,
  excenter,
  first_brocard,
  second_brocard,
  s_role,
  m_role,
  q_role,
  none,
};

struct SpecialRole {
  RoleType type{RoleType::none};
  Vertex vertex{Vertex::A};

  bool has_vertex() const {
    return type == RoleType::excenter || type == RoleType::s_role || type == RoleType::m_role ||
           type == RoleType::q_role;
  }
  std::string name() const;
  bool operator==(const SpecialRole& o) const {
    return type == o.type && (!has_vertex() || vertex == o.vertex);
  }
};

/// All roles p plays relative to t, in a fixed priority order.
std::vector<SpecialRole> detect_special_roles(const Triangle& t, const Point& p,
                                              const Tolerance& tol = {});
/// The first entry of detect_special_roles, or none.
SpecialRole detect_special_role(const Triangle& t, const Point& p, const Tolerance& tol = {});

struct ParityReport {
  bool inside_host{false};
  bool inside_miquel{false};
  bool agree{false};
  /// p was within tolerance of a side of either triangle.
  bool boundary{false};
  /// Unsigned XPY + YPZ + ZPX; 2 pi exactly when p is inside XYZ.
  double ray_angle_sum{0.0};
};

/// Throws OnSideLine or OnCircumcircle.
ParityReport containment_parity(const Triangle& t, const Point& p, const Tolerance& tol = {});

}  // namespace miquel
