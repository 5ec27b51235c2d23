#pragma once

/// \file
/// \brief Named points of a triangle.
///
/// Classical centers, the two Brocard points, the symmedian points S_v
/// (symmedian ray meets the arc through the other two vertices and the
/// circumcenter), the median points M_v, isogonal conjugation, inversion in
/// the circumcircle, and the catalog of the eleven points whose Miquel
/// triangles are similar to the host.

#include <string>
#include <vector>

#include "miquel/triangle.hpp"

namespace miquel {

enum class CenterType {
  circumcenter,
  orthocenter,
  centroid,
  incenter,
  excenter,
  first_brocard,
  second_brocard,
  s_point,
  m_point,
};

struct CenterKind {
  CenterType type{CenterType::circumcenter};
  /// Meaningful for excenter, s_point and m_point only.
  Vertex vertex{Vertex::A};

  bool has_vertex() const {
    return type == CenterType::excenter || type == CenterType::s_point ||
           type == CenterType::m_point;
  }
  /// Short symbol: O, H, G, L, L_A, Ω₁, Ω₂, S_A, M_A.
  std::string symbol() const;
  bool operator==(const CenterKind& o) const {
    return type == o.type && (!has_vertex() || vertex == o.vertex);
  }
};

/// O, H, G, L or an excenter. Other kinds throw std::invalid_argument.
Point classic_center(const Triangle& t, CenterKind kind);

/// Any CenterKind, dispatching to the dedicated constructions below.
Point center_of(const Triangle& t, CenterKind kind, const Tolerance& tol = {});

/// Foot D of the symmedian from v: BD / DC = (AB / AC)^2 for v = A.
Point symmedian_foot(const Triangle& t, Vertex v);

enum class BrocardKind { first, second };

/// First: angle BAP = CBP = ACP. Second: angle PAC = PBA = PCB.
Point brocard_point(const Triangle& t, BrocardKind which);

/// Intersection of the symmedian from v with the arc of circle(B, C, O)
/// on the circumcenter's side of BC. Throws RightAngleDegenerate when the
/// angle at v is right.
Point s_point(const Triangle& t, Vertex v, const Tolerance& tol = {});

/// Intermediate points of the M_v construction, kept for figures.
struct MPointConstruction {
  Point m;
  /// Midpoint of the opposite side.
  Point e;
  /// Second circumcircle hit of the median (acute), or the fourth vertex of
  /// the parallelogram ABFC (obtuse).
  Point f;
  bool obtuse{false};
};

MPointConstruction m_point_construction(const Triangle& t, Vertex v, const Tolerance& tol = {});
Point m_point(const Triangle& t, Vertex v, const Tolerance& tol = {});

/// Throws OnSideLine, or NoFiniteConjugate for points on the circumcircle.
Point isogonal_conjugate(const Triangle& t, const Point& p, const Tolerance& tol = {});

Point inverse_in_circumcircle(const Triangle& t, const Point& p, const Tolerance& tol = {});

struct CatalogEntry {
  CenterKind kind;
  /// True for the circumcircle-inverse of `kind`.
  bool inverted{false};
  Point location;
  /// Correspondence ABC -> XYZ under which the Miquel triangle matches.
  Correspondence expected;

  std::string label() const;
};

/// Band used to refuse near-isosceles and near-right hosts.
inline constexpr Tolerance kCatalogBand{1e-6, 1e-6};

/// The eleven points: six inside the circumcircle (O, Ω₁, Ω₂, S_A, S_B,
/// S_C) followed by the inverses of the last five.
std::vector<CatalogEntry> eleven_point_catalog(const Triangle& t,
                                               const Tolerance& band = kCatalogBand);

}  // namespace miquel
