#pragma once

/// \file
/// \brief Iterated Miquel triangles with a fixed Miquel point.
///
/// Triangle k+1 is a Miquel triangle of triangle k and P, taken from P's
/// family with the per-step rotation theta_k (zero gives pedal chains).
/// Vertex labels follow the triad: A_{k+1} = X on B_kC_k, B_{k+1} = Y,
/// C_{k+1} = Z.

#include <vector>

#include "miquel/miquel.hpp"

namespace miquel {

struct ChainOptions {
  /// Double precision loses roughly a digit per ill-conditioned step.
  int max_steps{12};
  /// Relative to each step's own circumradius.
  Tolerance tol{1e-6, 1e-6};
};

struct ChainRecord {
  Point p;
  /// Triangles 0..k; triangles.front() is the seed.
  std::vector<Triangle> triangles;
  /// triads[k] lives on triangles[k] and spans triangles[k + 1].
  std::vector<Triad> triads;
  std::vector<MiquelResult> miquel;
  /// Role of P relative to each triangle, k + 1 entries.
  std::vector<SpecialRole> roles;
  std::vector<DirectedAngle> thetas;

  int steps() const { return static_cast<int>(triads.size()); }
  const Triangle& seed() const { return triangles.front(); }
};

/// Throws DegenerateStep when P hits a side line or the circumcircle of an
/// intermediate triangle, std::invalid_argument for bad k or schedule size.
/// An empty schedule means all zeros.
ChainRecord iterate_chain(const Triangle& t0, const Point& p, int k,
                          const std::vector<DirectedAngle>& thetas = {},
                          const ChainOptions& options = {});

struct Mod3Report {
  /// Every pair i = j (mod 3) is similar.
  bool holds{false};
  double max_residual{0.0};
  /// Pairs (i, j), i < j, in different residue classes that happen to be similar.
  std::vector<std::pair<int, int>> cross_class_similar;
};

/// Requires at least 4 triangles.
Mod3Report check_mod3_similarity(const ChainRecord& rec, const Tolerance& tol = {1e-6, 1e-6});

/// Indices k with triangle k similar to the seed.
std::vector<int> similar_to_seed(const ChainRecord& rec, const Tolerance& tol = {1e-6, 1e-6});

struct RoleCycle {
  std::vector<SpecialRole> roles;
};

RoleCycle detect_role_cycle(const ChainRecord& rec);

}  // namespace miquel
