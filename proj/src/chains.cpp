#include "miquel/chains.hpp"

#include <stdexcept>

namespace miquel {

namespace {

bool similar(const Triangle& a, const Triangle& b, const Tolerance& tol, double& residual) {
  const auto classes = classify_similarity(a, b, tol);
  if (classes.empty()) return false;
  residual = classes.front().residual;
  return true;
}

}  // namespace

ChainRecord iterate_chain(const Triangle& t0, const Point& p, int k,
                          const std::vector<DirectedAngle>& thetas, const ChainOptions& options) {
  if (k < 1 || k > options.max_steps) {
    throw std::invalid_argument("chain length must be in [1, " + std::to_string(options.max_steps) + "]");
  }
  if (!thetas.empty() && static_cast<int>(thetas.size()) != k) {
    throw std::invalid_argument("theta schedule must have one entry per step");
  }
  ChainRecord rec;
  rec.p = p;
  rec.thetas = thetas.empty() ? std::vector<DirectedAngle>(static_cast<std::size_t>(k)) : thetas;
  rec.triangles.push_back(t0);
  const Tolerance& tol = options.tol;
  // Construction itself uses the default tight tolerance; options.tol only
  // governs role detection, which accumulates error along the chain.
  const Tolerance strict{};
  for (int step = 0; step < k; ++step) {
    const Triangle& cur = rec.triangles.back();
    rec.roles.push_back(detect_special_role(cur, p, tol));
    try {
      if (cur.circumcircle().distance_to(p) < kSimsonBand * cur.circumradius()) {
        throw GeometryError(ErrorKind::OnCircumcircle, "P is on the circumcircle");
      }
      Triad triad = family_member(cur, p, rec.thetas[static_cast<std::size_t>(step)], strict);
      MiquelResult m = miquel_point(cur, triad, strict);
      if (distance(m.point, p) > cur.length_tol(tol)) {
        throw GeometryError(ErrorKind::NotAMiquelTriad, "Miquel point drifted away from P");
      }
      Triangle nxt = triad.triangle(strict);
      rec.triads.push_back(triad);
      rec.miquel.push_back(m);
      rec.triangles.push_back(nxt);
    } catch (const GeometryError& e) {
      throw GeometryError(ErrorKind::DegenerateStep,
                          "step " + std::to_string(step + 1) + ": " + e.what());
    }
  }
  rec.roles.push_back(detect_special_role(rec.triangles.back(), p, tol));
  return rec;
}

Mod3Report check_mod3_similarity(const ChainRecord& rec, const Tolerance& tol) {
  const int n = static_cast<int>(rec.triangles.size());
  if (n < 4) throw std::invalid_argument("mod-3 check needs at least 4 triangles");
  Mod3Report r;
  r.holds = true;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double residual = 0.0;
      const bool sim = similar(rec.triangles[i], rec.triangles[j], tol, residual);
      if ((j - i) % 3 == 0) {
        if (!sim) {
          r.holds = false;
          r.max_residual = INFINITY;
        } else {
          r.max_residual = std::max(r.max_residual, residual);
        }
      } else if (sim) {
        r.cross_class_similar.emplace_back(i, j);
      }
    }
  }
  return r;
}

std::vector<int> similar_to_seed(const ChainRecord& rec, const Tolerance& tol) {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(rec.triangles.size()); ++k) {
    double residual = 0.0;
    if (similar(rec.seed(), rec.triangles[k], tol, residual)) out.push_back(k);
  }
  return out;
}

RoleCycle detect_role_cycle(const ChainRecord& rec) { return {rec.roles}; }

}  // namespace miquel
