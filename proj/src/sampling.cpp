#include "miquel/sampling.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace miquel {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;

bool acceptable(const std::array<double, 3>& ang, const TriangleShape& s) {
  for (double a : ang) {
    if (a < s.min_angle_deg * kDeg) return false;
    if (std::abs(a - kPi / 2) < s.right_margin_deg * kDeg) return false;
  }
  for (int i = 0; i < 3; ++i) {
    if (std::abs(ang[i] - ang[(i + 1) % 3]) < s.min_gap_deg * kDeg) return false;
  }
  switch (s.angle_class) {
    case AngleClass::any: return true;
    case AngleClass::acute: return std::all_of(ang.begin(), ang.end(), [](double a) { return a < kPi / 2; });
    case AngleClass::obtuse_at_a: return ang[0] > kPi / 2;
    case AngleClass::acute_at_a: return ang[0] < kPi / 2;
  }
  return true;
}

// Vertices on a circle: arcs opposite A, B, C are 2A, 2B, 2C.
Triangle place(Rng& rng, const std::array<double, 3>& ang) {
  const double radius = rng.uniform(0.5, 5.0);
  const Point center{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
  const double phi = rng.uniform(0.0, 2.0 * kPi);
  const double mirror = rng.coin() ? -1.0 : 1.0;
  const double ta = phi;
  const double tb = ta + 2.0 * ang[2];
  const double tc = tb + 2.0 * ang[0];
  auto at = [&](double th) {
    return Point{center.x + radius * std::cos(th), center.y + mirror * radius * std::sin(th)};
  };
  return Triangle(at(ta), at(tb), at(tc));
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::string_view stream, std::uint64_t index) {
  // FNV-1a of the stream name keeps streams independent and reproducible.
  std::uint64_t h = 1469598103934665603ULL;
  for (char ch : stream) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ULL;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  engine_.seed(seq);
}

double Rng::uniform(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

Triangle random_triangle(Rng& rng, const TriangleShape& shape) {
  for (;;) {
    double u1 = rng.uniform(0.0, 1.0);
    double u2 = rng.uniform(0.0, 1.0);
    if (u1 > u2) std::swap(u1, u2);
    const std::array<double, 3> ang{u1 * kPi, (u2 - u1) * kPi, (1.0 - u2) * kPi};
    if (acceptable(ang, shape)) return place(rng, ang);
  }
}

Triangle random_isosceles(Rng& rng, double min_apex_deg, double max_apex_deg) {
  const double apex = rng.uniform(min_apex_deg, max_apex_deg) * kDeg;
  const double base = (kPi - apex) / 2.0;
  return place(rng, {apex, base, base});
}

Point random_in_circumdisk(Rng& rng, const Triangle& t, double fraction) {
  const double r = t.circumradius() * fraction * std::sqrt(rng.uniform(0.0, 1.0));
  const double th = rng.uniform(0.0, 2.0 * kPi);
  return t.circumcenter() + Point{r * std::cos(th), r * std::sin(th)};
}

Point random_in_triangle(Rng& rng, const Triangle& t) {
  double s = rng.uniform(0.0, 1.0);
  double u = rng.uniform(0.0, 1.0);
  if (s + u > 1.0) {
    s = 1.0 - s;
    u = 1.0 - u;
  }
  return t.a() + (t.b() - t.a()) * s + (t.c() - t.a()) * u;
}

Point random_in_annulus(Rng& rng, const Triangle& t, double lo, double hi) {
  const double r = t.circumradius() * rng.uniform(lo, hi);
  const double th = rng.uniform(0.0, 2.0 * kPi);
  return t.circumcenter() + Point{r * std::cos(th), r * std::sin(th)};
}

double side_clearance(const Triangle& t, const Point& p) {
  double best = INFINITY;
  for (Vertex v : kVertices) best = std::min(best, t.side_line(v).distance_to(p));
  return best / t.circumradius();
}

}  // namespace miquel
