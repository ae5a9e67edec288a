#include "qcgeo/fatness.hpp"

#include <algorithm>
#include <cmath>

#include "qcgeo/rng.hpp"

namespace qcgeo {

namespace {

double clamp1(double v) { return std::fmin(1.0, std::fmax(-1.0, v)); }

// Orthonormal frame completing the unit vector n.
void frame(const Vec3& n, Vec3* u, Vec3* v) {
  const Vec3 seed = std::abs(n.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
  *u = normalized(cross(n, seed));
  *v = cross(n, *u);
}

Vec3 cap_point(const Vec3& center, double cap_radius, double u01a, double u01b) {
  // uniform w.r.t. spherical measure on the cap
  const double zmin = std::cos(cap_radius);
  const double z = zmin + (1.0 - zmin) * u01a;
  const double t = std::sqrt(std::fmax(0.0, 1.0 - z * z));
  const double phi = 2.0 * kPi * u01b;
  Vec3 e1, e2;
  frame(center, &e1, &e2);
  return {center.x * z + t * (std::cos(phi) * e1.x + std::sin(phi) * e2.x),
          center.y * z + t * (std::cos(phi) * e1.y + std::sin(phi) * e2.y),
          center.z * z + t * (std::cos(phi) * e1.z + std::sin(phi) * e2.z)};
}

}  // namespace

double cap_intersection_area(const Vec3& x, double r, const Vec3& k_center, double k_radius) {
  r = std::fmin(r, kPi);
  const double big_d = std::acos(clamp1(dot(normalized(x), normalized(k_center))));
  // arc length of the circle sigma(x,.) = t lying inside the cap K
  auto arc = [&](double t) {
    const double st = std::sin(t);
    const double denom = std::sin(big_d) * st;
    if (denom < 1e-15) {
      // x at the cap center or antipode, or a degenerate circle
      return std::cos(big_d) * std::cos(t) >= std::cos(k_radius) ? 2.0 * kPi * st : 0.0;
    }
    const double c = (std::cos(k_radius) - std::cos(big_d) * std::cos(t)) / denom;
    if (c >= 1.0) return 0.0;
    if (c <= -1.0) return 2.0 * kPi * st;
    return 2.0 * std::acos(c) * st;
  };
  // composite Simpson
  const int n = 512;
  const double h = r / n;
  double acc = arc(0.0) + arc(r);
  for (int i = 1; i < n; ++i) acc += (i % 2 == 1 ? 4.0 : 2.0) * arc(i * h);
  return acc * h / 3.0;
}

FatnessReport fatness_test(const DiskRegion& k, double tau, int trials, std::uint64_t seed) {
  if (!(tau > 0.0)) throw error("fatness threshold must be positive");
  Vec3 kc;
  double kr;
  k.spherical_cap(&kc, &kr);
  FatnessReport rep;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Vec3 x = cap_point(kc, kr, rng.u01(), rng.u01());
    const double dxc = std::acos(clamp1(dot(x, kc)));
    const double r_contain = dxc + kr;  // B(x,r) contains K beyond this
    const double r_hi = std::fmin(0.999 * r_contain, kPi * 0.999);
    const double r_lo = std::fmin(1e-3 * kr, 0.5 * r_hi);
    if (!(r_hi > r_lo)) continue;
    const double r = rng.log_uniform(r_lo, r_hi);
    const double area = cap_intersection_area(x, r, kc, kr);
    const double ratio = area / (r * r);
    rep.trials_used++;
    rep.worst_ratio = std::fmin(rep.worst_ratio, ratio);
    if (ratio < tau) rep.passed = false;
  }
  return rep;
}

FatnessReport fatness_test(const ContinuumSample& k, double tau, int trials, std::uint64_t seed) {
  if (!(tau > 0.0)) throw error("fatness threshold must be positive");
  FatnessReport rep;
  if (k.points.size() <= 1) {
    // a single point is tau-fat for every tau: no ball centered on it fails
    // to contain it, so the test is vacuous
    rep.trials_used = 0;
    return rep;
  }
  // curve samples carry zero area
  const double diam = continuum_diam(k, Metric::spherical);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const std::size_t i = static_cast<std::size_t>(rng.next_u64() % k.points.size());
    const double r = rng.log_uniform(1e-3 * diam, 0.9 * diam);
    (void)i;
    (void)r;
    rep.trials_used++;
    rep.worst_ratio = 0.0;
    rep.passed = false;
  }
  return rep;
}

}  // namespace qcgeo
