#include "qcgeo/width_search.hpp"

#include <algorithm>
#include <cmath>

#include "qcgeo/rng.hpp"

namespace qcgeo {

namespace {

double clamp1(double v) { return std::fmin(1.0, std::fmax(-1.0, v)); }

// Width of the concentric subannulus of A(0; r, 1) spanned by the euclidean
// disk B(z, rho); 0 if disjoint from the annulus.
double euclid_disk_width(double r, double R, Complex z, double rho) {
  const double d = std::abs(z);
  const double lo = std::fmax(std::fmax(0.0, d - rho), r);
  const double hi = std::fmin(d + rho, R);
  if (!(hi > lo) || d + rho < r || d - rho > R) return 0.0;
  return std::log(hi / lo);
}

// Largest disk about z avoiding the given euclidean disks; 0 if z is covered.
double free_radius(Complex z, const std::vector<std::pair<Complex, double>>& obstacles) {
  double rad = HUGE_VAL;
  for (const auto& [c, rho] : obstacles) {
    const double d = std::abs(z - c) - rho;
    rad = std::fmin(rad, d);
  }
  return std::fmax(0.0, rad);
}

// Maximize w_A^e over disks D(z, free_radius(z)) by random candidates plus a
// local refinement around the incumbent.
double search_free_disk_width(Rng& rng, double r, double R,
                              const std::vector<std::pair<Complex, double>>& obstacles,
                              int candidates) {
  double best = 0.0;
  Complex best_z;
  for (int i = 0; i < candidates; ++i) {
    const double rad = rng.log_uniform(0.5 * r, R);
    const Complex z = rad * rng.unit_circle_point();
    const double rho = free_radius(z, obstacles);
    if (rho <= 0.0) continue;
    const double w = euclid_disk_width(r, R, z, rho);
    if (w > best) {
      best = w;
      best_z = z;
    }
  }
  if (best > 0.0) {
    double step = 0.25 * std::abs(best_z) + 0.05 * r;
    for (int i = 0; i < 48; ++i) {
      const Complex z = best_z + step * Complex(rng.normal(), rng.normal());
      const double rho = free_radius(z, obstacles);
      if (rho > 0.0) {
        const double w = euclid_disk_width(r, R, z, rho);
        if (w > best) {
          best = w;
          best_z = z;
        }
      }
      step *= 0.93;
    }
  }
  return best;
}

struct SphericalCap {
  Vec3 center;
  double radius;
};

double cap_gap(const SphericalCap& a, const SphericalCap& b) {
  return std::acos(clamp1(dot(a.center, b.center))) - a.radius - b.radius;
}

double spherical_disk_width(double r, double R, const Vec3& x, const SphericalCap& cap) {
  const double d = std::acos(clamp1(dot(x, cap.center)));
  const double lo = std::fmax(std::fmax(0.0, d - cap.radius), r);
  const double hi = std::fmin(std::fmin(kPi, d + cap.radius), R);
  if (!(hi > lo) || d + cap.radius < r || d - cap.radius > R) return 0.0;
  return std::log(hi / lo);
}

Vec3 sphere_point(Rng& rng) {
  const double z = rng.uniform(-1.0, 1.0);
  const double phi = rng.uniform(0.0, 2.0 * kPi);
  const double t = std::sqrt(std::fmax(0.0, 1.0 - z * z));
  return {t * std::cos(phi), t * std::sin(phi), z};
}

Vec3 point_at_distance(Rng& rng, const Vec3& x, double d) {
  // random point at spherical distance d from x
  Vec3 u, v;
  const Vec3 seed = std::abs(x.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
  u = normalized(cross(x, seed));
  v = cross(x, u);
  const double phi = rng.uniform(0.0, 2.0 * kPi);
  const double c = std::cos(d), s = std::sin(d);
  return {c * x.x + s * (std::cos(phi) * u.x + std::sin(phi) * v.x),
          c * x.y + s * (std::cos(phi) * u.y + std::sin(phi) * v.y),
          c * x.z + s * (std::cos(phi) * u.z + std::sin(phi) * v.z)};
}

}  // namespace

EmpiricalConstant big_disk_bound_search(double alpha, int trials, std::uint64_t seed, double width) {
  if (!(alpha >= 1.0)) throw error("big disk search requires alpha >= 1");
  EmpiricalConstant out{"C(alpha)", 0.0, trials, seed};
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(t));
    const double w = width > 0.0 ? width : rng.log_uniform(1.0, 12.0);
    const double r = std::exp(-w);  // R normalized to 1
    // K1, K2: diam >= 1/alpha, dist to 0 <= alpha r, disjoint
    std::vector<std::pair<Complex, double>> ks;
    bool ok = false;
    for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
      ks.clear();
      for (int i = 0; i < 2; ++i) {
        const double rho = rng.log_uniform(0.5 / alpha, 4.0);
        const double gap = rng.uniform(0.0, alpha * r);
        ks.emplace_back((rho + gap) * rng.unit_circle_point(), rho);
      }
      ok = std::abs(ks[0].first - ks[1].first) > ks[0].second + ks[1].second;
    }
    if (!ok) continue;
    const double value = search_free_disk_width(rng, r, 1.0, ks, 64);
    out.value = std::fmax(out.value, value);
  }
  return out;
}

EmpiricalConstant single_big_disk_control(int trials, std::uint64_t seed, double width) {
  EmpiricalConstant out{"C-control", 0.0, trials, seed};
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(t));
    const double r = std::exp(-width);
    const double rho = rng.log_uniform(0.5, 4.0);
    const double gap = rng.uniform(0.0, r);
    std::vector<std::pair<Complex, double>> ks{{(rho + gap) * rng.unit_circle_point(), rho}};
    out.value = std::fmax(out.value, search_free_disk_width(rng, r, 1.0, ks, 64));
  }
  return out;
}

EmpiricalConstant reflected_pair_bound_search(int trials, std::uint64_t seed, Metric metric,
                                              double width) {
  EmpiricalConstant out{metric == Metric::euclidean ? "alpha0" : "beta0", 0.0, trials, seed};
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(t) + 0x51ab0000u);
    if (metric == Metric::euclidean) {
      const double w = width > 0.0 ? width : rng.log_uniform(1.0, 12.0);
      const double r = std::exp(-w);
      // K, L meet both circles |z| = r and |z| = 1 and are disjoint
      std::pair<Complex, double> disks[2];
      bool ok = false;
      for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
        for (auto& d : disks) {
          const double lo = rng.uniform(0.0, r);
          const double hi = rng.uniform(1.0, 2.5);
          d.second = 0.5 * (hi - lo);
          d.first = 0.5 * (hi + lo) * rng.unit_circle_point();
        }
        ok = std::abs(disks[0].first - disks[1].first) > disks[0].second + disks[1].second;
      }
      if (!ok) continue;
      const auto& k = disks[0];
      const auto& l = disks[1];
      // reflect L across the boundary of K
      const MoebiusMap refl = MoebiusMap::reflection(GeneralizedCircle::circle(k.first, k.second));
      const DiskRegion lprime = refl.map_disk(DiskRegion::disk(l.first, l.second));
      if (!lprime.is_bounded_disk()) continue;  // degenerate reflection
      std::vector<std::pair<Complex, double>> obstacles{
          l, {lprime.boundary().center(), lprime.boundary().radius()}};
      out.value = std::fmax(out.value, search_free_disk_width(rng, r, 1.0, obstacles, 64));
    } else {
      const auto trial = spherical_reflected_trial(seed, static_cast<std::uint64_t>(t), width);
      if (trial.valid) out.value = std::fmax(out.value, trial.trial_value);
    }
  }
  return out;
}

SphericalReflectedTrial spherical_reflected_trial(std::uint64_t seed, std::uint64_t trial,
                                                  double width) {
  Rng rng = Rng::stream(seed, trial + 0x51ab0000u);
  SphericalReflectedTrial out;
  const double big_r = rng.uniform(0.5, 3.0);
  const double w = width > 0.0 ? width : rng.log_uniform(1.0, 12.0);
  const double r = big_r * std::exp(-w);
  const Vec3 x{0.0, 0.0, -1.0};
  SphericalCap caps[2];
  bool ok = false;
  for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
    for (auto& c : caps) {
      const double lo = rng.uniform(0.0, r);
      const double hi = rng.uniform(big_r, std::fmin(kPi - 0.05, big_r + 1.0));
      c.radius = 0.5 * (hi - lo);
      c.center = point_at_distance(rng, x, 0.5 * (hi + lo));
    }
    ok = cap_gap(caps[0], caps[1]) > 0.0;
  }
  if (!ok) return out;
  out.valid = true;
  out.annulus = Annulus(ExtendedPoint(Complex(0, 0)), r, big_r, Metric::spherical);
  out.k = DiskRegion(GeneralizedCircle::from_spherical_cap(caps[0].center, caps[0].radius), false);
  out.l = DiskRegion(GeneralizedCircle::from_spherical_cap(caps[1].center, caps[1].radius), false);
  const DiskRegion lprime = reflect_disk(out.k.boundary(), out.l);
  SphericalCap lp;
  lprime.spherical_cap(&lp.center, &lp.radius);

  // shared candidate stream; the orbit variant additionally avoids K, so its
  // free radius is never larger and its value never exceeds trial_value
  SphericalCap incumbent{x, 0.0};
  SphericalCap orbit_incumbent{x, 0.0};
  auto eval_candidate = [&](const Vec3& p) {
    const double to_l = std::acos(clamp1(dot(p, caps[1].center))) - caps[1].radius;
    const double to_lp = std::acos(clamp1(dot(p, lp.center))) - lp.radius;
    const double to_k = std::acos(clamp1(dot(p, caps[0].center))) - caps[0].radius;
    const double rad = std::fmin(to_l, to_lp);
    if (rad > 0.0) {
      const SphericalCap dd{p, rad};
      const double val = spherical_disk_width(r, big_r, x, dd);
      if (val > out.trial_value) {
        out.trial_value = val;
        incumbent = dd;
      }
    }
    const double orad = std::fmin(to_l, to_k);
    if (orad > 1e-7) {
      const SphericalCap dd{p, 0.999 * orad};
      const double val = spherical_disk_width(r, big_r, x, dd);
      if (val > out.orbit_value) {
        out.orbit_value = val;
        orbit_incumbent = dd;
        out.has_orbit_d = true;
      }
    }
  };
  for (int i = 0; i < 64; ++i) {
    const double d = rng.log_uniform(std::fmax(0.5 * r, 1e-6), big_r);
    eval_candidate(point_at_distance(rng, x, d));
  }
  for (int i = 0; i < 48; ++i) {
    const double step = 0.3 * std::exp(-0.06 * i);
    const Vec3 base = out.trial_value > 0.0 ? incumbent.center : x;
    eval_candidate(normalized(Vec3{base.x + step * rng.normal() * 0.1,
                                   base.y + step * rng.normal() * 0.1,
                                   base.z + step * rng.normal() * 0.1}));
  }
  if (out.has_orbit_d) {
    out.orbit_d = DiskRegion(
        GeneralizedCircle::from_spherical_cap(orbit_incumbent.center, orbit_incumbent.radius),
        false);
  }
  return out;
}

OrbitWidthResult orbit_width_check(const Annulus& a, const DiskRegion& k1, const DiskRegion& k2,
                                   const DiskRegion& d, int depth) {
  if (a.metric != Metric::spherical) throw error("orbit_width_check expects a spherical annulus");
  if (!meets_both_boundaries(a, SphereSet(k1), 1e-12) ||
      !meets_both_boundaries(a, SphereSet(k2), 1e-12)) {
    throw error("precondition violated: K1 and K2 must meet both boundary circles");
  }
  SchottkyConfig cfg({k1, k2});  // also enforces disjoint closures
  Vec3 dc;
  double dr;
  d.spherical_cap(&dc, &dr);
  for (int i = 0; i < 2; ++i) {
    Vec3 kc;
    double kr;
    cfg.disk(i).spherical_cap(&kc, &kr);
    if (std::acos(clamp1(dot(dc, kc))) < dr + kr) {
      throw error("precondition violated: D must avoid K1 and K2");
    }
  }
  OrbitWidthResult res;
  for (int n = 0; n <= depth; ++n) {
    for (const auto& w : enumerate_words(2, n)) {
      // iterate reflections right to left; stable for deeply nested images
      DiskRegion img = d;
      for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        img = reflect_disk(cfg.disk(*it).boundary(), img);
      }
      const auto rep = relative_width(a, SphereSet(img));
      res.words_checked++;
      if (rep.width > res.max_width) {
        res.max_width = rep.width;
        res.argmax_depth = n;
      }
    }
  }
  return res;
}

}  // namespace qcgeo
