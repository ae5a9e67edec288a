#include "qcgeo/annulus.hpp"

#include <algorithm>
#include <cmath>

namespace qcgeo {

namespace {

void disk_distance_range(const ExtendedPoint& x, const DiskRegion& k, Metric metric, double* lo,
                         double* hi) {
  if (metric == Metric::spherical) {
    Vec3 c;
    double rho;
    k.spherical_cap(&c, &rho);
    const double d = std::acos(std::fmin(1.0, std::fmax(-1.0, dot(lift(x), c))));
    *lo = std::fmax(0.0, d - rho);
    *hi = std::fmin(kPi, d + rho);
    return;
  }
  if (x.at_infinity) throw error("euclidean distance range needs a finite base point");
  const auto& b = k.boundary();
  if (b.kind() == GeneralizedCircle::Kind::circle) {
    const double d = std::abs(x.value - b.center());
    const double rho = b.radius();
    if (k.negative_side()) {  // bounded disk
      *lo = std::fmax(0.0, d - rho);
      *hi = d + rho;
    } else {  // complement of a disk, contains infinity
      *lo = std::fmax(0.0, rho - d);
      *hi = HUGE_VAL;
    }
    return;
  }
  // half plane
  const double s = (x.value * std::conj(b.line_normal())).real() - b.line_offset();
  const double signed_into = k.negative_side() ? s : -s;
  *lo = std::fmax(0.0, signed_into);
  *hi = HUGE_VAL;
}

void continuum_distance_range(const ExtendedPoint& x, const ContinuumSample& k, Metric metric,
                              double* lo, double* hi) {
  *lo = HUGE_VAL;
  *hi = 0.0;
  for (const auto& p : k.points) {
    if (metric == Metric::euclidean && p.at_infinity) {
      *hi = HUGE_VAL;
      continue;
    }
    const double d = dist(x, p, metric);
    *lo = std::fmin(*lo, d);
    *hi = std::fmax(*hi, d);
  }
}

}  // namespace

void distance_range(const ExtendedPoint& x, const SphereSet& k, Metric metric, double* lo,
                    double* hi) {
  if (std::holds_alternative<DiskRegion>(k)) {
    disk_distance_range(x, std::get<DiskRegion>(k), metric, lo, hi);
  } else {
    continuum_distance_range(x, std::get<ContinuumSample>(k), metric, lo, hi);
  }
}

RelativeWidthReport relative_width(const Annulus& a, const SphereSet& k) {
  double lo, hi;
  distance_range(a.center, k, a.metric, &lo, &hi);
  RelativeWidthReport rep;
  // Connected sets attain every distance in [lo, hi], so the set meets the
  // annulus exactly when the intervals overlap.
  if (hi < a.r || lo > a.R) {
    rep.intersects = false;
    rep.width = 0.0;
    rep.r_A = rep.R_A = 0.0;
    return rep;
  }
  rep.intersects = true;
  rep.r_A = std::fmax(lo, a.r);
  rep.R_A = std::fmin(hi, a.R);
  rep.width = std::log(rep.R_A / rep.r_A);
  return rep;
}

bool meets_both_boundaries(const Annulus& a, const SphereSet& k, double tol) {
  double lo, hi;
  distance_range(a.center, k, a.metric, &lo, &hi);
  return lo <= a.r + tol && hi >= a.R - tol;
}

SubannulusResult subannulus_select(const Annulus& a, const std::vector<SphereSet>& sets) {
  const double w = a.width();
  const double w13 = std::pow(w, 1.0 / 3.0);

  std::vector<RelativeWidthReport> reports;
  reports.reserve(sets.size());
  for (const auto& k : sets) reports.push_back(relative_width(a, k));

  int i1 = -1;
  double best = w13;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (reports[i].width > best) {
      best = reports[i].width;
      i1 = static_cast<int>(i);
    }
  }
  if (i1 < 0) {
    SubannulusResult res{a, SubannulusAlternative::one_small, std::nullopt, {-1, -1}};
    return res;
  }

  const Annulus a1(a.center, reports[i1].r_A, reports[i1].R_A, a.metric);
  const double w1 = a1.width();
  const double w1_13 = std::pow(w1, 1.0 / 3.0);

  int i2 = -1;
  double best2 = w1_13;
  std::vector<RelativeWidthReport> reports1;
  reports1.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    reports1.push_back(relative_width(a1, sets[i]));
    if (static_cast<int>(i) == i1) continue;
    if (reports1[i].width > best2) {
      best2 = reports1[i].width;
      i2 = static_cast<int>(i);
    }
  }
  if (i2 < 0) {
    SubannulusResult res{a1, SubannulusAlternative::one_small, i1, {-1, -1}};
    return res;
  }

  const Annulus a2(a.center, reports1[i2].r_A, reports1[i2].R_A, a.metric);
  SubannulusResult res{a2, SubannulusAlternative::two_spanning, std::nullopt, {i1, i2}};
  return res;
}

}  // namespace qcgeo
