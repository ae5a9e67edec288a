#include "qcgeo/grid.hpp"

#include <algorithm>
#include <cmath>

#include "qcgeo/moebius.hpp"

namespace qcgeo {

Grid::Grid(const GridSpec& spec) : spec_(spec) {
  if (spec_.nx < 2 || spec_.ny < 2) throw error("grid needs at least 2x2 cells");
  if (!(spec_.x1 > spec_.x0 && spec_.y1 > spec_.y0)) throw error("empty chart rectangle");
  area_.resize(cell_count());
  density_.resize(cell_count());
  const double hx = spec_.hx(), hy = spec_.hy();
  for (int iy = 0; iy < spec_.ny; ++iy) {
    for (int ix = 0; ix < spec_.nx; ++ix) {
      const int c = index(ix, iy);
      const Complex z = center(ix, iy);
      if (spec_.metric == Metric::euclidean) {
        area_[c] = hx * hy;
        density_[c] = 1.0;
      } else {
        const double cx0 = spec_.x0 + ix * hx;
        const double cy0 = spec_.y0 + iy * hy;
        area_[c] = spherical_area_rect(cx0, cx0 + hx, cy0, cy0 + hy);
        density_[c] = 2.0 / (1.0 + std::norm(z));
      }
      total_area_ += area_[c];
    }
  }
}

FamilySpec annulus_family(const Annulus& a) {
  FamilySpec fam;
  if (a.metric == Metric::euclidean) {
    const Complex x = a.center.value;
    fam.e = SphereSet(DiskRegion::disk(x, a.r));
    fam.f = SphereSet(DiskRegion::disk_complement(x, a.R));
    const double r = a.r, R = a.R;
    fam.domain = [x, r, R](Complex z) {
      const double d = std::abs(z - x);
      return d > r && d < R;
    };
    return fam;
  }
  const Vec3 x = lift(a.center);
  fam.e = SphereSet(DiskRegion(GeneralizedCircle::from_spherical_cap(x, a.r), false));
  fam.f = SphereSet(DiskRegion(GeneralizedCircle::from_spherical_cap(Vec3{-x.x, -x.y, -x.z}, kPi - a.R),
                               false));
  const double r = a.r, R = a.R;
  fam.domain = [x, r, R](Complex z) {
    const double d = std::acos(std::fmin(1.0, std::fmax(-1.0, dot(lift(ExtendedPoint(z)), x))));
    return d > r && d < R;
  };
  return fam;
}

bool set_contains_point(const SphereSet& s, Complex z) {
  if (std::holds_alternative<DiskRegion>(s)) {
    return std::get<DiskRegion>(s).contains_closure(ExtendedPoint(z), 1e-12);
  }
  return false;  // curve samples have measure zero; cell ownership uses boxes
}

namespace {

double box_dist_to_point(double x0, double x1, double y0, double y1, Complex p) {
  const double dx = std::fmax(0.0, std::fmax(x0 - p.real(), p.real() - x1));
  const double dy = std::fmax(0.0, std::fmax(y0 - p.imag(), p.imag() - y1));
  return std::hypot(dx, dy);
}

double box_max_dist_to_point(double x0, double x1, double y0, double y1, Complex p) {
  const double dx = std::fmax(std::abs(p.real() - x0), std::abs(p.real() - x1));
  const double dy = std::fmax(std::abs(p.imag() - y0), std::abs(p.imag() - y1));
  return std::hypot(dx, dy);
}

double seg_box_dist(Complex a, Complex b, double x0, double x1, double y0, double y1) {
  // coarse but adequate: sample the segment
  double best = HUGE_VAL;
  const int n = 8;
  for (int i = 0; i <= n; ++i) {
    best = std::fmin(best, box_dist_to_point(x0, x1, y0, y1, a + (b - a) * (static_cast<double>(i) / n)));
  }
  return best;
}

}  // namespace

double set_chart_box_dist(const SphereSet& s, double x0, double x1, double y0, double y1) {
  if (std::holds_alternative<DiskRegion>(s)) {
    const auto& d = std::get<DiskRegion>(s);
    const auto& b = d.boundary();
    if (b.kind() == GeneralizedCircle::Kind::circle) {
      const Complex c = b.center();
      const double rho = b.radius();
      if (d.negative_side()) {
        return std::fmax(0.0, box_dist_to_point(x0, x1, y0, y1, c) - rho);
      }
      // complement: box meets it unless the box is strictly inside the disk
      return std::fmax(0.0, rho - box_max_dist_to_point(x0, x1, y0, y1, c));
    }
    // half plane: distance from box to the half plane
    const Complex n = b.line_normal();
    const double off = b.line_offset();
    double best = HUGE_VAL;
    for (double cx : {x0, x1}) {
      for (double cy : {y0, y1}) {
        const double sgn = (Complex(cx, cy) * std::conj(n)).real() - off;
        best = std::fmin(best, d.negative_side() ? sgn : -sgn);
      }
    }
    return std::fmax(0.0, best);
  }
  const auto& c = std::get<ContinuumSample>(s);
  double best = HUGE_VAL;
  const std::size_t n = c.points.size();
  const std::size_t last = c.closed ? n : n - 1;
  for (std::size_t i = 0; i < last && n >= 2; ++i) {
    const auto& p = c.points[i];
    const auto& q = c.points[(i + 1) % n];
    if (p.at_infinity || q.at_infinity) continue;
    best = std::fmin(best, seg_box_dist(p.value, q.value, x0, x1, y0, y1));
  }
  if (n == 1 && !c.points[0].at_infinity) {
    best = box_dist_to_point(x0, x1, y0, y1, c.points[0].value);
  }
  return best;
}

double dist_to_set(const SphereSet& s, Complex z, Metric metric) {
  if (std::holds_alternative<DiskRegion>(s)) {
    const auto& d = std::get<DiskRegion>(s);
    if (metric == Metric::euclidean) return d.chart_dist(z);
    return d.spherical_dist_to(ExtendedPoint(z));
  }
  const auto& c = std::get<ContinuumSample>(s);
  double best = HUGE_VAL;
  for (const auto& p : c.points) {
    if (metric == Metric::euclidean && p.at_infinity) continue;
    best = std::fmin(best, dist(ExtendedPoint(z), p, metric));
  }
  return best;
}

FamilySpec map_family(const FamilySpec& fam, const MoebiusMap& m) {
  FamilySpec out;
  auto map_set = [&m](const SphereSet& s) -> SphereSet {
    if (std::holds_alternative<DiskRegion>(s)) return SphereSet(m.map_disk(std::get<DiskRegion>(s)));
    return SphereSet(
        map_continuum(std::get<ContinuumSample>(s), [&m](const ExtendedPoint& p) { return m.apply(p); }));
  };
  out.e = map_set(fam.e);
  out.f = map_set(fam.f);
  for (const auto& o : fam.obstacles) out.obstacles.push_back(map_set(o));
  if (fam.domain) {
    const MoebiusMap inv = m.inverse();
    auto mask = fam.domain;
    out.domain = [mask, inv](Complex z) {
      const ExtendedPoint w = inv.apply(ExtendedPoint(z));
      if (w.at_infinity) return false;
      return mask(w.value);
    };
  }
  return out;
}

}  // namespace qcgeo
