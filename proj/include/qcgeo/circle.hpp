#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "qcgeo/sphere.hpp"

namespace qcgeo {

// A circle or line in the plane, i.e. a circle on the sphere. Stored in
// kind-specific fields so tiny radii survive; the Hermitian form
// A|z|^2 + conj(B) z + B conj(z) + C used by Moebius transforms is derived
// on demand. A sign flag keeps the form's orientation, so the two
// complementary sides stay distinguishable across conversions.
class GeneralizedCircle {
 public:
  enum class Kind { circle, line };

  static GeneralizedCircle circle(Complex center, double radius) {
    if (!(radius > 0.0)) throw error("circle radius must be positive");
    GeneralizedCircle g;
    g.kind_ = Kind::circle;
    g.center_ = center;
    g.radius_ = radius;
    return g;
  }

  // Line { z : Re(z * conj(normal)) = offset } with |normal| = 1.
  static GeneralizedCircle line(Complex unit_normal, double offset) {
    const double n = std::abs(unit_normal);
    if (std::abs(n - 1.0) > 1e-9) throw error("line normal must have unit modulus");
    GeneralizedCircle g;
    g.kind_ = Kind::line;
    g.normal_ = unit_normal / n;
    g.offset_ = offset;
    return g;
  }

  static GeneralizedCircle from_hermitian(double A, Complex B, double C) {
    const double scale = std::abs(A) + std::abs(B) + std::abs(C);
    if (scale == 0.0) throw error("null circle coefficients");
    if (std::abs(A) < 1e-13 * scale) {
      GeneralizedCircle g;
      g.kind_ = Kind::line;
      g.normal_ = B / std::abs(B);
      g.offset_ = -C / (2.0 * std::abs(B));
      return g;
    }
    GeneralizedCircle g;
    g.kind_ = Kind::circle;
    g.center_ = -B / A;
    const double r2 = (std::norm(B) - A * C) / (A * A);
    if (!(r2 > 0.0)) throw error("degenerate circle");
    g.radius_ = std::sqrt(r2);
    g.negated_ = A < 0.0;
    return g;
  }

  // Circle through three pairwise distinct points (any of them may be inf);
  // throws on (near-)collinear triples that do not determine a line.
  static GeneralizedCircle through(const ExtendedPoint& p, const ExtendedPoint& q,
                                   const ExtendedPoint& r);

  Kind kind() const { return kind_; }

  Complex center() const {
    if (kind_ != Kind::circle) throw error("line has no center");
    return center_;
  }

  double radius() const {
    if (kind_ != Kind::circle) throw error("line has no radius");
    return radius_;
  }

  Complex line_normal() const {
    if (kind_ != Kind::line) throw error("circle has no line normal");
    return normal_;
  }

  double line_offset() const {
    if (kind_ != Kind::line) throw error("circle has no line offset");
    return offset_;
  }

  double A() const { return kind_ == Kind::circle ? sign() : 0.0; }
  Complex B() const { return kind_ == Kind::circle ? -sign() * center_ : normal_; }
  double C() const {
    return kind_ == Kind::circle ? sign() * (std::norm(center_) - radius_ * radius_)
                                 : -2.0 * offset_;
  }

  // Signed evaluation of the Hermitian form; 0 on the set, sign encodes side.
  // Infinity is handled through the leading coefficient.
  double eval_sign(const ExtendedPoint& p) const {
    if (p.at_infinity) return kind_ == Kind::line ? 0.0 : sign();
    const Complex z = p.value;
    if (kind_ == Kind::line) {
      return 2.0 * ((z * std::conj(normal_)).real() - offset_);
    }
    if (std::abs(z) > kChartSwitch || std::abs(center_) > kChartSwitch) {
      const Complex w = 1.0 / z;
      const double A = sign(), C = sign() * (std::norm(center_) - radius_ * radius_);
      const Complex B = -sign() * center_;
      return A + 2.0 * (B * std::conj(w)).real() + C * std::norm(w);
    }
    const double d = std::abs(z - center_);
    return sign() * (d - radius_) * (d + radius_);
  }

  bool contains_boundary(const ExtendedPoint& p, double tol = 1e-9) const {
    return std::abs(signed_chart_dist(p)) <= tol;
  }

  // Approximate chart distance from the boundary (exact for circles/lines at
  // finite points).
  double signed_chart_dist(const ExtendedPoint& p) const {
    if (p.at_infinity) return kind() == Kind::line ? 0.0 : HUGE_VAL;
    if (kind() == Kind::circle) return std::abs(p.value - center()) - radius();
    return (p.value * std::conj(line_normal())).real() - line_offset();
  }

  // Reflection (inversion) across this circle or line.
  ExtendedPoint reflect(const ExtendedPoint& p) const;

  // Point on the boundary at parameter t in [0, 2*pi) (circles) or arclength
  // parameter t (lines).
  ExtendedPoint boundary_point(double t) const {
    if (kind() == Kind::circle) return ExtendedPoint(center() + radius() * Complex(std::cos(t), std::sin(t)));
    const Complex n = line_normal();
    const Complex tangent(-n.imag(), n.real());
    return ExtendedPoint(line_offset() * n + t * tangent);
  }

  // Spherical center/radius of the corresponding cap on the given side:
  // negative_side selects { z : form(z) < 0 } (the bounded side for circles
  // with positive orientation).
  void spherical_cap(bool negative_side, Vec3* cap_center, double* cap_radius) const;

  static GeneralizedCircle from_spherical_cap(const Vec3& cap_center, double cap_radius);

 private:
  double sign() const { return negated_ ? -1.0 : 1.0; }

  Kind kind_ = Kind::circle;
  Complex center_{0.0, 0.0};
  double radius_ = 1.0;
  Complex normal_{1.0, 0.0};
  double offset_ = 0.0;
  bool negated_ = false;
};

inline ExtendedPoint GeneralizedCircle::reflect(const ExtendedPoint& p) const {
  if (kind() == Kind::line) {
    const Complex n = line_normal();
    if (p.at_infinity) return ExtendedPoint::infinity();
    const Complex z = p.value;
    return ExtendedPoint(z - 2.0 * ((z * std::conj(n)).real() - line_offset()) * n);
  }
  const Complex a = center();
  const double rho = radius();
  if (p.at_infinity) return ExtendedPoint(a);
  const Complex d = std::conj(p.value - a);
  if (std::abs(d) == 0.0) return ExtendedPoint::infinity();
  if (std::abs(d) < rho * 1e-300) return ExtendedPoint::infinity();
  return ExtendedPoint(a + rho * rho / d);
}

inline GeneralizedCircle GeneralizedCircle::through(const ExtendedPoint& p, const ExtendedPoint& q,
                                                    const ExtendedPoint& r) {
  // Work on the sphere: the plane through the three lifted points cuts the
  // sphere in the circle; its chart image is recovered from the cap form.
  const Vec3 u = lift(p), v = lift(q), w = lift(r);
  const Vec3 nv = cross(Vec3{v.x - u.x, v.y - u.y, v.z - u.z}, Vec3{w.x - u.x, w.y - u.y, w.z - u.z});
  const double nn = norm(nv);
  if (nn < 1e-13) throw error("points nearly collinear on the sphere");
  const Vec3 n = {nv.x / nn, nv.y / nn, nv.z / nn};
  const double c = dot(n, u);  // plane n.x = c, |c| < 1
  // Chart equation: (n3 - c)|z|^2 + 2 n1 x + 2 n2 y - (n3 + c) = 0.
  return from_hermitian(n.z - c, Complex(n.x, n.y), -(n.z + c));
}

inline void GeneralizedCircle::spherical_cap(bool negative_side, Vec3* cap_center,
                                             double* cap_radius) const {
  // form(z) = s * (1+|z|^2) * (dot(lift(z), n) - c) for a unit normal n; the
  // side with form < 0 is the cap around -n with radius pi - acos(c).
  const double A = this->A(), C = this->C();
  const Complex B = this->B();
  const double n3 = 0.5 * (A - C);
  const double c = -0.5 * (A + C);
  Vec3 n{B.real(), B.imag(), n3};
  const double s = norm(n);
  n = {n.x / s, n.y / s, n.z / s};
  double cc = std::fmin(1.0, std::fmax(-1.0, c / s));
  double small_radius = std::acos(cc);  // radius of the cap around +n
  if (kind_ == Kind::circle) {
    // acos loses caps near radius 0 or pi; measure the diametral chart pair
    // along the radial geodesic instead
    const Complex u = std::abs(center_) > 1e-12 ? center_ / std::abs(center_) : Complex(1, 0);
    const double tiny = 0.5 * spherical_dist(ExtendedPoint(center_ - radius_ * u),
                                             ExtendedPoint(center_ + radius_ * u));
    if (tiny < 1e-4) small_radius = cc >= 0.0 ? tiny : kPi - tiny;
  }
  if (negative_side) {
    *cap_center = {-n.x, -n.y, -n.z};
    *cap_radius = kPi - small_radius;
  } else {
    *cap_center = n;
    *cap_radius = small_radius;
  }
}

inline GeneralizedCircle GeneralizedCircle::from_spherical_cap(const Vec3& cap_center,
                                                               double cap_radius) {
  const Vec3 n = normalized(cap_center);
  const double c = std::cos(cap_radius);
  return from_hermitian(n.z - c, Complex(n.x, n.y), -(n.z + c));
}

// One complementary component of a generalized circle. For circles,
// bounded_side=true selects the bounded disk; for lines it selects the
// negative-form side { Re(z conj(n)) < offset }.
class DiskRegion {
 public:
  DiskRegion(GeneralizedCircle boundary, bool negative_form_side)
      : boundary_(boundary), negative_side_(negative_form_side) {}

  static DiskRegion disk(Complex center, double radius) {
    return DiskRegion(GeneralizedCircle::circle(center, radius), true);
  }

  static DiskRegion disk_complement(Complex center, double radius) {
    return DiskRegion(GeneralizedCircle::circle(center, radius), false);
  }

  static DiskRegion half_plane(Complex unit_normal, double offset) {
    // the side the normal points away from: Re(z conj(n)) < offset
    return DiskRegion(GeneralizedCircle::line(unit_normal, offset), true);
  }

  const GeneralizedCircle& boundary() const { return boundary_; }
  bool negative_side() const { return negative_side_; }

  bool contains(const ExtendedPoint& p) const {
    const double s = boundary_.eval_sign(p);
    return negative_side_ ? s < 0.0 : s > 0.0;
  }

  bool contains_closure(const ExtendedPoint& p, double tol = 1e-12) const {
    return contains(p) || boundary_.contains_boundary(p, tol);
  }

  // An interior anchor point, used when tracking sides through maps.
  ExtendedPoint interior_point() const {
    if (boundary_.kind() == GeneralizedCircle::Kind::circle) {
      if (negative_side_) return ExtendedPoint(boundary_.center());
      return ExtendedPoint::infinity();
    }
    const Complex n = boundary_.line_normal();
    const double off = boundary_.line_offset();
    return ExtendedPoint((off + (negative_side_ ? -1.0 : 1.0)) * n);
  }

  // True when the region is a bounded chart disk.
  bool is_bounded_disk() const {
    return boundary_.kind() == GeneralizedCircle::Kind::circle && negative_side_;
  }

  void spherical_cap(Vec3* center, double* radius) const {
    boundary_.spherical_cap(negative_side_, center, radius);
  }

  double spherical_area() const {
    Vec3 c;
    double r;
    spherical_cap(&c, &r);
    return spherical_cap_area(r);
  }

  // Distance from a finite chart point to the closed region (chart metric, 0
  // inside). Only meaningful for bounded representations.
  double chart_dist(Complex z) const {
    const double d = boundary_.signed_chart_dist(ExtendedPoint(z));
    if (boundary_.kind() == GeneralizedCircle::Kind::circle) {
      return negative_side_ ? std::fmax(0.0, d) : std::fmax(0.0, -d);
    }
    return negative_side_ ? std::fmax(0.0, d) : std::fmax(0.0, -d);
  }

  // Spherical distance from a point to the closed cap.
  double spherical_dist_to(const ExtendedPoint& p) const {
    Vec3 c;
    double r;
    spherical_cap(&c, &r);
    const double d = std::acos(std::fmin(1.0, std::fmax(-1.0, dot(lift(p), c))));
    return std::fmax(0.0, d - r);
  }

 private:
  GeneralizedCircle boundary_;
  bool negative_side_;
};

// Reflection of a generalized circle across another, in closed form. Stable
// for tiny circles where the Hermitian-form route cancels.
inline GeneralizedCircle reflect_circle(const GeneralizedCircle& mirror,
                                        const GeneralizedCircle& g) {
  if (mirror.kind() == GeneralizedCircle::Kind::line) {
    const Complex n = mirror.line_normal();
    const double off = mirror.line_offset();
    auto mirror_point = [&](Complex z) { return z - 2.0 * ((z * std::conj(n)).real() - off) * n; };
    if (g.kind() == GeneralizedCircle::Kind::circle) {
      return GeneralizedCircle::circle(mirror_point(g.center()), g.radius());
    }
    // line -> line with reflected normal
    const Complex gn = g.line_normal();
    const Complex rn = gn - 2.0 * (gn * std::conj(n)).real() * n;
    const Complex p = mirror_point(g.line_offset() * gn);
    return GeneralizedCircle::line(rn / std::abs(rn), (p * std::conj(rn)).real() / std::abs(rn));
  }
  const Complex a = mirror.center();
  const double rho = mirror.radius();
  if (g.kind() == GeneralizedCircle::Kind::circle) {
    const Complex d = g.center() - a;
    const double t = std::norm(d) - g.radius() * g.radius();
    if (std::abs(t) < 1e-14 * rho * rho) {
      // circle through the mirror center: image is a line
      const Complex n = d / std::abs(d);
      const double offset = rho * rho / (2.0 * g.radius());
      return GeneralizedCircle::line(n, offset + (a * std::conj(n)).real());
    }
    const double k = rho * rho / t;
    return GeneralizedCircle::circle(a + k * d, std::abs(k) * g.radius());
  }
  // line not through the mirror center -> circle through the center
  const Complex n = g.line_normal();
  const double h = g.line_offset() - (a * std::conj(n)).real();  // signed distance from a
  if (std::abs(h) < 1e-14) {
    return g;  // line through the center reflects to itself
  }
  const Complex center = a + n * (rho * rho / (2.0 * h));
  return GeneralizedCircle::circle(center, rho * rho / (2.0 * std::abs(h)));
}

// Reflection of a disk region: the side tracks whether the mirror's center
// lies in the region.
inline DiskRegion reflect_disk(const GeneralizedCircle& mirror, const DiskRegion& d) {
  const GeneralizedCircle image = reflect_circle(mirror, d.boundary());
  if (mirror.kind() == GeneralizedCircle::Kind::line) {
    if (image.kind() == GeneralizedCircle::Kind::circle &&
        d.boundary().kind() == GeneralizedCircle::Kind::circle) {
      return DiskRegion(image, d.negative_side());
    }
    // resolve by an anchor point
    const ExtendedPoint img_anchor = mirror.reflect(d.interior_point());
    return DiskRegion(image, image.eval_sign(img_anchor) < 0.0);
  }
  // circle mirror: the image of the region not containing the mirror center
  // is the bounded side iff the original bounded disk misses the center
  const ExtendedPoint center_img = ExtendedPoint(mirror.center());
  const bool center_inside = d.contains_closure(center_img, 0.0);
  if (image.kind() == GeneralizedCircle::Kind::circle) {
    // reflection swaps inside/outside of the mirror; the region's image
    // contains infinity exactly when the region contained the mirror center
    return DiskRegion(image, !center_inside);
  }
  const auto anchor = d.interior_point();
  const ExtendedPoint img_anchor = mirror.reflect(anchor);
  return DiskRegion(image, image.eval_sign(img_anchor) < 0.0);
}

// Chart distance between two disjoint closed chart disks (bounded reps).
inline double disk_gap(const DiskRegion& a, const DiskRegion& b) {
  if (a.is_bounded_disk() && b.is_bounded_disk()) {
    const auto& ca = a.boundary();
    const auto& cb = b.boundary();
    return std::abs(ca.center() - cb.center()) - ca.radius() - cb.radius();
  }
  throw error("disk_gap requires bounded chart disks");
}

// Least-squares-free circle fit: picks three well-separated samples and
// refits, re-selecting when the triple is nearly collinear; returns the
// largest residual of the remaining samples.
inline GeneralizedCircle fit_circle(const std::vector<ExtendedPoint>& pts, double* residual) {
  if (pts.size() < 3) throw error("need at least 3 samples to fit a circle");
  const std::size_t n = pts.size();
  GeneralizedCircle best = GeneralizedCircle::circle(Complex(0, 0), 1.0);
  bool found = false;
  for (std::size_t attempt = 0; attempt < n && !found; ++attempt) {
    const std::size_t i = attempt;
    const std::size_t j = (attempt + n / 3) % n;
    const std::size_t k = (attempt + (2 * n) / 3) % n;
    if (i == j || j == k || i == k) continue;
    try {
      best = GeneralizedCircle::through(pts[i], pts[j], pts[k]);
      found = true;
    } catch (const error&) {
      continue;
    }
  }
  if (!found) throw error("all sample triples nearly collinear");
  if (residual) {
    double worst = 0.0;
    for (const auto& p : pts) {
      // residual measured on the sphere via the cap form, scale-free
      const Vec3 v = lift(p);
      Vec3 c;
      double r;
      best.spherical_cap(true, &c, &r);
      worst = std::fmax(worst, std::abs(std::acos(std::fmin(1.0, std::fmax(-1.0, dot(v, c)))) - r));
    }
    *residual = worst;
  }
  return best;
}

}  // namespace qcgeo
