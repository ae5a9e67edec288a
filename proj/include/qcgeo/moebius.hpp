#pragma once

#include <cmath>

#include "qcgeo/circle.hpp"
#include "qcgeo/rng.hpp"
#include "qcgeo/sphere.hpp"

namespace qcgeo {

// Fractional-linear transformation z -> (a z + b)/(c z + d), optionally
// precomposed with complex conjugation (anti-Moebius; reflections in circles
// are the basic examples). Composition-closed.
class MoebiusMap {
 public:
  MoebiusMap() = default;

  MoebiusMap(Complex a, Complex b, Complex c, Complex d, bool conjugating = false)
      : a_(a), b_(b), c_(c), d_(d), conjugating_(conjugating) {
    const double det = std::abs(a_ * d_ - b_ * c_);
    const double scale = std::abs(a_) + std::abs(b_) + std::abs(c_) + std::abs(d_);
    if (!(det > 1e-14 * scale * scale)) throw error("degenerate Moebius coefficient matrix");
    rescale();
  }

  static MoebiusMap identity() { return MoebiusMap(1, 0, 0, 1); }

  static MoebiusMap translation(Complex t) { return MoebiusMap(1, t, 0, 1); }

  static MoebiusMap scaling(Complex s) { return MoebiusMap(s, 0, 0, 1); }

  static MoebiusMap inversion() { return MoebiusMap(0, 1, 1, 0); }

  // Reflection across a generalized circle (anti-Moebius involution).
  static MoebiusMap reflection(const GeneralizedCircle& c) {
    if (c.kind() == GeneralizedCircle::Kind::circle) {
      const Complex a = c.center();
      const double rho = c.radius();
      return MoebiusMap(a, rho * rho - std::norm(a), 1, -std::conj(a), true);
    }
    const Complex n = c.line_normal();
    const double off = c.line_offset();
    return MoebiusMap(-n * n, 2.0 * off * n, 0, 1, true);
  }

  // Rotation of the sphere from SU(2) parameters (|a|^2 + |b|^2 = 1).
  static MoebiusMap sphere_rotation(Complex a, Complex b) {
    return MoebiusMap(a, b, -std::conj(b), std::conj(a));
  }

  static MoebiusMap random_rotation(Rng& rng) {
    Complex a(rng.normal(), rng.normal());
    Complex b(rng.normal(), rng.normal());
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    return sphere_rotation(a / n, b / n);
  }

  // The unique Moebius map sending (p, q, r) to (0, 1, inf).
  static MoebiusMap to_zero_one_inf(const ExtendedPoint& p, const ExtendedPoint& q,
                                    const ExtendedPoint& r);

  // The unique Moebius map sending one triple to another.
  static MoebiusMap triple_to_triple(const ExtendedPoint& p1, const ExtendedPoint& q1,
                                     const ExtendedPoint& r1, const ExtendedPoint& p2,
                                     const ExtendedPoint& q2, const ExtendedPoint& r2) {
    return compose(to_zero_one_inf(p2, q2, r2).inverse(), to_zero_one_inf(p1, q1, r1));
  }

  bool conjugating() const { return conjugating_; }
  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }

  ExtendedPoint apply(const ExtendedPoint& p) const {
    Complex z;
    if (p.at_infinity) {
      if (std::abs(c_) == 0.0) return ExtendedPoint::infinity();
      return ExtendedPoint(a_ / c_);
    }
    z = conjugating_ ? std::conj(p.value) : p.value;
    if (std::abs(z) > kChartSwitch) {
      const Complex u = 1.0 / z;
      const Complex den = c_ + d_ * u;
      if (std::abs(den) == 0.0) return ExtendedPoint::infinity();
      const Complex w = (a_ + b_ * u) / den;
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return ExtendedPoint::infinity();
      return ExtendedPoint(w);
    }
    const Complex den = c_ * z + d_;
    if (std::abs(den) == 0.0) return ExtendedPoint::infinity();
    const Complex w = (a_ * z + b_) / den;
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return ExtendedPoint::infinity();
    return ExtendedPoint(w);
  }

  ExtendedPoint operator()(const ExtendedPoint& p) const { return apply(p); }

  // m1 after m2.
  static MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2) {
    Complex a2 = m2.a_, b2 = m2.b_, c2 = m2.c_, d2 = m2.d_;
    if (m1.conjugating_) {
      a2 = std::conj(a2);
      b2 = std::conj(b2);
      c2 = std::conj(c2);
      d2 = std::conj(d2);
    }
    return MoebiusMap(m1.a_ * a2 + m1.b_ * c2, m1.a_ * b2 + m1.b_ * d2, m1.c_ * a2 + m1.d_ * c2,
                      m1.c_ * b2 + m1.d_ * d2, m1.conjugating_ != m2.conjugating_);
  }

  MoebiusMap inverse() const {
    if (!conjugating_) return MoebiusMap(d_, -b_, -c_, a_);
    return MoebiusMap(std::conj(d_), -std::conj(b_), -std::conj(c_), std::conj(a_), true);
  }

  GeneralizedCircle map_circle(const GeneralizedCircle& g) const {
    double A = g.A(), C = g.C();
    Complex B = g.B();
    if (conjugating_) B = std::conj(B);
    // H' = (M^{-1})^* H (M^{-1}) with M^{-1} ~ [[d, -b], [-c, a]].
    const Complex a = a_, b = b_, c = c_, d = d_;
    const double A2 = std::norm(d) * A - 2.0 * (c * std::conj(d) * B).real() + std::norm(c) * C;
    const Complex B2 =
        -b * std::conj(d) * A + b * std::conj(c) * std::conj(B) + a * std::conj(d) * B - a * std::conj(c) * C;
    const double C2 = std::norm(b) * A - 2.0 * (a * std::conj(b) * B).real() + std::norm(a) * C;
    return GeneralizedCircle::from_hermitian(A2, B2, C2);
  }

  DiskRegion map_disk(const DiskRegion& r) const {
    const GeneralizedCircle image = map_circle(r.boundary());
    // Track the side by pushing an interior anchor through the map.
    ExtendedPoint anchor = r.interior_point();
    ExtendedPoint image_anchor = apply(anchor);
    if (image.contains_boundary(image_anchor, 1e-12)) {
      // anchor landed on the boundary numerically; nudge inside
      const ExtendedPoint alt =
          r.boundary().kind() == GeneralizedCircle::Kind::circle && r.negative_side()
              ? ExtendedPoint(r.boundary().center() + 0.5 * r.boundary().radius())
              : anchor;
      image_anchor = apply(alt);
    }
    const double s = image.eval_sign(image_anchor);
    return DiskRegion(image, s < 0.0);
  }

 private:
  void rescale() {
    const double m =
        std::fmax(std::fmax(std::abs(a_), std::abs(b_)), std::fmax(std::abs(c_), std::abs(d_)));
    a_ /= m;
    b_ /= m;
    c_ /= m;
    d_ /= m;
  }

  Complex a_{1.0, 0.0}, b_{0.0, 0.0}, c_{0.0, 0.0}, d_{1.0, 0.0};
  bool conjugating_ = false;
};

inline MoebiusMap MoebiusMap::to_zero_one_inf(const ExtendedPoint& p, const ExtendedPoint& q,
                                              const ExtendedPoint& r) {
  // (z - p)(q - r) / ((z - r)(q - p)), with the usual infinity conventions.
  if (p.at_infinity) {
    // z -> (q - r)/(z - r)
    if (q.at_infinity || r.at_infinity) throw error("triple points must be distinct");
    return MoebiusMap(0, q.value - r.value, 1, -r.value);
  }
  if (q.at_infinity) {
    // z -> (z - p)/(z - r)
    if (r.at_infinity) throw error("triple points must be distinct");
    return MoebiusMap(1, -p.value, 1, -r.value);
  }
  if (r.at_infinity) {
    // z -> (z - p)/(q - p)
    return MoebiusMap(1, -p.value, 0, q.value - p.value);
  }
  const Complex zp = p.value, zq = q.value, zr = r.value;
  return MoebiusMap(zq - zr, -zp * (zq - zr), zq - zp, -zr * (zq - zp));
}

// Cross ratio |a-c||b-d| / (|a-d||b-c|) with infinity factors omitted.
inline double cross_ratio(const ExtendedPoint& a, const ExtendedPoint& b, const ExtendedPoint& c,
                          const ExtendedPoint& d) {
  const ExtendedPoint pts[4] = {a, b, c, d};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (pts[i].at_infinity && pts[j].at_infinity) throw error("cross ratio points must be distinct");
      if (!pts[i].at_infinity && !pts[j].at_infinity && pts[i].value == pts[j].value) {
        throw error("cross ratio points must be distinct");
      }
    }
  }
  // Chordal factors give the same ratio as Euclidean ones and handle infinity
  // without case analysis.
  const double num = chordal_dist(a, c) * chordal_dist(b, d);
  const double den = chordal_dist(a, d) * chordal_dist(b, c);
  return num / den;
}

}  // namespace qcgeo
