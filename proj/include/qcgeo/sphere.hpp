#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qcgeo {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Threshold beyond which formulas switch to the w = 1/z chart.
inline constexpr double kChartSwitch = 1e3;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A point of the Riemann sphere: a finite complex value or the point at
// infinity. There is exactly one representation of infinity.
struct ExtendedPoint {
  Complex value{0.0, 0.0};
  bool at_infinity = false;

  ExtendedPoint() = default;
  ExtendedPoint(Complex z) : value(z) {}  // NOLINT: implicit by design
  ExtendedPoint(double x, double y) : value(x, y) {}

  static ExtendedPoint infinity() {
    ExtendedPoint p;
    p.at_infinity = true;
    p.value = Complex(0.0, 0.0);
    return p;
  }

  bool finite() const { return !at_infinity; }
};

// Unit vector in R^3; the sphere model behind the chordal/spherical metrics.
struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline Vec3 normalized(const Vec3& a) {
  const double n = norm(a);
  if (n == 0.0) throw error("cannot normalize zero vector");
  return {a.x / n, a.y / n, a.z / n};
}

// Stereographic lift onto the unit sphere; infinity maps to the north pole.
// For large |z| the computation runs in the 1/z chart.
inline Vec3 lift(const ExtendedPoint& p) {
  if (p.at_infinity) return {0.0, 0.0, 1.0};
  const Complex z = p.value;
  const double az = std::abs(z);
  if (az > kChartSwitch) {
    const Complex w = 1.0 / z;  // lift(1/z) with flipped pole
    const double d = 1.0 + std::norm(w);
    return {2.0 * w.real() / d, -2.0 * w.imag() / d, (1.0 - std::norm(w)) / d};
  }
  const double d = 1.0 + std::norm(z);
  return {2.0 * z.real() / d, 2.0 * z.imag() / d, (std::norm(z) - 1.0) / d};
}

inline ExtendedPoint unlift(const Vec3& v) {
  if (v.z > 1.0 - 1e-14) {
    if (v.z >= 1.0) return ExtendedPoint::infinity();
    const double d = 1.0 - v.z;
    const Complex z(v.x / d, v.y / d);
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return ExtendedPoint::infinity();
    return ExtendedPoint(z);
  }
  const double d = 1.0 - v.z;
  return ExtendedPoint(Complex(v.x / d, v.y / d));
}

// Chordal metric, values in [0,2]. chi(z,inf) = 2/sqrt(1+|z|^2).
inline double chordal_dist(const ExtendedPoint& p, const ExtendedPoint& q) {
  if (p.at_infinity && q.at_infinity) return 0.0;
  if (p.at_infinity || q.at_infinity) {
    const Complex z = p.at_infinity ? q.value : p.value;
    const double az = std::abs(z);
    if (az > kChartSwitch) return 2.0 * std::abs(1.0 / z) / std::sqrt(1.0 + std::norm(1.0 / z));
    return 2.0 / std::sqrt(1.0 + std::norm(z));
  }
  const Complex z = p.value, w = q.value;
  if (std::abs(z) > kChartSwitch && std::abs(w) > kChartSwitch) {
    // z -> 1/z is a chordal isometry.
    const Complex zi = 1.0 / z, wi = 1.0 / w;
    return 2.0 * std::abs(zi - wi) / std::sqrt((1.0 + std::norm(zi)) * (1.0 + std::norm(wi)));
  }
  return 2.0 * std::abs(z - w) / std::sqrt((1.0 + std::norm(z)) * (1.0 + std::norm(w)));
}

// Spherical (geodesic) metric, values in [0,pi]: sigma = 2 asin(chi/2).
inline double spherical_dist(const ExtendedPoint& p, const ExtendedPoint& q) {
  double half = 0.5 * chordal_dist(p, q);
  if (half > 1.0) half = 1.0;
  return 2.0 * std::asin(half);
}

// Geodesic point between a and b at parameter t in [0,1] (slerp on lifts).
inline ExtendedPoint geodesic_point(const ExtendedPoint& a, const ExtendedPoint& b, double t) {
  const Vec3 u = lift(a), v = lift(b);
  const double ang = std::acos(std::fmin(1.0, std::fmax(-1.0, dot(u, v))));
  if (ang < 1e-14) return a;
  const double s0 = std::sin((1.0 - t) * ang) / std::sin(ang);
  const double s1 = std::sin(t * ang) / std::sin(ang);
  return unlift(normalized(Vec3{s0 * u.x + s1 * v.x, s0 * u.y + s1 * v.y, s0 * u.z + s1 * v.z}));
}

// Area of the spherical disk of spherical radius rho (total sphere = 4*pi).
inline double spherical_cap_area(double rho) {
  if (rho < 0.0 || rho > kPi) throw error("cap radius outside [0,pi]");
  return 2.0 * kPi * (1.0 - std::cos(rho));
}

namespace detail {

// int_{y0}^{y1} 4 dy / (1 + x^2 + y^2)^2, closed form
inline double area_rect_inner(double x, double y0, double y1) {
  const double s = 1.0 + x * x;
  const double rs = std::sqrt(s);
  auto prim = [&](double y) { return 2.0 * (y / (s + y * y) + std::atan(y / rs) / rs) / s; };
  return prim(y1) - prim(y0);
}

inline double area_rect_gauss(double x0, double x1, double y0, double y1) {
  static const double gx[4] = {0.1834346424956498, 0.5255324099163290, 0.7966664774136267,
                               0.9602898564975363};
  static const double gw[4] = {0.3626837833783620, 0.3137066458778873, 0.2223810344533745,
                               0.1012285362903763};
  const double mid = 0.5 * (x0 + x1), half = 0.5 * (x1 - x0);
  double acc = 0.0;
  for (int i = 0; i < 4; ++i) {
    acc += gw[i] * (area_rect_inner(mid + half * gx[i], y0, y1) +
                    area_rect_inner(mid - half * gx[i], y0, y1));
  }
  return acc * half;
}

inline double area_rect_adaptive(double x0, double x1, double y0, double y1, double whole,
                                 int depth) {
  const double mid = 0.5 * (x0 + x1);
  const double left = area_rect_gauss(x0, mid, y0, y1);
  const double right = area_rect_gauss(mid, x1, y0, y1);
  if (depth > 24 || std::abs(left + right - whole) < 1e-13 * (1.0 + std::abs(whole))) {
    return left + right;
  }
  return area_rect_adaptive(x0, mid, y0, y1, left, depth + 1) +
         area_rect_adaptive(mid, x1, y0, y1, right, depth + 1);
}

}  // namespace detail

// Spherical area of an axis-aligned chart rectangle: closed-form
// antiderivative in y, adaptive Gauss panels in x.
inline double spherical_area_rect(double x0, double x1, double y0, double y1) {
  return detail::area_rect_adaptive(x0, x1, y0, y1, detail::area_rect_gauss(x0, x1, y0, y1), 0);
}

inline double euclid_dist(const ExtendedPoint& p, const ExtendedPoint& q) {
  if (p.at_infinity || q.at_infinity) return p.at_infinity == q.at_infinity ? 0.0 : HUGE_VAL;
  return std::abs(p.value - q.value);
}

enum class Metric { euclidean, spherical };

inline double dist(const ExtendedPoint& p, const ExtendedPoint& q, Metric m) {
  return m == Metric::euclidean ? euclid_dist(p, q) : spherical_dist(p, q);
}

}  // namespace qcgeo
