#pragma once

#include <vector>

#include "qcgeo/circle.hpp"
#include "qcgeo/sphere.hpp"

namespace qcgeo {

// A star-like analytic loop: t -> center + r(t) e^{it} with r a truncated
// Fourier series, r(t) >= r_min > 0. Positive polar graphs are automatically
// simple curves.
struct AnalyticLoop {
  Complex center{0.0, 0.0};
  std::vector<double> cos_coef{1.0};  // a_0, a_1, ..., a_K
  std::vector<double> sin_coef{0.0};  // unused b_0, b_1, ..., b_K

  int harmonics() const { return static_cast<int>(cos_coef.size()) - 1; }

  double radius(double t) const {
    double r = cos_coef[0];
    for (std::size_t k = 1; k < cos_coef.size(); ++k) {
      r += cos_coef[k] * std::cos(k * t) + sin_coef[k] * std::sin(k * t);
    }
    return r;
  }

  double radius_derivative(double t) const {
    double d = 0.0;
    for (std::size_t k = 1; k < cos_coef.size(); ++k) {
      d += k * (-cos_coef[k] * std::sin(k * t) + sin_coef[k] * std::cos(k * t));
    }
    return d;
  }

  Complex point(double t) const { return center + radius(t) * Complex(std::cos(t), std::sin(t)); }

  std::vector<Complex> sample(int n) const {
    std::vector<Complex> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) pts.push_back(point(2.0 * kPi * i / n));
    return pts;
  }

  double min_radius(int probes = 512) const {
    double m = HUGE_VAL;
    for (int i = 0; i < probes; ++i) m = std::fmin(m, radius(2.0 * kPi * i / probes));
    return m;
  }

  // (max r - min r) / mean r; zero exactly for a round circle about center.
  double circularity_residual(int probes = 512) const {
    double lo = HUGE_VAL, hi = 0.0, mean = 0.0;
    for (int i = 0; i < probes; ++i) {
      const double r = radius(2.0 * kPi * i / probes);
      lo = std::fmin(lo, r);
      hi = std::fmax(hi, r);
      mean += r;
    }
    mean /= probes;
    return (hi - lo) / mean;
  }
};

AnalyticLoop circle_as_loop(Complex center, double radius);

// Fits a loop to a point cloud: the star center is the centroid, the radius
// function is interpolated over angle and truncated to the given number of
// harmonics. fit_residual (if given) receives the max radial deviation of the
// cloud from the fit.
AnalyticLoop fit_loop(const std::vector<Complex>& cloud, int harmonics,
                      double* fit_residual = nullptr);

}  // namespace qcgeo
