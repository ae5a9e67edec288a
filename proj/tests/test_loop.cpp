#include <cmath>

#include "doctest.h"
#include "qcgeo/loop.hpp"
#include "qcgeo/rng.hpp"

using namespace qcgeo;

TEST_CASE("circle loops are exactly round") {
  const auto l = circle_as_loop(Complex(1, -2), 1.5);
  CHECK(l.circularity_residual() == 0.0);
  CHECK(l.min_radius() == doctest::Approx(1.5));
  CHECK(std::abs(l.point(0.7) - (Complex(1, -2) + 1.5 * std::polar(1.0, 0.7))) < 1e-15);
}

TEST_CASE("loop fit reproduces Fourier data") {
  AnalyticLoop target;
  target.center = Complex(0.3, 0.1);
  target.cos_coef = {1.2, 0.0, 0.08, -0.03};
  target.sin_coef = {0.0, 0.0, -0.05, 0.02};
  const auto cloud = target.sample(512);
  double residual = 0.0;
  const auto fitted = fit_loop(cloud, 8, &residual);
  CHECK(residual < 2e-3);
  CHECK(std::abs(fitted.center - target.center) < 0.05);
  // point-wise agreement matters more than coefficient identity (the fitted
  // center differs slightly, shifting the harmonics)
  for (int i = 0; i < 64; ++i) {
    const double t = 2 * kPi * i / 64;
    double best = HUGE_VAL;
    for (int j = 0; j < 256; ++j) {
      best = std::fmin(best, std::abs(fitted.point(2 * kPi * j / 256) - target.point(t)));
    }
    CHECK(best < 5e-3);
  }
}

TEST_CASE("fit rejects clouds without positive radius") {
  std::vector<Complex> degenerate;
  for (int i = 0; i < 32; ++i) degenerate.push_back(Complex(i * 0.01, 0.0));
  CHECK_THROWS_AS(fit_loop(degenerate, 8), error);
  CHECK_THROWS_AS(circle_as_loop(Complex(0, 0), 0.0), error);
}

TEST_CASE("radius derivative matches finite differences") {
  AnalyticLoop l;
  l.center = Complex(0, 0);
  l.cos_coef = {1.0, 0.0, 0.1, 0.02};
  l.sin_coef = {0.0, 0.0, -0.07, 0.01};
  for (int i = 0; i < 32; ++i) {
    const double t = 2 * kPi * i / 32;
    const double h = 1e-6;
    const double fd = (l.radius(t + h) - l.radius(t - h)) / (2 * h);
    CHECK(l.radius_derivative(t) == doctest::Approx(fd).epsilon(1e-5));
  }
}
