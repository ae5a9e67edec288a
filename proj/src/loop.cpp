#include "qcgeo/loop.hpp"

#include <algorithm>
#include <cmath>

#include "qcgeo/fft.hpp"

namespace qcgeo {

AnalyticLoop circle_as_loop(Complex center, double radius) {
  if (!(radius > 0.0)) throw error("loop radius must be positive");
  AnalyticLoop l;
  l.center = center;
  l.cos_coef = {radius};
  l.sin_coef = {0.0};
  return l;
}

AnalyticLoop fit_loop(const std::vector<Complex>& cloud, int harmonics, double* fit_residual) {
  if (cloud.size() < 8) throw error("loop fit needs at least 8 samples");
  if (harmonics < 0) throw error("harmonics must be nonnegative");
  // Algebraic least-squares circle center (solves the 3x3 normal equations of
  // min sum (|z|^2 - 2 c.z - t)^2). Unlike the centroid it is insensitive to
  // uneven sampling along the curve, so round clouds read as round.
  Complex centroid(0, 0);
  {
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0, sq = 0, sqx = 0, sqy = 0;
    const double n = static_cast<double>(cloud.size());
    for (const auto& z : cloud) {
      const double x = z.real(), y = z.imag(), q = std::norm(z);
      sx += x;
      sy += y;
      sxx += x * x;
      syy += y * y;
      sxy += x * y;
      sq += q;
      sqx += q * x;
      sqy += q * y;
    }
    // normal equations for (2cx, 2cy, t):
    //   [sxx sxy sx] [2cx]   [sqx]
    //   [sxy syy sy] [2cy] = [sqy]
    //   [sx  sy  n ] [ t ]   [sq ]
    const double a11 = sxx, a12 = sxy, a13 = sx;
    const double a22 = syy, a23 = sy;
    const double det = a11 * (a22 * n - a23 * a23) - a12 * (a12 * n - a23 * a13) +
                       a13 * (a12 * a23 - a22 * a13);
    if (std::abs(det) < 1e-12 * (std::abs(a11 * a22 * n) + 1.0)) {
      throw error("loop fit failed: degenerate cloud");
    }
    const double d1 = sqx * (a22 * n - a23 * a23) - a12 * (sqy * n - a23 * sq) +
                      a13 * (sqy * a23 - a22 * sq);
    const double d2 = a11 * (sqy * n - a23 * sq) - sqx * (a12 * n - a23 * a13) +
                      a13 * (a12 * sq - sqy * a13);
    centroid = Complex(d1 / det / 2.0, d2 / det / 2.0);
  }

  struct Node {
    double t, r;
  };
  std::vector<Node> nodes;
  nodes.reserve(cloud.size());
  for (const auto& z : cloud) {
    const Complex d = z - centroid;
    nodes.push_back({std::arg(d), std::abs(d)});
  }
  std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) { return a.t < b.t; });
  // the cloud must wind around its centroid for a polar fit to make sense
  double max_gap = 2.0 * kPi + nodes.front().t - nodes.back().t;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    max_gap = std::fmax(max_gap, nodes[i].t - nodes[i - 1].t);
  }
  if (max_gap > kPi / 2) throw error("loop fit failed: cloud does not wind around its centroid");
  // angular interpolation onto a power-of-two grid
  const int n = 1024;
  std::vector<Complex> values(n);
  std::size_t j = 0;
  for (int i = 0; i < n; ++i) {
    const double t = -kPi + 2.0 * kPi * i / n;
    while (j + 1 < nodes.size() && nodes[j + 1].t < t) ++j;
    const Node& a = nodes[j];
    const Node& b = nodes[(j + 1) % nodes.size()];
    double span = b.t - a.t;
    double off = t - a.t;
    if (span <= 0) span += 2.0 * kPi;
    if (off < 0) off += 2.0 * kPi;
    const double s = span > 1e-12 ? std::fmin(1.0, off / span) : 0.0;
    values[i] = Complex(a.r + s * (b.r - a.r), 0.0);
  }
  fft_radix2(values, false);
  AnalyticLoop loop;
  loop.center = centroid;
  const int kmax = std::min(harmonics, n / 2 - 1);
  loop.cos_coef.assign(kmax + 1, 0.0);
  loop.sin_coef.assign(kmax + 1, 0.0);
  loop.cos_coef[0] = values[0].real() / n;
  for (int k = 1; k <= kmax; ++k) {
    // grid starts at angle -pi: shift the phase accordingly
    const Complex coeff = values[k] * (2.0 / n) * std::polar(1.0, -k * kPi);
    loop.cos_coef[k] = coeff.real();
    loop.sin_coef[k] = -coeff.imag();
  }
  if (fit_residual) {
    double worst = 0.0;
    for (const auto& nd : nodes) worst = std::fmax(worst, std::abs(loop.radius(nd.t) - nd.r));
    *fit_residual = worst;
  }
  if (!(loop.min_radius() > 0.0)) throw error("loop fit failed: radius not positive");
  return loop;
}

}  // namespace qcgeo
