#include "qcgeo/continuum.hpp"

#include <algorithm>
#include <functional>

namespace qcgeo {

namespace {

double update_resolution(ContinuumSample& c) {
  double h = 0.0;
  const std::size_t n = c.points.size();
  if (n < 2) return 0.0;
  const std::size_t last = c.closed ? n : n - 1;
  for (std::size_t i = 0; i < last; ++i) {
    h = std::max(h, spherical_dist(c.points[i], c.points[(i + 1) % n]));
  }
  c.resolution = h;
  return h;
}

}  // namespace

ContinuumSample make_segment(Complex a, Complex b, int n) {
  if (n < 2) throw error("segment needs at least 2 samples");
  ContinuumSample c;
  c.points.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    c.points.emplace_back(a + t * (b - a));
  }
  c.closed = false;
  update_resolution(c);
  return c;
}

ContinuumSample make_circle_loop(Complex center, double radius, int n) {
  if (n < 3) throw error("loop needs at least 3 samples");
  ContinuumSample c;
  c.points.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * kPi * i / n;
    c.points.emplace_back(center + radius * Complex(std::cos(t), std::sin(t)));
  }
  c.closed = true;
  update_resolution(c);
  return c;
}

ContinuumSample make_arc(Complex center, double radius, double t0, double t1, int n) {
  if (n < 2) throw error("arc needs at least 2 samples");
  ContinuumSample c;
  c.points.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double t = t0 + (t1 - t0) * i / (n - 1);
    c.points.emplace_back(center + radius * Complex(std::cos(t), std::sin(t)));
  }
  c.closed = false;
  update_resolution(c);
  return c;
}

ContinuumSample resample(const ContinuumSample& c, double h) {
  if (c.points.size() < 2 || h <= 0.0) return c;
  ContinuumSample out;
  out.closed = c.closed;
  const std::size_t n = c.points.size();
  const std::size_t last = c.closed ? n : n - 1;
  for (std::size_t i = 0; i < last; ++i) {
    const ExtendedPoint& a = c.points[i];
    const ExtendedPoint& b = c.points[(i + 1) % n];
    out.points.push_back(a);
    const double d = spherical_dist(a, b);
    const int k = static_cast<int>(std::ceil(d / h));
    for (int j = 1; j < k; ++j) {
      out.points.push_back(geodesic_point(a, b, static_cast<double>(j) / k));
    }
  }
  if (!c.closed) out.points.push_back(c.points.back());
  update_resolution(out);
  return out;
}

ContinuumSample map_continuum(const ContinuumSample& c,
                              const std::function<ExtendedPoint(const ExtendedPoint&)>& f) {
  ContinuumSample out;
  out.closed = c.closed;
  out.points.reserve(c.points.size());
  for (const auto& p : c.points) out.points.push_back(f(p));
  update_resolution(out);
  return out;
}

double continuum_diam(const ContinuumSample& c, Metric metric) {
  double d = 0.0;
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    for (std::size_t j = i + 1; j < c.points.size(); ++j) {
      d = std::max(d, dist(c.points[i], c.points[j], metric));
    }
  }
  return d;
}

double continuum_dist(const ContinuumSample& a, const ContinuumSample& b, Metric metric) {
  double d = HUGE_VAL;
  for (const auto& p : a.points) {
    for (const auto& q : b.points) d = std::min(d, dist(p, q, metric));
  }
  return d;
}

double relative_distance(const ContinuumSample& e, const ContinuumSample& f, Metric metric) {
  if (e.size() < 2 || f.size() < 2) throw error("degenerate continuum in relative_distance");
  const double de = continuum_diam(e, metric);
  const double df = continuum_diam(f, metric);
  if (de == 0.0 || df == 0.0) throw error("degenerate continuum in relative_distance");
  return continuum_dist(e, f, metric) / std::min(de, df);
}

double dcross_estimate(const ContinuumSample& e, const ContinuumSample& f, Metric metric) {
  if (e.size() < 2 || f.size() < 2) throw error("degenerate continuum in dcross_estimate");
  const std::size_t ne = e.size(), nf = f.size();
  // cross-distance matrix (x in E, y in F)
  std::vector<double> cd(ne * nf);
  for (std::size_t i = 0; i < ne; ++i) {
    for (std::size_t j = 0; j < nf; ++j) cd[i * nf + j] = dist(e.points[i], f.points[j], metric);
  }
  double best = HUGE_VAL;
  for (std::size_t i1 = 0; i1 < ne; ++i1) {
    for (std::size_t i4 = 0; i4 < ne; ++i4) {
      if (i1 == i4) continue;
      const double d14 = dist(e.points[i1], e.points[i4], metric);
      for (std::size_t i2 = 0; i2 < nf; ++i2) {
        const double d24 = cd[i4 * nf + i2];
        for (std::size_t i3 = 0; i3 < nf; ++i3) {
          if (i2 == i3) continue;
          const double num = std::min(cd[i1 * nf + i3], d24);
          const double den = std::min(d14, dist(f.points[i2], f.points[i3], metric));
          if (den > 0.0) best = std::min(best, num / den);
        }
      }
    }
  }
  return best;
}

bool polyline_self_intersects(const ContinuumSample& loop) {
  // chart-space segment crossing test; points at infinity not supported here
  const std::size_t n = loop.points.size();
  if (n < 4) return false;
  auto seg = [&](std::size_t i, Complex* a, Complex* b) {
    *a = loop.points[i].value;
    *b = loop.points[(i + 1) % n].value;
  };
  auto orient = [](Complex a, Complex b, Complex c) {
    const double v = (b.real() - a.real()) * (c.imag() - a.imag()) -
                     (b.imag() - a.imag()) * (c.real() - a.real());
    return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
  };
  const std::size_t m = loop.closed ? n : n - 1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1 && loop.closed) continue;  // shared endpoint
      Complex a, b, c, d;
      seg(i, &a, &b);
      seg(j, &c, &d);
      if (orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0) return true;
    }
  }
  return false;
}

double quasicircle_constant(const ContinuumSample& loop, Metric metric) {
  if (!loop.closed || loop.size() < 4) throw error("quasicircle constant needs a closed loop");
  if (polyline_self_intersects(loop)) throw error("self-intersecting curve sample");
  const std::size_t n = loop.size();
  // diam[i][j] = diameter of the forward arc from node i to node j
  std::vector<double> arc_diam(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double dmax = 0.0;
    for (std::size_t len = 1; len < n; ++len) {
      const std::size_t j = (i + len) % n;
      for (std::size_t back = 0; back < len; ++back) {
        dmax = std::max(dmax, dist(loop.points[(i + back) % n], loop.points[j], metric));
      }
      arc_diam[i * n + j] = dmax;
    }
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = dist(loop.points[i], loop.points[j], metric);
      if (d < 1e-13) continue;
      const double forward = arc_diam[i * n + j];
      const double backward = arc_diam[j * n + i];
      worst = std::max(worst, std::min(forward, backward) / d);
    }
  }
  return std::max(worst, 1.0);
}

}  // namespace qcgeo
