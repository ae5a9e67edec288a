#include "qcgeo/theodorsen.hpp"

#include <algorithm>
#include <cmath>

#include "qcgeo/fft.hpp"

namespace qcgeo {

namespace {

// Conjugate function on uniform samples: cos k -> sin k, sin k -> -cos k.
std::vector<double> conjugate_samples(const std::vector<double>& u) {
  const std::size_t n = u.size();
  std::vector<Complex> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = Complex(u[i], 0.0);
  fft_radix2(a, false);
  // multiply by -i sign(k)
  for (std::size_t k = 1; k < n / 2; ++k) {
    a[k] *= Complex(0.0, -1.0);
    a[n - k] *= Complex(0.0, 1.0);
  }
  a[0] = 0.0;
  a[n / 2] = 0.0;
  fft_radix2(a, true);
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = a[i].real() / static_cast<double>(n);
  return v;
}

}  // namespace

Complex RiemannMap::forward(Complex w) const {
  if (side == MapSide::exterior) {
    Complex acc = coef[0] * w + coef[1];
    Complex p(1.0, 0.0);
    for (std::size_t m = 2; m < coef.size(); ++m) {
      p /= w;
      acc += coef[m] * p;
    }
    return acc;
  }
  Complex acc = center;
  Complex p(1.0, 0.0);
  for (std::size_t m = 0; m < coef.size(); ++m) {
    p *= w;
    acc += coef[m] * p;
  }
  return acc;
}

Complex RiemannMap::derivative(Complex w) const {
  if (side == MapSide::exterior) {
    Complex acc = coef[0];
    Complex p(1.0, 0.0);
    for (std::size_t m = 2; m < coef.size(); ++m) {
      p /= w;
      acc += -static_cast<double>(m - 1) * coef[m] * p / w;
    }
    return acc;
  }
  Complex acc(0.0, 0.0);
  Complex p(1.0, 0.0);
  for (std::size_t m = 0; m < coef.size(); ++m) {
    acc += static_cast<double>(m + 1) * coef[m] * p;
    p *= w;
  }
  return acc;
}

Complex RiemannMap::to_round(Complex z) const {
  Complex w;
  if (side == MapSide::exterior) {
    w = (z - coef[1]) / coef[0];
    if (std::abs(w) < 1.35) {
      // near the boundary the affine seed is unreliable: start from the node
      // whose image angle about the star center matches z (phi is monotone)
      const double target = std::arg(z - star_center);
      int best = 0;
      double best_gap = HUGE_VAL;
      for (int k = 0; k < nodes; ++k) {
        const double gap = std::abs(std::remainder(phi[k] - target, 2.0 * kPi));
        if (gap < best_gap) {
          best_gap = gap;
          best = k;
        }
      }
      w = std::polar(1.0, 2.0 * kPi * best / nodes);
    }
  } else {
    w = (z - center) / coef[0];
    if (std::abs(w) > 1.0) w /= std::abs(w);
  }
  const double scale = 1.0 + std::abs(z);
  for (int it = 0; it < 60; ++it) {
    const Complex f = forward(w) - z;
    if (std::abs(f) < 1e-14 * scale) break;
    const Complex d = derivative(w);
    if (std::abs(d) == 0.0) break;
    Complex step = f / d;
    // trust region keeps the truncated series in its reliable range
    if (std::abs(step) > 0.4) step *= 0.4 / std::abs(step);
    Complex cand = w - step;
    if (side == MapSide::exterior && std::abs(cand) < 0.6) {
      cand = w - 0.25 * step;
    }
    if (side == MapSide::interior && std::abs(cand) > 1.6) {
      cand = w - 0.25 * step;
    }
    w = cand;
  }
  return w;
}

RiemannMap riemann_step(const AnalyticLoop& loop, MapSide side, int log2_nodes, double tol,
                        int max_iters) {
  if (loop.min_radius() <= 0.0) throw error("riemann_step requires a positive radius function");
  if (loop.circularity_residual() > 0.3) {
    throw error("loop too far from round for the correspondence iteration");
  }
  const int n = 1 << log2_nodes;
  std::vector<double> theta(n), phi(n), u(n);
  for (int i = 0; i < n; ++i) theta[i] = 2.0 * kPi * i / n;
  phi = theta;

  const double sign = side == MapSide::exterior ? -1.0 : 1.0;
  double prev_update = HUGE_VAL;
  int grow_streak = 0;
  int iterations = 0;
  for (int it = 0; it < max_iters; ++it) {
    iterations = it + 1;
    for (int i = 0; i < n; ++i) u[i] = std::log(loop.radius(phi[i]));
    const std::vector<double> v = conjugate_samples(u);
    double update = 0.0;
    for (int i = 0; i < n; ++i) {
      const double next = theta[i] + sign * v[i];
      update = std::fmax(update, std::abs(next - phi[i]));
      phi[i] = next;
    }
    if (update < tol) break;
    if (update > prev_update * 1.0000001) {
      if (++grow_streak > 50) throw error("correspondence iteration diverged");
    } else {
      grow_streak = 0;
    }
    prev_update = update;
  }

  // boundary samples of F and their Fourier coefficients
  std::vector<Complex> bnd(n);
  for (int i = 0; i < n; ++i) {
    bnd[i] = loop.center + loop.radius(phi[i]) * std::polar(1.0, phi[i]);
  }
  fft_radix2(bnd, false);
  for (auto& c : bnd) c /= static_cast<double>(n);

  RiemannMap rm;
  rm.side = side;
  rm.center = loop.center;
  rm.star_center = loop.center;
  rm.nodes = n;
  rm.phi = phi;
  rm.iterations = iterations;

  double in_range = 0.0, out_range = 0.0;
  const int keep = std::min(n / 2 - 1, 160);
  if (side == MapSide::exterior) {
    // F(e^{i t}) = sum_m c_m e^{i m t}; analytic exterior part: m <= 1
    rm.coef.assign(keep + 2, Complex(0, 0));
    rm.coef[0] = bnd[1];        // coefficient of w
    rm.coef[1] = bnd[0];        // constant
    for (int m = 1; m <= keep; ++m) rm.coef[m + 1] = bnd[n - m];  // w^{-m}
    for (int m = 2; m < n / 2; ++m) out_range += std::norm(bnd[m]);
    in_range = std::norm(bnd[1]);
  } else {
    // analytic interior part: m >= 0 about the center
    rm.coef.assign(keep + 1, Complex(0, 0));
    for (int m = 1; m <= keep + 1; ++m) rm.coef[m - 1] = bnd[m];
    for (int m = 1; m < n / 2; ++m) out_range += std::norm(bnd[n - m]);
    in_range = std::norm(bnd[1]);
    rm.center = bnd[0];  // the actual image of 0 under the fitted series
  }
  rm.conformality_residual = std::sqrt(out_range / std::fmax(in_range, 1e-300));
  return rm;
}

}  // namespace qcgeo
