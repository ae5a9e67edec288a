#include "qcgeo/bilipschitz.hpp"

#include <cmath>

#include "qcgeo/rng.hpp"

namespace qcgeo {

namespace {

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < kPi / 3.0)) throw error("push/pull parameter requires 0 < delta < pi/3");
}

// Conjugates a normalized-frame piecewise map by the similarity
// S(z) = anchor + scale z. Similarities preserve bi-Lipschitz constants.
PiecewiseMap place(std::vector<MapPiece> pieces, std::function<bool(Complex)> support,
                   Complex anchor, Complex scale, const std::string& label) {
  if (std::abs(scale) == 0.0) throw error("placement scale must be nonzero");
  if (anchor == Complex(0.0, 0.0) && scale == Complex(1.0, 0.0)) {
    return PiecewiseMap(std::move(pieces), std::move(support), label);
  }
  const Complex inv_scale = 1.0 / scale;
  auto to_frame = [anchor, inv_scale](Complex z) { return (z - anchor) * inv_scale; };
  auto from_frame = [anchor, scale](Complex w) { return anchor + scale * w; };
  std::vector<MapPiece> placed;
  placed.reserve(pieces.size());
  const double rot_c = (scale / std::abs(scale)).real();
  const double rot_s = (scale / std::abs(scale)).imag();
  for (auto& p : pieces) {
    MapPiece q;
    q.name = p.name;
    auto contains = p.contains;
    auto apply = p.apply;
    auto jac = p.jacobian;
    q.contains = [contains, to_frame](Complex z) { return contains(to_frame(z)); };
    q.apply = [apply, to_frame, from_frame](Complex z) { return from_frame(apply(to_frame(z))); };
    q.jacobian = [jac, to_frame, rot_c, rot_s](Complex z) {
      // R(phi) J R(-phi) for the rotation part; the dilation cancels
      const Jacobian2 j = jac(to_frame(z));
      const double c = rot_c, s = rot_s;
      const double m00 = j.fxx * c - j.fxy * s, m01 = j.fxx * s + j.fxy * c;
      const double m10 = j.fyx * c - j.fyy * s, m11 = j.fyx * s + j.fyy * c;
      Jacobian2 out;
      out.fxx = c * m00 - s * m10;
      out.fxy = c * m01 - s * m11;
      out.fyx = s * m00 + c * m10;
      out.fyy = s * m01 + c * m11;
      return out;
    };
    placed.push_back(std::move(q));
  }
  auto sup = std::move(support);
  auto placed_support = [sup, to_frame](Complex z) { return sup(to_frame(z)); };
  return PiecewiseMap(std::move(placed), placed_support, label);
}

}  // namespace

PiecewiseMap push_map(const PushParams& p) {
  check_delta(p.delta);
  const double a = 1.0 - std::cos(p.delta);
  const double b = std::sin(p.delta);

  MapPiece left;
  left.name = "left";
  left.contains = [a, b](Complex z) {
    return z.real() >= -2.0 * a && z.real() < -a && std::abs(z.imag()) <= b;
  };
  left.apply = [a](Complex z) {
    const double theta = std::asin(z.imag());
    const double x = (std::cos(theta) - 1.0 + 2.0 * a) / a * (z.real() + 2.0 * a) - 2.0 * a;
    return Complex(x, z.imag());
  };
  left.jacobian = [a](Complex z) {
    const double theta = std::asin(z.imag());
    Jacobian2 j;
    j.fxx = (std::cos(theta) - 1.0 + 2.0 * a) / a;
    j.fxy = -std::tan(theta) / a * (z.real() + 2.0 * a);
    j.fyx = 0.0;
    j.fyy = 1.0;
    return j;
  };

  MapPiece right;
  right.name = "right";
  right.contains = [a, b](Complex z) {
    return z.real() >= -a && z.real() <= a && std::abs(z.imag()) <= b;
  };
  right.apply = [a](Complex z) {
    const double theta = std::asin(z.imag());
    const double x = (1.0 - std::cos(theta) + a) / (2.0 * a) * (z.real() - a) + a;
    return Complex(x, z.imag());
  };
  right.jacobian = [a](Complex z) {
    const double theta = std::asin(z.imag());
    Jacobian2 j;
    j.fxx = (1.0 - std::cos(theta) + a) / (2.0 * a);
    j.fxy = std::tan(theta) / (2.0 * a) * (z.real() - a);
    j.fyx = 0.0;
    j.fyy = 1.0;
    return j;
  };

  auto support = [a, b](Complex z) {
    return z.real() >= -2.0 * a && z.real() <= a && std::abs(z.imag()) <= b;
  };
  return place({left, right}, support, p.anchor, p.scale, "push");
}

PiecewiseMap pull_map(const PullParams& p) {
  check_delta(p.delta);
  const double a = 1.0 - std::cos(p.delta);
  const double b = std::sin(p.delta);

  MapPiece piece_a;
  piece_a.name = "A";
  piece_a.contains = [a, b](Complex z) {
    return z.real() < -2.0 * a || (z.real() < -a && std::abs(z.imag()) > b);
  };
  piece_a.apply = [a](Complex z) { return Complex(z.real() - a, z.imag()); };
  piece_a.jacobian = [](Complex) { return Jacobian2{}; };

  MapPiece piece_b;
  piece_b.name = "B";
  piece_b.contains = [a, b](Complex z) {
    return z.real() >= -a && z.real() < 0.0 && std::abs(z.imag()) > b;
  };
  piece_b.apply = [](Complex z) { return Complex(2.0 * z.real(), z.imag()); };
  piece_b.jacobian = [](Complex) {
    Jacobian2 j;
    j.fxx = 2.0;
    return j;
  };

  MapPiece piece_c;
  piece_c.name = "C";
  piece_c.contains = [a, b](Complex z) {
    return z.real() >= -2.0 * a && z.real() < -a && std::abs(z.imag()) <= b;
  };
  piece_c.apply = [a](Complex z) {
    const double theta = std::asin(z.imag());
    const double x = (std::cos(theta) - 1.0 + 2.0 * a) / a * (z.real() + 2.0 * a) - 3.0 * a;
    return Complex(x, z.imag());
  };
  piece_c.jacobian = [a](Complex z) {
    const double theta = std::asin(z.imag());
    Jacobian2 j;
    j.fxx = (std::cos(theta) - 1.0 + 2.0 * a) / a;
    j.fxy = -std::tan(theta) / a * (z.real() + 2.0 * a);
    return j;
  };

  MapPiece piece_d;
  piece_d.name = "D";
  piece_d.contains = [a, b](Complex z) {
    return z.real() >= -a && z.real() < 0.0 && std::abs(z.imag()) <= b;
  };
  piece_d.apply = [a](Complex z) {
    const double theta = std::asin(z.imag());
    return Complex((1.0 - std::cos(theta) + a) / a * z.real(), z.imag());
  };
  piece_d.jacobian = [a](Complex z) {
    const double theta = std::asin(z.imag());
    Jacobian2 j;
    j.fxx = (1.0 - std::cos(theta) + a) / a;
    j.fxy = std::tan(theta) / a * z.real();
    return j;
  };

  auto support = [](Complex z) { return z.real() < 0.0; };
  return place({piece_d, piece_c, piece_b, piece_a}, support, p.anchor, p.scale, "pull");
}

double bilip_estimate(const PiecewiseMap& m, Complex rect_lo, Complex rect_hi, double h,
                      std::uint64_t seed) {
  if (!(h > 0.0)) throw error("bilip_estimate needs a positive resolution");
  Rng rng(seed);
  const double dx = rect_hi.real() - rect_lo.real();
  const double dy = rect_hi.imag() - rect_lo.imag();
  const double diam = std::hypot(dx, dy);
  const double scales[3] = {h, 10.0 * h, diam / 4.0};
  double worst = 1.0;
  const int nx = std::max(2, static_cast<int>(dx / h));
  const int ny = std::max(2, static_cast<int>(dy / h));
  const int step = std::max(1, nx * ny / 4000);  // cap the sample count
  int idx = 0;
  for (int i = 0; i <= nx; ++i) {
    for (int j = 0; j <= ny; ++j) {
      if (idx++ % step != 0) continue;
      const Complex x(rect_lo.real() + dx * i / nx, rect_lo.imag() + dy * j / ny);
      const Complex fx = m.apply(x);
      for (double s : scales) {
        for (int dir = 0; dir < 4; ++dir) {
          const double t = 2.0 * kPi * (dir + rng.u01()) / 4.0;
          const Complex y = x + s * Complex(std::cos(t), std::sin(t));
          const Complex fy = m.apply(y);
          const double num = std::abs(fx - fy);
          const double den = std::abs(x - y);
          if (num == 0.0 || den == 0.0) continue;
          worst = std::fmax(worst, std::fmax(num / den, den / num));
        }
      }
    }
  }
  return worst;
}

}  // namespace qcgeo
