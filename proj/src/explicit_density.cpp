#include "qcgeo/explicit_density.hpp"

#include <algorithm>
#include <cmath>

#include "qcgeo/rng.hpp"

namespace qcgeo {

namespace {

double clamp1(double v) { return std::fmin(1.0, std::fmax(-1.0, v)); }

void frame(const Vec3& n, Vec3* u, Vec3* v) {
  const Vec3 seed = std::abs(n.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
  *u = normalized(cross(n, seed));
  *v = cross(n, *u);
}

Vec3 polar_point(const Vec3& x, const Vec3& u, const Vec3& v, double theta, double phi) {
  const double c = std::cos(theta), s = std::sin(theta);
  const double cu = std::cos(phi), sv = std::sin(phi);
  return {c * x.x + s * (cu * u.x + sv * v.x), c * x.y + s * (cu * u.y + sv * v.y),
          c * x.z + s * (cu * u.z + sv * v.z)};
}

bool in_cap(const Vec3& p, const Vec3& c, double r) { return dot(p, c) >= std::cos(r); }

}  // namespace

ExplicitDensityReport explicit_annulus_density(const Annulus& a,
                                               const std::vector<SphereSet>& obstacles,
                                               int path_samples, std::uint64_t seed) {
  if (a.metric != Metric::spherical) throw error("explicit density is defined for spherical annuli");
  const double w = a.width();
  ExplicitDensityReport rep;
  rep.obstacle_weight.reserve(obstacles.size());
  for (const auto& k : obstacles) rep.obstacle_weight.push_back(relative_width(a, k).width / w);

  // radial integral int_r^R sin(t)/t^2 dt via Simpson in log coordinates
  const int n = 1 << 14;
  const double u0 = std::log(a.r), u1 = std::log(a.R);
  auto f = [](double u) {
    const double t = std::exp(u);
    return std::sin(t) / t;  // sin(t)/t^2 * (dt = t du)
  };
  double acc = f(u0) + f(u1);
  for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(u0 + (u1 - u0) * i / n);
  rep.radial_integral = acc * (u1 - u0) / (3.0 * n);
  rep.mass = 2.0 * kPi * rep.radial_integral / (w * w);
  for (double wt : rep.obstacle_weight) rep.mass += wt * wt;

  // obstacle caps for hit tests
  std::vector<std::pair<Vec3, double>> caps;
  for (const auto& k : obstacles) {
    if (std::holds_alternative<DiskRegion>(k)) {
      Vec3 c;
      double r;
      std::get<DiskRegion>(k).spherical_cap(&c, &r);
      caps.emplace_back(c, r);
    } else {
      caps.emplace_back(Vec3{0, 0, 0}, -1.0);  // sampled continua handled pointwise
    }
  }
  auto obstacle_index = [&](const Vec3& p) -> int {
    for (std::size_t i = 0; i < caps.size(); ++i) {
      if (caps[i].second >= 0.0) {
        if (in_cap(p, caps[i].first, caps[i].second)) return static_cast<int>(i);
      } else {
        const auto& cs = std::get<ContinuumSample>(obstacles[i]);
        const ExtendedPoint ep = unlift(p);
        for (const auto& q : cs.points) {
          if (spherical_dist(ep, q) < cs.resolution) return static_cast<int>(i);
        }
      }
    }
    return -1;
  };

  const Vec3 x = lift(a.center);
  Vec3 u, v;
  frame(x, &u, &v);
  // 16-point Gauss-Legendre rule on [-1,1], positive half
  static const double gx[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                               0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                               0.9445750230732326, 0.9894009349916499};
  static const double gw[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                               0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                               0.0622535239386479, 0.0271524594117541};

  const int segments = 48;
  rep.admissibility_residual = HUGE_VAL;
  for (int path = 0; path < path_samples; ++path) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(path));
    double phi = rng.uniform(0.0, 2.0 * kPi);
    // node radii geometrically spaced from r to R with angular drift
    std::vector<Vec3> nodes;
    nodes.reserve(segments + 1);
    for (int k = 0; k <= segments; ++k) {
      const double theta = a.r * std::pow(a.R / a.r, static_cast<double>(k) / segments);
      nodes.push_back(polar_point(x, u, v, theta, phi));
      phi += rng.uniform(-0.25, 0.25);
    }
    double value = 0.0;
    std::vector<bool> hit(obstacles.size(), false);
    for (int k = 0; k < segments; ++k) {
      const Vec3& p = nodes[k];
      const Vec3& q = nodes[k + 1];
      const double ang = std::acos(clamp1(dot(p, q)));
      if (ang < 1e-15) continue;
      for (int gi = 0; gi < 8; ++gi) {
        for (int sign = -1; sign <= 1; sign += 2) {
          const double t = 0.5 + sign * 0.5 * gx[gi];
          const double wgt = gw[gi] * 0.5;
          // slerp without renormalization error
          const double s0 = std::sin((1.0 - t) * ang) / std::sin(ang);
          const double s1 = std::sin(t * ang) / std::sin(ang);
          const Vec3 pt = normalized(
              Vec3{s0 * p.x + s1 * q.x, s0 * p.y + s1 * q.y, s0 * p.z + s1 * q.z});
          const double sig = std::acos(clamp1(dot(pt, x)));
          if (sig < a.r - 1e-12 || sig > a.R + 1e-12) continue;
          const int oi = obstacle_index(pt);
          if (oi >= 0) {
            hit[oi] = true;
            continue;  // no length charge inside a component
          }
          value += wgt * ang / (w * sig);
        }
      }
    }
    for (std::size_t i = 0; i < obstacles.size(); ++i) {
      if (hit[i]) value += rep.obstacle_weight[i];
    }
    rep.paths_checked++;
    rep.admissibility_residual = std::fmin(rep.admissibility_residual, value);
  }
  return rep;
}

std::vector<double> project_annulus_density(const Annulus& a, const Grid& grid) {
  if (a.metric != Metric::spherical) throw error("explicit density is defined for spherical annuli");
  std::vector<double> rho(grid.cell_count(), 0.0);
  const Vec3 x = lift(a.center);
  const double w = a.width();
  for (int c = 0; c < grid.cell_count(); ++c) {
    const double sig = std::acos(clamp1(dot(lift(ExtendedPoint(grid.center(c))), x)));
    if (sig >= a.r && sig <= a.R) rho[c] = 1.0 / (w * sig);
  }
  return rho;
}

}  // namespace qcgeo
