#include "qcgeo/koebe.hpp"

#include <algorithm>
#include <cmath>

#include "qcgeo/moebius.hpp"
#include "qcgeo/rng.hpp"

namespace qcgeo {

namespace {

bool point_inside_loop(const AnalyticLoop& loop, Complex z) {
  const Complex d = z - loop.center;
  return std::abs(d) < loop.radius(std::arg(d));
}

void check_disjoint(const std::vector<AnalyticLoop>& loops) {
  for (std::size_t i = 0; i < loops.size(); ++i) {
    for (std::size_t j = 0; j < loops.size(); ++j) {
      if (i == j) continue;
      for (const auto& p : loops[j].sample(64)) {
        if (point_inside_loop(loops[i], p)) throw error("loops must have disjoint closures");
      }
      if (point_inside_loop(loops[i], loops[j].center)) {
        throw error("loops must bound disjoint regions");
      }
    }
  }
}

ExtendedPoint push_point(const RiemannMap& rm, const ExtendedPoint& p) {
  if (p.at_infinity) {
    if (rm.side == MapSide::exterior) return p;  // F(inf) = inf
    throw error("interior map cannot move infinity");
  }
  return ExtendedPoint(rm.to_round(p.value));
}

}  // namespace

KoebeResult koebe_iterate(const std::vector<AnalyticLoop>& loops,
                          const std::vector<ExtendedPoint>& marked, KoebeOptions opt) {
  if (loops.empty()) throw error("koebe_iterate needs at least one loop");
  check_disjoint(loops);
  for (const auto& t : opt.normalization) {
    if (t.at_infinity) continue;
    for (const auto& l : loops) {
      if (point_inside_loop(l, t.value)) {
        throw error("normalization points must lie in the domain");
      }
    }
  }

  const std::size_t m = loops.size();
  std::vector<std::vector<Complex>> clouds(m);
  for (std::size_t i = 0; i < m; ++i) clouds[i] = loops[i].sample(opt.cloud_size);

  KoebeResult res;
  res.boundary_start = clouds;
  std::vector<ExtendedPoint> marked_now = marked;
  ExtendedPoint triple_now[3] = {opt.normalization[0], opt.normalization[1], opt.normalization[2]};

  auto residuals = [&](std::vector<double>* out) {
    double worst = 0.0;
    out->resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      const AnalyticLoop fit = fit_loop(clouds[i], opt.harmonics);
      (*out)[i] = fit.circularity_residual();
      worst = std::fmax(worst, (*out)[i]);
    }
    return worst;
  };

  std::vector<double> res_by_loop;
  double worst = residuals(&res_by_loop);
  res.final_residual = worst;
  int step = 0;
  const int cycle = static_cast<int>(m);
  while (worst > opt.tol && step < opt.max_steps) {
    const std::size_t j = step % m;
    ++step;
    if (res_by_loop[j] <= 0.25 * opt.tol) {
      // already round; cycling continues with the worst offenders
      res.residual_trace.push_back(worst);
      continue;
    }
    const AnalyticLoop fit = fit_loop(clouds[j], opt.harmonics);
    const RiemannMap rm = riemann_step(fit, MapSide::exterior, opt.log2_nodes);
    for (std::size_t i = 0; i < m; ++i) {
      for (auto& z : clouds[i]) z = rm.to_round(z);
    }
    for (auto& p : marked_now) p = push_point(rm, p);
    for (auto& p : triple_now) p = push_point(rm, p);

    // renormalize: send the current triple images back to the declared triple
    const MoebiusMap renorm = MoebiusMap::triple_to_triple(
        triple_now[0], triple_now[1], triple_now[2], opt.normalization[0], opt.normalization[1],
        opt.normalization[2]);
    for (std::size_t i = 0; i < m; ++i) {
      for (auto& z : clouds[i]) {
        const auto w = renorm.apply(ExtendedPoint(z));
        if (w.at_infinity) throw error("renormalization pushed a boundary sample to infinity");
        z = w.value;
      }
    }
    for (auto& p : marked_now) p = renorm.apply(p);
    for (auto& p : triple_now) p = renorm.apply(p);

    worst = residuals(&res_by_loop);
    res.residual_trace.push_back(worst);

    // stagnation: less than 1% decrease over 3 full cycles
    const int lookback = 3 * cycle;
    if (static_cast<int>(res.residual_trace.size()) > lookback) {
      const double prev = res.residual_trace[res.residual_trace.size() - 1 - lookback];
      if (worst > prev * 0.99 && worst > opt.tol) {
        res.stagnated = true;
        break;
      }
    }
  }

  res.steps = step;
  res.converged = worst <= opt.tol;
  res.final_residual = worst;
  res.boundary_final = clouds;
  res.marked_final = marked_now;
  res.circles.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<ExtendedPoint> pts;
    pts.reserve(64);
    for (std::size_t k = 0; k < clouds[i].size(); k += std::max<std::size_t>(1, clouds[i].size() / 64)) {
      pts.emplace_back(clouds[i][k]);
    }
    double resid = 0.0;
    res.circles.push_back(fit_circle(pts, &resid));
  }
  return res;
}

WeakQsReport weak_qs_check(const std::vector<std::pair<ExtendedPoint, ExtendedPoint>>& samples,
                           int triples, std::uint64_t seed) {
  if (samples.size() < 10) throw error("weak_qs_check needs more samples");
  WeakQsReport rep;
  Rng rng(seed);
  const int n = static_cast<int>(samples.size());
  for (int t = 0; t < triples; ++t) {
    const int ix = rng.uniform_int(0, n - 1);
    const int iy = rng.uniform_int(0, n - 1);
    const int iz = rng.uniform_int(0, n - 1);
    if (ix == iy || ix == iz || iy == iz) continue;
    const auto& [x, xp] = samples[ix];
    const auto& [y, yp] = samples[iy];
    const auto& [z, zp] = samples[iz];
    const double dxy = spherical_dist(x, y);
    const double dxz = spherical_dist(x, z);
    if (!(dxy <= dxz) || dxz == 0.0) continue;
    const double num = spherical_dist(xp, yp);
    const double den = spherical_dist(xp, zp);
    if (den < 1e-12) continue;
    rep.triples_used++;
    rep.h = std::fmax(rep.h, num / den);
  }

  // width-versus-relative-distance profile over sampled continuum pairs:
  // E and F are small clusters of nearby samples
  std::vector<std::pair<double, double>> scatter;
  for (int t = 0; t < std::max(triples / 4, 64); ++t) {
    const int seed_e = rng.uniform_int(0, n - 1);
    const int seed_f = rng.uniform_int(0, n - 1);
    if (seed_e == seed_f) continue;
    // cluster = the k nearest samples to the seed (domain side)
    auto cluster = [&](int anchor) {
      std::vector<int> idx(n);
      for (int i = 0; i < n; ++i) idx[i] = i;
      std::partial_sort(idx.begin(), idx.begin() + 6, idx.end(), [&](int a, int b) {
        return spherical_dist(samples[anchor].first, samples[a].first) <
               spherical_dist(samples[anchor].first, samples[b].first);
      });
      return std::vector<int>(idx.begin(), idx.begin() + 6);
    };
    const auto ce = cluster(seed_e);
    const auto cf = cluster(seed_f);
    // relative distance in the domain
    double de = 0.0, df = 0.0, d_ef = HUGE_VAL;
    for (int a : ce) {
      for (int b : ce) de = std::fmax(de, spherical_dist(samples[a].first, samples[b].first));
    }
    for (int a : cf) {
      for (int b : cf) df = std::fmax(df, spherical_dist(samples[a].first, samples[b].first));
    }
    for (int a : ce) {
      for (int b : cf) d_ef = std::fmin(d_ef, spherical_dist(samples[a].first, samples[b].first));
    }
    if (de == 0.0 || df == 0.0 || !std::isfinite(d_ef)) continue;
    const double delta = d_ef / std::fmin(de, df);
    // best separating annulus width in the image, centered at E' points
    double best_w = 0.0;
    for (int a : ce) {
      double rin = 0.0;
      for (int b : ce) rin = std::fmax(rin, spherical_dist(samples[a].second, samples[b].second));
      double rout = HUGE_VAL;
      for (int b : cf) rout = std::fmin(rout, spherical_dist(samples[a].second, samples[b].second));
      if (rout > rin && rin > 0.0) best_w = std::fmax(best_w, std::log(rout / rin));
    }
    if (best_w > 0.0) scatter.emplace_back(delta, best_w);
  }
  if (scatter.empty()) scatter.emplace_back(1.0, 0.0);
  rep.theta = fit_profile(std::move(scatter), true);
  return rep;
}

UniformizationResult uniformize_loops(const std::vector<AnalyticLoop>& loops, KoebeOptions opt) {
  UniformizationResult out;
  out.koebe = koebe_iterate(loops, {}, opt);
  out.circles = out.koebe.circles;
  out.min_gap = HUGE_VAL;
  for (std::size_t i = 0; i < out.circles.size(); ++i) {
    Vec3 ci;
    double ri;
    out.circles[i].spherical_cap(true, &ci, &ri);
    for (std::size_t j = i + 1; j < out.circles.size(); ++j) {
      Vec3 cj;
      double rj;
      out.circles[j].spherical_cap(true, &cj, &rj);
      const double d = std::acos(std::fmin(1.0, std::fmax(-1.0, dot(ci, cj)))) - ri - rj;
      out.min_gap = std::fmin(out.min_gap, d);
    }
  }
  if (out.circles.size() < 2) out.min_gap = kPi;

  // distortion samples: boundary correspondences of every component
  std::vector<std::pair<ExtendedPoint, ExtendedPoint>> samples;
  for (std::size_t i = 0; i < out.koebe.boundary_start.size(); ++i) {
    const auto& before = out.koebe.boundary_start[i];
    const auto& after = out.koebe.boundary_final[i];
    for (std::size_t k = 0; k < before.size(); k += 4) {
      samples.emplace_back(ExtendedPoint(before[k]), ExtendedPoint(after[k]));
    }
  }
  out.qs = weak_qs_check(samples, 4000, 9001);
  return out;
}

UniformizationResult uniformize_configuration(const std::vector<DiskRegion>& disks, int stage,
                                              KoebeOptions opt) {
  // try a direct run when closures are disjoint; otherwise exhaust first
  bool tangent = false;
  for (std::size_t i = 0; i < disks.size() && !tangent; ++i) {
    for (std::size_t j = i + 1; j < disks.size() && !tangent; ++j) {
      if (disk_gap(disks[i], disks[j]) < 1e-9) tangent = true;
    }
  }
  if (!tangent) {
    std::vector<AnalyticLoop> loops;
    loops.reserve(disks.size());
    for (const auto& d : disks) {
      loops.push_back(circle_as_loop(d.boundary().center(), d.boundary().radius()));
    }
    auto out = uniformize_loops(loops, opt);
    out.stage = stage;
    return out;
  }
  const ExhaustionStage ex = exhaust_tangent_disks(disks, stage);
  std::vector<AnalyticLoop> loops;
  loops.reserve(ex.regions.size());
  // chord corners carry slowly decaying harmonics; fit and iterate finer
  opt.harmonics = std::max(opt.harmonics, 48);
  opt.log2_nodes = std::max(opt.log2_nodes, 10);
  for (const auto& reg : ex.regions) {
    loops.push_back(fit_loop(reg.boundary_samples(40), opt.harmonics));
  }
  auto out = uniformize_loops(loops, opt);
  out.stage = stage;
  out.exhaustion = ex;
  return out;
}

}  // namespace qcgeo
