#include "qcgeo/exhaustion.hpp"

#include <algorithm>
#include <cmath>

namespace qcgeo {

namespace {

constexpr double kTangencyTol = 1e-9;

}  // namespace

std::vector<Complex> CutRegion::boundary_samples(int per_arc) const {
  // excluded angular intervals (cap arcs)
  struct Interval {
    double lo, hi;
  };
  std::vector<Interval> cuts;
  for (const auto& cap : caps) {
    const double theta = std::arg(cap.tangency - center);
    const double phi = std::acos(1.0 - cap.sagitta / radius);
    cuts.push_back({theta - phi, theta + phi});
  }
  auto excluded = [&](double t) {
    for (const auto& c : cuts) {
      for (int k = -1; k <= 1; ++k) {
        const double tt = t + 2.0 * kPi * k;
        if (tt > c.lo && tt < c.hi) return true;
      }
    }
    return false;
  };
  std::vector<Complex> pts;
  const int n = std::max(per_arc * 4, 64);
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * kPi * i / n;
    if (excluded(t)) continue;
    pts.push_back(center + radius * Complex(std::cos(t), std::sin(t)));
  }
  // chord samples
  for (const auto& c : cuts) {
    const Complex e1 = center + radius * Complex(std::cos(c.lo), std::sin(c.lo));
    const Complex e2 = center + radius * Complex(std::cos(c.hi), std::sin(c.hi));
    for (int i = 0; i <= per_arc; ++i) {
      pts.push_back(e1 + (e2 - e1) * (static_cast<double>(i) / per_arc));
    }
  }
  return pts;
}

ExhaustionStage exhaust_tangent_disks(const std::vector<DiskRegion>& disks, int stage) {
  if (stage < 0) throw error("exhaustion stage must be nonnegative");
  const std::size_t n = disks.size();
  std::vector<Complex> centers(n);
  std::vector<double> radii(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!disks[i].is_bounded_disk()) throw error("exhaustion expects bounded chart disks");
    centers[i] = disks[i].boundary().center();
    radii[i] = disks[i].boundary().radius();
  }

  struct Tangency {
    std::size_t i, j;
    Complex p;
  };
  std::vector<Tangency> tangencies;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double gap = std::abs(centers[i] - centers[j]) - radii[i] - radii[j];
      if (gap < -kTangencyTol) throw error("overlapping disks rejected");
      if (gap <= kTangencyTol) {
        const Complex dir = (centers[j] - centers[i]) / std::abs(centers[j] - centers[i]);
        tangencies.push_back({i, j, centers[i] + radii[i] * dir});
      }
    }
  }
  // no triple points: tangency points must be pairwise distinct
  for (std::size_t a = 0; a < tangencies.size(); ++a) {
    for (std::size_t b = a + 1; b < tangencies.size(); ++b) {
      if (std::abs(tangencies[a].p - tangencies[b].p) < 1e-7) {
        throw error("triple tangency point rejected");
      }
    }
  }

  ExhaustionStage out;
  out.stage = stage;
  out.regions.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    CutRegion r;
    r.center = centers[i];
    r.radius = radii[i];
    out.regions.push_back(r);
  }
  const double shrink = std::pow(2.0, -static_cast<double>(stage));
  for (const auto& t : tangencies) {
    const double s0 = 0.25 * std::fmin(radii[t.i], radii[t.j]);
    const double s = s0 * shrink;
    out.regions[t.i].caps.push_back({t.p, static_cast<int>(t.j), s});
    out.regions[t.j].caps.push_back({t.p, static_cast<int>(t.i), s});
  }

  // Per-pair circularizing chains: pushes restore the caps at all other
  // tangencies of the two disks, then one pull per disk detaches and rounds
  // the shared cap.
  for (const auto& t : tangencies) {
    PairChain chain;
    chain.i = static_cast<int>(t.i);
    chain.j = static_cast<int>(t.j);
    auto add_pushes = [&](std::size_t disk_idx) {
      for (const auto& cap : out.regions[disk_idx].caps) {
        if (std::abs(cap.tangency - t.p) < 1e-12) continue;  // the shared cap
        PushParams pp;
        pp.delta = std::acos(1.0 - cap.sagitta / radii[disk_idx]);
        pp.anchor = cap.tangency;
        pp.scale = cap.tangency - centers[disk_idx];
        ChainFactor f{push_map(pp), 0.0, "push"};
        const double ext = 3.0 * radii[disk_idx];
        f.bilip = bilip_estimate(f.map, cap.tangency - Complex(ext, ext),
                                 cap.tangency + Complex(ext, ext), radii[disk_idx] / 24.0);
        chain.factors.push_back(std::move(f));
      }
    };
    add_pushes(t.i);
    add_pushes(t.j);
    for (std::size_t disk_idx : {t.i, t.j}) {
      const auto& reg = out.regions[disk_idx];
      double sag = 0.0;
      for (const auto& cap : reg.caps) {
        if (std::abs(cap.tangency - t.p) < 1e-12) sag = cap.sagitta;
      }
      PullParams pp;
      pp.delta = std::acos(1.0 - sag / radii[disk_idx]);
      pp.anchor = t.p;
      pp.scale = t.p - centers[disk_idx];
      ChainFactor f{pull_map(pp), 0.0, "pull"};
      const double ext = 3.0 * radii[disk_idx];
      f.bilip = bilip_estimate(f.map, t.p - Complex(ext, ext), t.p + Complex(ext, ext),
                               radii[disk_idx] / 24.0);
      chain.factors.push_back(std::move(f));
    }
    out.chains.push_back(std::move(chain));
  }
  return out;
}

Complex apply_chain(const PairChain& chain, Complex z) {
  for (const auto& f : chain.factors) z = f.map.apply(z);
  return z;
}

}  // namespace qcgeo
