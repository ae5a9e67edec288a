#pragma once

#include <functional>
#include <vector>

#include "qcgeo/circle.hpp"
#include "qcgeo/sphere.hpp"

namespace qcgeo {

// A continuum represented by an ordered list of sample points; closed samples
// are loops, open ones arcs. Inf/sup quantities over the continuum are
// brute-forced over the samples with one-sided error bounded by the declared
// resolution.
struct ContinuumSample {
  std::vector<ExtendedPoint> points;
  bool closed = false;
  double resolution = 0.0;  // max consecutive spacing, spherical metric

  std::size_t size() const { return points.size(); }
};

ContinuumSample make_segment(Complex a, Complex b, int n);
ContinuumSample make_circle_loop(Complex center, double radius, int n);
ContinuumSample make_arc(Complex center, double radius, double t0, double t1, int n);

// Refines a polyline so consecutive spherical spacing is at most h.
ContinuumSample resample(const ContinuumSample& c, double h);

ContinuumSample map_continuum(const ContinuumSample& c,
                              const std::function<ExtendedPoint(const ExtendedPoint&)>& f);

double continuum_diam(const ContinuumSample& c, Metric metric);
double continuum_dist(const ContinuumSample& a, const ContinuumSample& b, Metric metric);

// Relative distance dist(E,F) / min{diam E, diam F} from samples.
double relative_distance(const ContinuumSample& e, const ContinuumSample& f, Metric metric);

// D(E,F) = inf over x1,x4 in E and x2,x3 in F of
//   min{d(x1,x3), d(x2,x4)} / min{d(x1,x4), d(x2,x3)},
// estimated by exhaustive search over the sample quadruples.
double dcross_estimate(const ContinuumSample& e, const ContinuumSample& f, Metric metric);

// Smallest L such that every sampled pair x,y on the closed curve admits a
// complementary arc E with diam(E) <= L * d(x,y); rejects self-intersecting
// samples.
double quasicircle_constant(const ContinuumSample& loop, Metric metric);

bool polyline_self_intersects(const ContinuumSample& loop);

}  // namespace qcgeo
