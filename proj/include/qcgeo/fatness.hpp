#pragma once

#include <cstdint>

#include "qcgeo/circle.hpp"
#include "qcgeo/continuum.hpp"

namespace qcgeo {

struct FatnessReport {
  bool passed = true;
  double worst_ratio = HUGE_VAL;  // min over trials of area(B(x,r) cap K)/r^2
  int trials_used = 0;
};

// Spherical area of the intersection of the cap B(x,r) with the cap K,
// by quadrature over concentric spherical circles around x.
double cap_intersection_area(const Vec3& x, double r, const Vec3& k_center, double k_radius);

// Samples centers x in K and radii r with B(x,r) not containing K and tests
// Sigma(B(x,r) cap K) >= tau * r^2.
FatnessReport fatness_test(const DiskRegion& k, double tau, int trials, std::uint64_t seed);
FatnessReport fatness_test(const ContinuumSample& k, double tau, int trials, std::uint64_t seed);

}  // namespace qcgeo
