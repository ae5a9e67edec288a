#pragma once

#include <vector>

#include "qcgeo/bilipschitz.hpp"
#include "qcgeo/circle.hpp"

namespace qcgeo {

// A cap removed from a disk at a tangency: the chord perpendicular to the
// line through the tangency point, at the given sagitta from it.
struct CutCap {
  Complex tangency;
  int other = -1;        // index of the tangent partner disk
  double sagitta = 0.0;  // chord depth measured from the tangency point
};

// U_i(n): the i-th disk minus its tangency caps.
struct CutRegion {
  Complex center;
  double radius = 0.0;
  std::vector<CutCap> caps;

  bool contains(Complex z) const {
    if (std::abs(z - center) >= radius) return false;
    for (const auto& cap : caps) {
      const Complex axis = (tang_dir(cap));
      if (((z - cap.tangency) * std::conj(axis)).real() > -cap.sagitta) return false;
    }
    return true;
  }

  // Chart distance from a point of the full disk to the cut region boundary
  // along the cap axis; used for Hausdorff checks.
  Complex tang_dir(const CutCap& cap) const {
    return (cap.tangency - center) / std::abs(cap.tangency - center);
  }

  // Boundary polyline samples (arcs plus chords).
  std::vector<Complex> boundary_samples(int per_arc) const;
};

// One bi-Lipschitz factor of a circularizing chain, with its estimate.
struct ChainFactor {
  PiecewiseMap map;
  double bilip = 1.0;
  std::string role;  // "push" or "pull"
};

struct PairChain {
  int i = 0, j = 0;  // the tangent pair circularized by this chain
  std::vector<ChainFactor> factors;
};

struct ExhaustionStage {
  int stage = 0;
  std::vector<CutRegion> regions;
  std::vector<PairChain> chains;
};

// Prop.-style exhaustion for configurations of round disks with pairwise
// disjoint interiors and single-point tangencies: at stage n each tangency
// cap is cut at sagitta s0 * 2^-n with s0 a quarter of the smaller radius.
// Rejects overlapping disks and triple tangencies.
ExhaustionStage exhaust_tangent_disks(const std::vector<DiskRegion>& disks, int stage);

// Applies the full chain to a point.
Complex apply_chain(const PairChain& chain, Complex z);

}  // namespace qcgeo
