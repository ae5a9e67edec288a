#pragma once

#include <cstdint>
#include <vector>

#include "qcgeo/circle.hpp"
#include "qcgeo/exhaustion.hpp"
#include "qcgeo/loop.hpp"
#include "qcgeo/profile.hpp"
#include "qcgeo/theodorsen.hpp"

namespace qcgeo {

struct KoebeOptions {
  double tol = 1e-6;      // circularity residual target per component
  int max_steps = 200;    // single-component steps
  int log2_nodes = 9;
  int harmonics = 24;
  int cloud_size = 512;   // passive boundary samples per component
  ExtendedPoint normalization[3] = {ExtendedPoint(0.0, 0.0), ExtendedPoint(1.0, 0.0),
                                    ExtendedPoint::infinity()};
};

struct KoebeResult {
  std::vector<GeneralizedCircle> circles;
  std::vector<double> residual_trace;  // max residual after each component step
  int steps = 0;
  bool converged = false;
  bool stagnated = false;
  std::vector<std::vector<Complex>> boundary_start;  // index-aligned correspondence samples
  std::vector<std::vector<Complex>> boundary_final;
  std::vector<ExtendedPoint> marked_final;
  double final_residual = 0.0;
};

// Cycles over components, rounding one boundary loop at a time by a
// conformal exterior map and renormalizing by the Moebius map fixing the
// declared triple, until every circularity residual is below tol.
KoebeResult koebe_iterate(const std::vector<AnalyticLoop>& loops,
                          const std::vector<ExtendedPoint>& marked = {},
                          KoebeOptions opt = KoebeOptions{});

struct WeakQsReport {
  double h = 1.0;            // max ratio over sampled triples
  int triples_used = 0;
  EmpiricalProfile theta;    // max separating-annulus width vs Delta(E,F)
};

// Empirical weak-quasisymmetry constant of a sampled map: the max of
// sigma(x',y')/sigma(x',z') over sampled triples with sigma(x,y) <= sigma(x,z),
// plus the fitted width-vs-relative-distance profile.
WeakQsReport weak_qs_check(const std::vector<std::pair<ExtendedPoint, ExtendedPoint>>& samples,
                           int triples, std::uint64_t seed);

struct UniformizationResult {
  KoebeResult koebe;
  std::vector<GeneralizedCircle> circles;
  double min_gap = 0.0;  // min pairwise spherical gap of the output circles
  WeakQsReport qs;
  int stage = -1;
  ExhaustionStage exhaustion;  // populated when tangencies forced an exhaustion
};

// Pipeline: exhaust tangent configurations at the given stage, fit the cut
// regions as analytic loops, run the circle-domain iteration, and report
// distortion diagnostics.
UniformizationResult uniformize_configuration(const std::vector<DiskRegion>& disks, int stage,
                                              KoebeOptions opt = KoebeOptions{});

UniformizationResult uniformize_loops(const std::vector<AnalyticLoop>& loops,
                                      KoebeOptions opt = KoebeOptions{});

}  // namespace qcgeo
