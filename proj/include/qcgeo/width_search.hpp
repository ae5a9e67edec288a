#pragma once

#include <cstdint>
#include <string>

#include "qcgeo/annulus.hpp"
#include "qcgeo/schottky_group.hpp"

namespace qcgeo {

// A randomized-search estimate of a universal constant; reproducible from
// (trials, seed).
struct EmpiricalConstant {
  std::string name;
  double value = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
};

// Randomized maximization of w_A^e(D) over euclidean annuli A(0; r, 1) of the
// given width, disjoint disk pairs K1, K2 with diam >= R/alpha and
// dist(K_i, 0) <= alpha r, and disks D avoiding both. width <= 0 samples the
// width log-uniformly in [1, 12].
EmpiricalConstant big_disk_bound_search(double alpha, int trials, std::uint64_t seed,
                                        double width = 0.0);

// Control run with the second big disk dropped from the hypothesis: the
// observed maxima grow with the annulus width.
EmpiricalConstant single_big_disk_control(int trials, std::uint64_t seed, double width);

// Estimates alpha_0 (euclidean) or beta_0 (spherical): annuli and disjoint
// disk pairs K, L each meeting both boundary circles; L' the reflection of L
// across the boundary of K; maximizes w_A(D) over disks D avoiding L and L'.
EmpiricalConstant reflected_pair_bound_search(int trials, std::uint64_t seed, Metric metric,
                                              double width = 0.0);

// One spherical trial of the beta_0 search, with its configuration exposed.
// orbit_value is the best width among the same trial's candidates that also
// avoid K (the family Prop.-style orbit checks require); by construction it
// never exceeds trial_value.
struct SphericalReflectedTrial {
  bool valid = false;
  double trial_value = 0.0;   // best w_A(D) over D avoiding L and L'
  double orbit_value = 0.0;   // best w_A(D) over D avoiding K and L
  Annulus annulus{ExtendedPoint(0.0, 0.0), 0.5, 1.0, Metric::spherical};
  DiskRegion k{GeneralizedCircle::circle(Complex(0, 0), 1.0), true};
  DiskRegion l{GeneralizedCircle::circle(Complex(0, 0), 1.0), true};
  DiskRegion orbit_d{GeneralizedCircle::circle(Complex(0, 0), 1.0), true};
  bool has_orbit_d = false;
};

SphericalReflectedTrial spherical_reflected_trial(std::uint64_t seed, std::uint64_t trial,
                                                  double width);

struct OrbitWidthResult {
  double max_width = 0.0;
  int words_checked = 0;
  int argmax_depth = 0;
};

// Maximum relative width w_A(phi(D)) over the two-generator Schottky orbit of
// D up to the given word length. K1, K2 must be disjoint closed disks meeting
// both boundary circles of A, and D must avoid both.
OrbitWidthResult orbit_width_check(const Annulus& a, const DiskRegion& k1, const DiskRegion& k2,
                                   const DiskRegion& d, int depth);

}  // namespace qcgeo
