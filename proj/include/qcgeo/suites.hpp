#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcgeo/annulus.hpp"
#include "qcgeo/explicit_density.hpp"
#include "qcgeo/koebe.hpp"
#include "qcgeo/modulus.hpp"
#include "qcgeo/profile.hpp"
#include "qcgeo/width_search.hpp"

namespace qcgeo {

// Randomized verification suites behind the CLI `verify` command. Every
// suite derives all randomness from (seed, trial) streams so reruns are
// bit-reproducible.

struct SubannulusTrialRow {
  double w_a = 0.0;
  double w_selected = 0.0;
  int alternative = 0;  // 0 one-small, 1 two-spanning
  int exception_index = -1;
  bool ok = false;
};

struct SubannulusSuiteResult {
  int trials = 0;
  int violations = 0;
  std::vector<SubannulusTrialRow> rows;
};

// Random (annulus, continua) inputs; the selected subannulus postconditions
// are re-verified from scratch: the width lower bound and the declared
// alternative's clause.
SubannulusSuiteResult run_subannulus_suite(int trials, std::uint64_t seed);

struct WidthBoundSuiteResult {
  std::vector<double> widths;          // stratum widths
  std::vector<double> bounded_maxima;  // C(alpha) search per stratum
  std::vector<double> control_maxima;  // single-big-disk control per stratum
  double bounded_slope = 0.0;          // fitted against log(width)
  double control_slope = 0.0;
};

WidthBoundSuiteResult run_bigdisk_suite(double alpha, int trials_per_stratum, std::uint64_t seed,
                                        std::vector<double> widths = {2.0, 5.0, 10.0});

struct ReflectOrbitSuiteResult {
  EmpiricalConstant alpha0;
  EmpiricalConstant beta0;
  double orbit_max = 0.0;       // max orbit width over the shared-seed configs
  int orbit_trials = 0;
  bool orbit_within_beta0 = true;
};

ReflectOrbitSuiteResult run_reflect_orbit_suite(int trials, std::uint64_t seed, int orbit_trials,
                                                int orbit_depth);

struct CompareSuiteResult {
  int configs = 0;
  double max_ratio = 0.0;  // empirical c(tau)
  std::vector<double> ratios;
};

CompareSuiteResult run_compare_suite(int configs, std::uint64_t seed, int grid_n, double tau);

struct LoewnerSuiteResult {
  std::vector<double> deltas;
  std::vector<double> min_modulus;  // min transboundary modulus per delta
  EmpiricalProfile profile;         // fitted decreasing profile
  bool profile_positive = true;
};

LoewnerSuiteResult run_loewner_suite(int configs_per_delta, std::uint64_t seed, int grid_n);

struct UpperDensitySuiteResult {
  std::vector<double> widths;
  std::vector<double> worst_residual;   // min path value per width
  std::vector<double> fitted_c;         // mass / (w^-1 + w^-1/3), max per width
  double obstacle_free_margin = 0.0;    // min over widths of 2*pi/w - mass
  double c_spread = 0.0;                // (max-min)/max over fitted_c
};

UpperDensitySuiteResult run_upper_density_suite(int configs_per_width, int paths,
                                                std::uint64_t seed,
                                                std::vector<double> widths = {3.0, 10.0, 30.0});

struct BilipSuiteResult {
  double worst_seam = 0.0;          // max seam mismatch over sampled seam points
  bool identity_outside_exact = true;
  bool jacobian_bounds_ok = true;
  double push_min_j1 = HUGE_VAL, push_min_j2 = HUGE_VAL;
  double push_max_partial1 = 0.0, push_max_partial2 = 0.0;
  std::vector<double> deltas;
  std::vector<double> lhat;         // bilip estimates over the delta sweep
  double lhat_spread = 0.0;         // (max-min)/max
};

BilipSuiteResult run_bilip_suite(int samples, std::uint64_t seed);

struct QsSuiteResult {
  double moebius_h_small = 0.0;  // H over the base sample
  double moebius_h_big = 0.0;    // H over the doubled sample
  double koebe_h = 0.0;
  double koebe_h_doubled = 0.0;
  bool stable = false;
};

QsSuiteResult run_qs_suite(std::uint64_t seed);

}  // namespace qcgeo
