#pragma once

#include <cstdint>
#include <vector>

#include "qcgeo/annulus.hpp"
#include "qcgeo/grid.hpp"

namespace qcgeo {

struct ExplicitDensityReport {
  std::vector<double> obstacle_weight;  // w_A(K_i) / w_A
  double mass = 0.0;                    // quadrature mass of the density plus weights
  double radial_integral = 0.0;         // int_r^R sin(t)/t^2 dt
  double admissibility_residual = 1.0;  // min sampled path value
  int paths_checked = 0;
};

// The admissible transboundary density rho(z) = chi_A(z) / (w_A sigma(x,z))
// with component weights w_A(K_i)/w_A, for the family crossing a spherical
// annulus. The residual is audited on random inner-to-outer polylines with
// log-spaced radii (grid walks cannot resolve deep annuli).
ExplicitDensityReport explicit_annulus_density(const Annulus& a,
                                               const std::vector<SphereSet>& obstacles,
                                               int path_samples, std::uint64_t seed);

// Projects the density onto a grid for export; cells outside the annulus get
// zero.
std::vector<double> project_annulus_density(const Annulus& a, const Grid& grid);

}  // namespace qcgeo
