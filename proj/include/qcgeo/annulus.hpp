#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "qcgeo/circle.hpp"
#include "qcgeo/continuum.hpp"

namespace qcgeo {

// Closed annulus A(x; r, R) in the chart (euclidean) or on the sphere.
struct Annulus {
  ExtendedPoint center;
  double r = 0.0;
  double R = 0.0;
  Metric metric = Metric::euclidean;

  Annulus(ExtendedPoint x, double inner, double outer, Metric m)
      : center(x), r(inner), R(outer), metric(m) {
    if (!(0.0 < r && r < R)) throw error("annulus requires 0 < r < R");
    if (metric == Metric::spherical && !(R < kPi)) throw error("spherical annulus requires R < pi");
    if (metric == Metric::euclidean && center.at_infinity) {
      throw error("euclidean annulus center must be finite");
    }
  }

  double width() const { return std::log(R / r); }
};

struct RelativeWidthReport {
  double r_A = 0.0;  // inf distance from the center over K cap A, clipped
  double R_A = 0.0;  // sup distance, clipped
  double width = 0.0;
  bool intersects = false;
};

using SphereSet = std::variant<DiskRegion, ContinuumSample>;

// Range of distances from a point to a connected set (hi may be +inf for
// unbounded sets in the euclidean metric).
void distance_range(const ExtendedPoint& x, const SphereSet& k, Metric metric, double* lo, double* hi);

RelativeWidthReport relative_width(const Annulus& a, const SphereSet& k);

// Whether the set meets both boundary circles of the annulus (within tol for
// sampled continua).
bool meets_both_boundaries(const Annulus& a, const SphereSet& k, double tol = 0.0);

enum class SubannulusAlternative { one_small, two_spanning };

struct SubannulusResult {
  Annulus selected;
  SubannulusAlternative alternative = SubannulusAlternative::one_small;
  std::optional<int> exception;  // the single allowed large index (alternative i)
  int spanning[2] = {-1, -1};    // the two spanning indices (alternative ii)
};

// Three-stage subannulus selection: returns A itself when every relative
// width is at most w_A^(1/3); otherwise shrinks around a maximal-width set
// once or twice. The returned annulus A' is concentric with A, satisfies
// w_{A'} >= min{w_A, w_A^(1/9)}, and either all sets but at most one have
// w_{A'}(K_i) <= w_{A'}^(1/3), or two sets meet both boundary circles of A'.
// Ties on the maximal width go to the smallest index.
SubannulusResult subannulus_select(const Annulus& a, const std::vector<SphereSet>& sets);

}  // namespace qcgeo
