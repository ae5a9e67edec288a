#pragma once

#include <vector>

#include "qcgeo/sphere.hpp"

namespace qcgeo {

// A sampled monotone curve (argument, bound), isotonic-fitted in the declared
// direction. Evaluation is piecewise linear with flat extrapolation.
struct EmpiricalProfile {
  bool increasing = true;
  std::vector<double> x;
  std::vector<double> y;

  double eval(double arg) const;
  bool monotone() const;
};

// Pool-adjacent-violators fit of the scatter (x, y).
EmpiricalProfile fit_profile(std::vector<std::pair<double, double>> points, bool increasing);

}  // namespace qcgeo
