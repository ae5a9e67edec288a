#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qcgeo/sphere.hpp"

namespace qcgeo {

// 2x2 real differential of a planar map.
struct Jacobian2 {
  double fxx = 1.0, fxy = 0.0, fyx = 0.0, fyy = 1.0;
  double det() const { return fxx * fyy - fxy * fyx; }
  double max_abs_entry() const {
    return std::fmax(std::fmax(std::abs(fxx), std::abs(fxy)), std::fmax(std::abs(fyx), std::abs(fyy)));
  }
};

struct MapPiece {
  std::string name;
  std::function<bool(Complex)> contains;       // half-open conventions, checked in order
  std::function<Complex(Complex)> apply;
  std::function<Jacobian2(Complex)> jacobian;  // defined in the piece interior
};

// A piecewise closed-form planar map: the pieces tile the declared support,
// and the map is exactly the identity outside it.
class PiecewiseMap {
 public:
  PiecewiseMap(std::vector<MapPiece> pieces, std::function<bool(Complex)> support,
               std::string label)
      : pieces_(std::move(pieces)), support_(std::move(support)), label_(std::move(label)) {}

  Complex apply(Complex z) const {
    if (!support_(z)) return z;  // identity branch, bit-exact
    for (const auto& p : pieces_) {
      if (p.contains(z)) return p.apply(z);
    }
    return z;
  }

  bool in_support(Complex z) const { return support_(z); }
  const std::vector<MapPiece>& pieces() const { return pieces_; }
  const std::string& label() const { return label_; }

 private:
  std::vector<MapPiece> pieces_;
  std::function<bool(Complex)> support_;
  std::string label_;
};

// Normalized-frame parameters: r = -c = 1, a = 1 - cos(delta), b = sin(delta),
// with 0 < delta < pi/3. The placement similarity is S(z) = anchor + scale*z.
struct PushParams {
  double delta = kPi / 6;
  Complex anchor{0.0, 0.0};
  Complex scale{1.0, 0.0};
};

struct PullParams {
  double delta = kPi / 6;
  Complex anchor{0.0, 0.0};
  Complex scale{1.0, 0.0};
};

// Pushes the chord {-a} x [-b,b] of the unit circle through the origin onto
// the circular arc through (-a,-b), (0,0), (-a,b); identity outside the
// rectangle [-2a, a] x [-b, b] (all in the placed frame).
PiecewiseMap push_map(const PushParams& p);

// Detaches the chord-cut disk from the half plane {x >= 0}: maps the big
// component T of B((-1,0),1) minus the chord onto B((-1-a,0),1); identity on
// {x >= 0} (placed frame).
PiecewiseMap pull_map(const PullParams& p);

// Max over sampled point pairs of max{|f(x)-f(y)|/|x-y|, |x-y|/|f(x)-f(y)|},
// pairs taken at scales {h, 10h, diam/4} over the given estimation rectangle.
double bilip_estimate(const PiecewiseMap& m, Complex rect_lo, Complex rect_hi, double h,
                      std::uint64_t seed = 2024);

}  // namespace qcgeo
