#pragma once

#include <vector>

#include "qcgeo/loop.hpp"

namespace qcgeo {

enum class MapSide { interior, exterior };

// A conformal map between a round disk side and one side of a star-like
// loop, represented by its boundary correspondence and truncated power /
// Laurent coefficients. For the exterior side F maps {|w| > 1} onto the loop
// exterior with F(inf) = inf; for the interior side F maps the unit disk onto
// the loop interior with F(0) = center.
struct RiemannMap {
  MapSide side = MapSide::exterior;
  Complex center{0.0, 0.0};
  Complex star_center{0.0, 0.0};  // the loop's star center (seeding angles)
  int nodes = 0;
  std::vector<double> phi;       // boundary correspondence at theta_k = 2 pi k / n
  std::vector<Complex> coef;     // exterior: F(w) = coef[0] w + coef[1] + coef[m] w^{1-m}
                                 // interior: F(w) = center + sum coef[m] w^{m+1}
  double conformality_residual = 0.0;  // relative energy outside the analytic range
  int iterations = 0;

  Complex forward(Complex w) const;   // F
  Complex derivative(Complex w) const;
  // F^{-1} by Newton iteration, seeded from the far field or from the
  // boundary node whose image angle matches z.
  Complex to_round(Complex z) const;
};

// Conjugate-function (boundary correspondence) iteration on 2^log2_nodes
// boundary nodes. Rejects loops whose circularity residual exceeds the
// method's convergence threshold (0.3) or with non-positive radius; reports
// divergence if the correspondence update grows over 50 iterations.
RiemannMap riemann_step(const AnalyticLoop& loop, MapSide side, int log2_nodes = 9,
                        double tol = 1e-13, int max_iters = 200);

}  // namespace qcgeo
