#include <cmath>

#include "doctest.h"
#include "modulus_oracle.hpp"
#include "qcgeo/modulus.hpp"
#include "qcgeo/rng.hpp"

using namespace qcgeo;

namespace {

FamilySpec rectangle_family(double width, double height) {
  FamilySpec fam;
  fam.e = SphereSet(make_segment(Complex(0, 0), Complex(0, height), 64));
  fam.f = SphereSet(make_segment(Complex(width, 0), Complex(width, height), 64));
  fam.domain = [width, height](Complex z) {
    return z.real() > 0 && z.real() < width && z.imag() > 0 && z.imag() < height;
  };
  return fam;
}

}  // namespace

TEST_CASE("rectangle modulus equals height/width") {
  // curves joining the two short sides of a 2 x 1 rectangle: modulus 1/2
  Grid g(GridSpec{0.0, 2.0, 0.0, 1.0, 128, 64, Metric::euclidean});
  const auto res = classical_modulus(g, rectangle_family(2.0, 1.0));
  CHECK_FALSE(res.disconnected);
  CHECK(res.min_path_value >= 1.0 - 1e-3);
  CHECK(res.modulus == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("euclidean annulus modulus matches 2 pi / log R") {
  const double big_r = std::exp(1.0);
  Grid g(GridSpec{-3.0, 3.0, -3.0, 3.0, 128, 128, Metric::euclidean});
  const auto fam = annulus_family(Annulus(ExtendedPoint(0.0, 0.0), 1.0, big_r, Metric::euclidean));
  const auto res = classical_modulus(g, fam);
  CHECK(res.modulus == doctest::Approx(2.0 * kPi).epsilon(0.05));
  // the analytic extremal density 1/(|z| log(R/r)) has the same mass
  double analytic = 2.0 * kPi / std::log(big_r);
  CHECK(res.modulus == doctest::Approx(analytic).epsilon(0.05));
}

TEST_CASE("disconnected family reports modulus zero") {
  Grid g(GridSpec{-2, 2, -2, 2, 48, 48, Metric::euclidean});
  FamilySpec fam;
  fam.e = SphereSet(make_segment(Complex(-1.5, -0.5), Complex(-1.5, 0.5), 32));
  fam.f = SphereSet(make_segment(Complex(1.5, -0.5), Complex(1.5, 0.5), 32));
  // a full vertical wall separates E from F
  fam.obstacles.push_back(SphereSet(DiskRegion::disk(Complex(0, 0), 10.0)));
  // classical: the obstacle is a hole, nothing connects
  const auto res = classical_modulus(g, fam);
  CHECK(res.disconnected);
  CHECK(res.modulus == 0.0);
  // transboundary: curves may cross at weight cost, so the modulus is 1
  // (the single separating component must carry weight 1)
  const auto trans = transboundary_modulus(g, fam);
  CHECK_FALSE(trans.disconnected);
  CHECK(trans.modulus == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("transboundary with no obstacles reduces to classical") {
  Grid g(GridSpec{-2, 2, -2, 2, 64, 64, Metric::euclidean});
  FamilySpec fam;
  fam.e = SphereSet(make_segment(Complex(-1.2, -0.8), Complex(-1.2, 0.8), 48));
  fam.f = SphereSet(make_segment(Complex(1.2, -0.8), Complex(1.2, 0.8), 48));
  const auto classical = classical_modulus(g, fam);
  const auto trans = transboundary_modulus(g, fam);
  CHECK(trans.modulus == doctest::Approx(classical.modulus).epsilon(1e-9));
}

TEST_CASE("cutting plane matches the exhaustive-path oracle on toy grids") {
  ModulusOptions tight;
  tight.admissibility_tol = 1e-9;
  tight.mass_change_tol = 1e-12;
  tight.dual_tol = 1e-13;
  tight.max_rounds = 4000;
  tight.max_sweeps_per_round = 4000;

  SUBCASE("5x5 with a one-cell obstacle") {
    Grid g(GridSpec{0.0, 1.0, 0.0, 1.0, 5, 5, Metric::euclidean});
    FamilySpec fam;
    fam.e = SphereSet(make_segment(Complex(0.0, 0.1), Complex(0.0, 0.9), 32));
    fam.f = SphereSet(make_segment(Complex(1.0, 0.1), Complex(1.0, 0.9), 32));
    fam.obstacles.push_back(SphereSet(DiskRegion::disk(Complex(0.5, 0.5), 0.09)));
    ModulusOptions opt = tight;
    opt.connectivity = 4;
    const auto res = transboundary_modulus(g, fam, opt);
    const GridGraph graph(g, fam, true, 4);
    const auto oracle = qcgeo_oracle::solve_by_enumeration(graph, g, 3'000'000);
    REQUIRE_FALSE(oracle.budget_exceeded);
    CHECK(oracle.max_violation < 1e-9);
    CHECK(res.modulus == doctest::Approx(oracle.value).epsilon(1e-6));
  }

  SUBCASE("4x4 classical, 4- and 8-neighborhoods") {
    Grid g(GridSpec{0.0, 1.0, 0.0, 1.0, 4, 4, Metric::euclidean});
    FamilySpec fam;
    fam.e = SphereSet(make_segment(Complex(0.0, 0.1), Complex(0.0, 0.9), 32));
    fam.f = SphereSet(make_segment(Complex(1.0, 0.1), Complex(1.0, 0.9), 32));
    for (int conn : {4, 8}) {
      ModulusOptions opt = tight;
      opt.connectivity = conn;
      const auto res = classical_modulus(g, fam, opt);
      const GridGraph graph(g, fam, false, conn);
      const auto oracle = qcgeo_oracle::solve_by_enumeration(graph, g, 3'000'000);
      REQUIRE_FALSE(oracle.budget_exceeded);
      CHECK(res.modulus == doctest::Approx(oracle.value).epsilon(1e-6));
    }
  }

  SUBCASE("3x3 with knight steps and an obstacle") {
    Grid g(GridSpec{0.0, 1.0, 0.0, 1.0, 3, 3, Metric::euclidean});
    FamilySpec fam;
    fam.e = SphereSet(make_segment(Complex(0.0, 0.1), Complex(0.0, 0.9), 32));
    fam.f = SphereSet(make_segment(Complex(1.0, 0.1), Complex(1.0, 0.9), 32));
    fam.obstacles.push_back(SphereSet(DiskRegion::disk(Complex(0.5, 0.17), 0.12)));
    ModulusOptions opt = tight;
    opt.connectivity = 16;
    const auto res = transboundary_modulus(g, fam, opt);
    const GridGraph graph(g, fam, true, 16);
    const auto oracle = qcgeo_oracle::solve_by_enumeration(graph, g, 3'000'000);
    REQUIRE_FALSE(oracle.budget_exceeded);
    CHECK(res.modulus == doctest::Approx(oracle.value).epsilon(1e-6));
  }
}

TEST_CASE("returned densities are admissible for fresh random paths") {
  Grid g(GridSpec{-2, 2, -2, 2, 64, 64, Metric::euclidean});
  FamilySpec fam;
  fam.e = SphereSet(make_segment(Complex(-1.2, -0.8), Complex(-1.2, 0.8), 48));
  fam.f = SphereSet(make_segment(Complex(1.2, -0.8), Complex(1.2, 0.8), 48));
  fam.obstacles.push_back(SphereSet(DiskRegion::disk(Complex(0, 0), 0.4)));
  const auto res = transboundary_modulus(g, fam);
  const GridGraph graph(g, fam, true, 16);
  const double residual = admissibility_residual(graph, res, 1000, 555);
  CHECK(residual >= 1.0 - 1e-3);
}

TEST_CASE("narrow passage: transboundary dwarfs classical as the gap closes") {
  auto passage_family = [](double gap) {
    FamilySpec fam;
    fam.e = SphereSet(make_segment(Complex(-0.35, 1.2), Complex(0.35, 1.2), 48));
    fam.f = SphereSet(make_segment(Complex(-0.35, -1.2), Complex(0.35, -1.2), 48));
    fam.obstacles.push_back(SphereSet(DiskRegion::disk(Complex(-0.7 - gap / 2, 0), 0.7)));
    fam.obstacles.push_back(SphereSet(DiskRegion::disk(Complex(0.7 + gap / 2, 0), 0.7)));
    return fam;
  };
  Grid g(GridSpec{-2, 2, -2, 2, 128, 128, Metric::euclidean});
  const auto wide_c = classical_modulus(g, passage_family(0.3));
  const auto tight_c = classical_modulus(g, passage_family(1e-3));
  const auto wide_t = transboundary_modulus(g, passage_family(0.3));
  const auto tight_t = transboundary_modulus(g, passage_family(1e-3));
  CHECK(wide_c.modulus > 5.0 * tight_c.modulus);
  CHECK(tight_t.modulus > 5.0 * tight_c.modulus);
  CHECK(tight_t.modulus > 0.3 * wide_t.modulus);
}

TEST_CASE("mirror-symmetric configurations give mirror-symmetric densities") {
  Grid g(GridSpec{-2, 2, -2, 2, 64, 64, Metric::euclidean});
  FamilySpec fam;
  fam.e = SphereSet(make_segment(Complex(-1.4, -1.0), Complex(-1.4, 1.0), 48));
  fam.f = SphereSet(make_segment(Complex(1.4, -1.0), Complex(1.4, 1.0), 48));
  fam.obstacles.push_back(SphereSet(DiskRegion::disk(Complex(0, 0), 0.5)));
  const auto res = transboundary_modulus(g, fam);
  // x -> -x symmetry: compare mirrored cells in L2
  double diff2 = 0.0, norm2 = 0.0;
  for (int iy = 0; iy < 64; ++iy) {
    for (int ix = 0; ix < 64; ++ix) {
      const double a = res.cell_density[g.index(ix, iy)];
      const double b = res.cell_density[g.index(63 - ix, iy)];
      diff2 += (a - b) * (a - b) * g.area(g.index(ix, iy));
      norm2 += a * a * g.area(g.index(ix, iy));
    }
  }
  CHECK(std::sqrt(diff2) <= 2e-3 * std::fmax(1.0, std::sqrt(norm2)));
}

TEST_CASE("grid refinement changes the annulus estimate by little") {
  const auto fam = annulus_family(Annulus(ExtendedPoint(0.0, 0.0), 1.0, 2.0, Metric::euclidean));
  Grid coarse(GridSpec{-2.3, 2.3, -2.3, 2.3, 96, 96, Metric::euclidean});
  Grid fine(GridSpec{-2.3, 2.3, -2.3, 2.3, 192, 192, Metric::euclidean});
  const double m1 = classical_modulus(coarse, fam).modulus;
  const double m2 = classical_modulus(fine, fam).modulus;
  CHECK(std::abs(m1 - m2) <= 0.03 * std::fmax(m1, m2));
}
