#include <cmath>

#include "doctest.h"
#include "qcgeo/explicit_density.hpp"
#include "qcgeo/moebius.hpp"
#include "qcgeo/profile.hpp"
#include "qcgeo/suites.hpp"

using namespace qcgeo;

TEST_CASE("explicit annulus density: obstacle-free bounds") {
  for (double w : {3.0, 10.0, 30.0}) {
    const double big_r = 2.5;
    const Annulus a(ExtendedPoint(0.0, 0.0), big_r * std::exp(-w), big_r, Metric::spherical);
    const auto rep = explicit_annulus_density(a, {}, 100, 42);
    // mass bounded by 2 pi / w, the analytic bound
    CHECK(rep.mass <= 2.0 * kPi / w);
    CHECK(rep.mass > 0.0);
    // admissible on every sampled path
    CHECK(rep.admissibility_residual >= 1.0 - 1e-3);
    CHECK(rep.paths_checked == 100);
  }
}

TEST_CASE("an obstacle spanning the annulus carries weight one") {
  const Annulus a(ExtendedPoint(0.0, 0.0), 0.1, 2.0, Metric::spherical);
  // a cap meeting both boundary circles
  const double lo = 0.05, hi = 2.2;
  const Vec3 c{std::sin(0.5 * (lo + hi)), 0.0, -std::cos(0.5 * (lo + hi))};
  const DiskRegion cap(GeneralizedCircle::from_spherical_cap(c, 0.5 * (hi - lo)), false);
  const auto rep = explicit_annulus_density(a, {SphereSet(cap)}, 60, 9);
  REQUIRE(rep.obstacle_weight.size() == 1);
  CHECK(rep.obstacle_weight[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep.admissibility_residual >= 1.0 - 1e-3);
}

TEST_CASE("upper density suite: fitted constant is stable across widths") {
  const auto res = run_upper_density_suite(4, 60, 77);
  for (double r : res.worst_residual) CHECK(r >= 1.0 - 1e-3);
  CHECK(res.obstacle_free_margin >= 0.0);
  CHECK(res.c_spread < 0.25);
}

TEST_CASE("invariance: identity map changes nothing") {
  Grid g(GridSpec{-2, 2, -2, 2, 48, 48, Metric::euclidean});
  FamilySpec fam;
  fam.e = SphereSet(make_segment(Complex(-1.2, -0.8), Complex(-1.2, 0.8), 48));
  fam.f = SphereSet(make_segment(Complex(1.2, -0.8), Complex(1.2, 0.8), 48));
  fam.obstacles.push_back(SphereSet(DiskRegion::disk(Complex(0, 0), 0.4)));
  const double dev = invariance_check(g, fam, MoebiusMap::identity());
  CHECK(dev == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("invariance under a sphere rotation within tolerance") {
  Grid g(GridSpec{-4, 4, -4, 4, 96, 96, Metric::spherical});
  FamilySpec fam;
  fam.e = SphereSet(make_segment(Complex(-0.9, -0.5), Complex(-0.9, 0.5), 48));
  fam.f = SphereSet(make_segment(Complex(0.9, -0.5), Complex(0.9, 0.5), 48));
  fam.obstacles.push_back(SphereSet(DiskRegion::disk(Complex(0, 0.1), 0.35)));
  Rng rng(123);
  const MoebiusMap rot = MoebiusMap::random_rotation(rng);
  const double dev = invariance_check(g, fam, rot);
  CHECK(dev < 0.08);  // coarse grid; acceptance runs N = 256 at 5%
}

TEST_CASE("compare report requires fat obstacles and bounds the ratio") {
  Grid g(GridSpec{-2, 2, -2, 2, 64, 64, Metric::euclidean});
  FamilySpec fam;
  fam.e = SphereSet(make_segment(Complex(-0.8, 1.2), Complex(0.8, 1.2), 48));
  fam.f = SphereSet(make_segment(Complex(-0.8, -1.2), Complex(0.8, -1.2), 48));
  const auto no_obs = compare_report(g, fam, 1.0 / kPi);
  // with no obstacles the two programs coincide
  CHECK(no_obs.classical == doctest::Approx(no_obs.transboundary).epsilon(1e-9));
  CHECK(no_obs.ratio <= 1.0 + 1e-9);

  fam.obstacles.push_back(SphereSet(DiskRegion::disk(Complex(0, 0), 0.4)));
  const auto rep = compare_report(g, fam, 1.0 / kPi);
  CHECK(rep.ratio < HUGE_VAL);
  CHECK(rep.transboundary > 0.0);

  // a segment obstacle has measure zero and fails the fatness gate
  FamilySpec bad = fam;
  bad.obstacles.push_back(SphereSet(make_segment(Complex(-0.5, 0.8), Complex(0.5, 0.8), 24)));
  CHECK_THROWS_AS(compare_report(g, bad, 1.0 / kPi), error);
}

TEST_CASE("compare suite produces a finite empirical constant") {
  const auto res = run_compare_suite(6, 31337, 64, 1.0 / kPi);
  CHECK(res.configs == 6);
  CHECK(res.max_ratio < HUGE_VAL);
  CHECK(res.max_ratio > 0.0);
}

TEST_CASE("loewner sweep: transboundary modulus decreases with relative distance") {
  const auto res = run_loewner_suite(2, 2718, 64);
  CHECK(res.profile_positive);
  CHECK(res.profile.monotone());
  // larger relative distance gives smaller modulus
  CHECK(res.min_modulus.front() > res.min_modulus.back());
}

TEST_CASE("profile fitting: PAVA produces monotone tables") {
  std::vector<std::pair<double, double>> pts{{1, 3.0}, {2, 2.0}, {3, 2.5}, {4, 1.0}, {5, 1.2}};
  const auto dec = fit_profile(pts, false);
  CHECK(dec.monotone());
  CHECK(dec.eval(0.5) == doctest::Approx(3.0));
  CHECK(dec.eval(10.0) == doctest::Approx(dec.y.back()));
  const auto inc = fit_profile({{0, 1.0}, {1, 0.5}, {2, 2.0}}, true);
  CHECK(inc.monotone());
}

TEST_CASE("transboundary is at least the hole-avoiding classical modulus") {
  Grid g(GridSpec{-2, 2, -2, 2, 64, 64, Metric::euclidean});
  Rng rng(64);
  for (int t = 0; t < 4; ++t) {
    FamilySpec fam;
    fam.e = SphereSet(make_segment(Complex(-1.5, -0.9), Complex(-1.5, 0.9), 48));
    fam.f = SphereSet(make_segment(Complex(1.5, -0.9), Complex(1.5, 0.9), 48));
    fam.obstacles.push_back(SphereSet(
        DiskRegion::disk(Complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)), 0.3)));
    const auto rep = compare_report(g, fam, 1.0 / kPi);
    CHECK(rep.transboundary >= rep.classical * (1.0 - 5e-3));
  }
}
