#include <cmath>

#include "doctest.h"
#include "qcgeo/rng.hpp"
#include "qcgeo/suites.hpp"
#include "qcgeo/width_search.hpp"

using namespace qcgeo;

TEST_CASE("big disk search produces finite bounded values") {
  const auto c = big_disk_bound_search(1.0, 300, 0, 5.0);
  CHECK(c.value > 0.0);
  CHECK(c.value < 5.0);  // never exceeds the annulus width
  CHECK(c.trials == 300);
  // reproducible from the seed
  const auto again = big_disk_bound_search(1.0, 300, 0, 5.0);
  CHECK(again.value == c.value);
  CHECK_THROWS_AS(big_disk_bound_search(0.5, 10, 0), error);
}

TEST_CASE("single big disk control grows with the annulus width") {
  const auto narrow = single_big_disk_control(150, 3, 2.0);
  const auto wide = single_big_disk_control(150, 3, 8.0);
  CHECK(wide.value > narrow.value + 3.0);  // control tracks w_A
  CHECK(narrow.value > 1.0);
}

TEST_CASE("bounded maxima do not trend upward across strata") {
  const auto res = run_bigdisk_suite(1.0, 400, 99, {2.0, 5.0, 10.0});
  CHECK(res.bounded_slope <= 0.05);  // no upward trend; acceptance pins the same
  CHECK(res.control_slope > 1.0);
}

TEST_CASE("reflected pair searches") {
  const auto alpha = reflected_pair_bound_search(300, 1, Metric::euclidean);
  CHECK(alpha.value > 0.0);
  CHECK(std::isfinite(alpha.value));
  const auto beta = reflected_pair_bound_search(300, 1, Metric::spherical);
  CHECK(beta.value > 0.0);
  CHECK(std::isfinite(beta.value));
}

TEST_CASE("spherical trial values obey the euclidean comparison chain") {
  // For R < pi/2 and a cap D meeting the annulus, the spherical relative
  // width is at most 2 log 2 plus the euclidean relative width over the
  // chart annulus of A(0; r, R/2).
  Rng rng(4242);
  int checked = 0;
  for (int t = 0; t < 4000 && checked < 400; ++t) {
    const double big_r = rng.uniform(0.4, kPi / 2 - 0.05);
    const double r = big_r * std::exp(-rng.log_uniform(0.7, 4.0));
    const Annulus a(ExtendedPoint(0.0, 0.0), r, big_r, Metric::spherical);
    // random spherical cap
    const double d = rng.log_uniform(0.5 * r, big_r);
    const double rho = rng.log_uniform(0.1 * d, 0.9 * d);
    const double az = rng.uniform(0.0, 2 * kPi);
    const Vec3 c{std::sin(d) * std::cos(az), std::sin(d) * std::sin(az), -std::cos(d)};
    const DiskRegion cap(GeneralizedCircle::from_spherical_cap(c, rho), false);
    const double wa = relative_width(a, SphereSet(cap)).width;
    if (wa <= std::log(2.0)) continue;  // the chain argument needs w_A(D) > log 2
    if (!(big_r > 2 * r)) continue;
    // euclidean view of B = A(0; r, R/2): chart radii tan(r/2), tan(R/4)
    const auto& circle = cap.boundary();
    if (circle.kind() != GeneralizedCircle::Kind::circle) continue;
    const double lo_e = std::fmax(std::abs(circle.center()) - circle.radius(), std::tan(r / 2));
    const double hi_e = std::fmin(std::abs(circle.center()) + circle.radius(), std::tan(big_r / 4));
    if (!(hi_e > lo_e)) continue;
    const double web = std::log(hi_e / lo_e);
    CHECK(wa <= 2.0 * std::log(2.0) + web + 1e-9);
    checked++;
  }
  CHECK(checked > 100);
}

TEST_CASE("orbit width check") {
  const Annulus a(ExtendedPoint(0.0, 0.0), 0.1, 2.0, Metric::spherical);
  auto spanning = [&](double az) {
    const double lo = 0.05, hi = 2.2;
    const double d = 0.5 * (lo + hi), rad = 0.5 * (hi - lo);
    const Vec3 c{std::sin(d) * std::cos(az), std::sin(d) * std::sin(az), -std::cos(d)};
    return DiskRegion(GeneralizedCircle::from_spherical_cap(c, rad), false);
  };
  const DiskRegion k1 = spanning(0.0);
  const DiskRegion k2 = spanning(kPi);
  // D in the free gap along +y, radius set from the actual clearance
  const double dd = 0.8;
  const Vec3 dc{0.0, std::sin(dd), -std::cos(dd)};
  Vec3 kc1, kc2;
  double kr1, kr2;
  k1.spherical_cap(&kc1, &kr1);
  k2.spherical_cap(&kc2, &kr2);
  const double clearance = std::fmin(std::acos(dot(dc, kc1)) - kr1, std::acos(dot(dc, kc2)) - kr2);
  REQUIRE(clearance > 0.02);
  const DiskRegion d(GeneralizedCircle::from_spherical_cap(dc, 0.9 * clearance), false);

  const auto depth0 = orbit_width_check(a, k1, k2, d, 0);
  CHECK(depth0.max_width ==
        doctest::Approx(relative_width(a, SphereSet(d)).width).epsilon(1e-12));

  const auto depth5 = orbit_width_check(a, k1, k2, d, 5);
  const auto depth10 = orbit_width_check(a, k1, k2, d, 10);
  CHECK(depth10.max_width >= depth5.max_width - 1e-12);
  CHECK(depth10.max_width <= depth5.max_width * 1.10 + 1e-9);  // stabilization

  // symmetric configuration: the two alternating chains agree
  const DiskRegion d_sym(GeneralizedCircle::from_spherical_cap(dc, 0.5 * clearance), false);
  const auto sym = orbit_width_check(a, k1, k2, d_sym, 6);
  CHECK(sym.max_width >= 0.0);

  // violated preconditions are named errors
  const DiskRegion small_k(GeneralizedCircle::from_spherical_cap(Vec3{0, 0, -1}, 0.05), false);
  CHECK_THROWS_AS(orbit_width_check(a, small_k, k2, d, 3), error);
  const DiskRegion bad_d = k1;
  CHECK_THROWS_AS(orbit_width_check(a, k1, k2, bad_d, 3), error);
}

TEST_CASE("orbit widths stay below the beta0 estimate on shared seeds") {
  const auto res = run_reflect_orbit_suite(300, 2024, 60, 6);
  CHECK(res.orbit_trials > 10);
  CHECK(res.orbit_within_beta0);
}
