#include <cmath>

#include "doctest.h"
#include "qcgeo/annulus.hpp"
#include "qcgeo/rng.hpp"
#include "qcgeo/suites.hpp"

using namespace qcgeo;

TEST_CASE("annulus width pinned values") {
  CHECK(Annulus(ExtendedPoint(0.0, 0.0), 1.0, std::exp(1.0), Metric::euclidean).width() ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(Annulus(ExtendedPoint(0.0, 0.0), 1.0, 10.0, Metric::euclidean).width() ==
        doctest::Approx(std::log(10.0)).epsilon(1e-14));
  CHECK_THROWS_AS(Annulus(ExtendedPoint(0.0, 0.0), 1.0, 1.0, Metric::euclidean), error);
  CHECK_THROWS_AS(Annulus(ExtendedPoint(0.0, 0.0), 1.0, 3.3, Metric::spherical), error);
}

TEST_CASE("relative width of a disk: closed form with sampling oracle") {
  const Annulus a(ExtendedPoint(0.0, 0.0), 1.0, 10.0, Metric::euclidean);
  const auto rep = relative_width(a, SphereSet(DiskRegion::disk(Complex(5, 0), 1.0)));
  CHECK(rep.r_A == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(rep.R_A == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(rep.width == doctest::Approx(std::log(1.5)).epsilon(1e-12));

  // dense boundary+interior sampling oracle
  ContinuumSample dense;
  Rng rng(3);
  for (int i = 0; i < 4000; ++i) {
    dense.points.emplace_back(Complex(5, 0) + rng.in_disk(Complex(0, 0), 1.0));
  }
  for (int i = 0; i < 720; ++i) {
    dense.points.emplace_back(Complex(5, 0) + std::polar(1.0, 2 * kPi * i / 720.0));
  }
  const auto oracle = relative_width(a, SphereSet(dense));
  CHECK(oracle.r_A == doctest::Approx(rep.r_A).epsilon(1e-3));
  CHECK(oracle.R_A == doctest::Approx(rep.R_A).epsilon(1e-3));
}

TEST_CASE("relative width edge cases") {
  const Annulus a(ExtendedPoint(0.0, 0.0), 1.0, 10.0, Metric::euclidean);
  // disjoint set
  CHECK(relative_width(a, SphereSet(DiskRegion::disk(Complex(30, 0), 2.0))).width == 0.0);
  CHECK_FALSE(relative_width(a, SphereSet(DiskRegion::disk(Complex(30, 0), 2.0))).intersects);
  // set containing the whole annulus
  const auto rep = relative_width(a, SphereSet(DiskRegion::disk(Complex(0, 0), 50.0)));
  CHECK(rep.width == doctest::Approx(a.width()).epsilon(1e-12));
  // always bounded by the annulus width
  Rng rng(9);
  for (int t = 0; t < 500; ++t) {
    const auto d = DiskRegion::disk(Complex(rng.uniform(-12, 12), rng.uniform(-12, 12)),
                                    rng.log_uniform(0.01, 8.0));
    CHECK(relative_width(a, SphereSet(d)).width <= a.width() + 1e-12);
  }
}

TEST_CASE("relative width monotone under enlargement and scale invariant") {
  const Annulus a(ExtendedPoint(0.0, 0.0), 0.5, 7.0, Metric::euclidean);
  Rng rng(21);
  for (int t = 0; t < 300; ++t) {
    const Complex c(rng.uniform(-5, 5), rng.uniform(-5, 5));
    const double r1 = rng.log_uniform(0.05, 2.0);
    const double r2 = r1 * rng.uniform(1.0, 3.0);
    const double w1 = relative_width(a, SphereSet(DiskRegion::disk(c, r1))).width;
    const double w2 = relative_width(a, SphereSet(DiskRegion::disk(c, r2))).width;
    CHECK(w2 >= w1 - 1e-12);

    // invariance under z -> lambda z + t
    const double lambda = rng.log_uniform(0.2, 5.0);
    const Complex shift(rng.uniform(-3, 3), rng.uniform(-3, 3));
    const Annulus a2(ExtendedPoint(lambda * Complex(0, 0) + shift), lambda * 0.5, lambda * 7.0,
                     Metric::euclidean);
    const double w3 =
        relative_width(a2, SphereSet(DiskRegion::disk(lambda * c + shift, lambda * r1))).width;
    CHECK(w3 == doctest::Approx(w1).epsilon(1e-10));
  }
}

TEST_CASE("spherical relative width via caps") {
  const Annulus a(ExtendedPoint(0.0, 0.0), 0.2, 2.0, Metric::spherical);
  // a cap centered on the annulus center axis at spherical distance 1
  const double d = 1.0, rho = 0.3;
  const double sd = std::sin(d);
  (void)sd;
  const Vec3 x = lift(ExtendedPoint(Complex(0, 0)));
  const Vec3 c{std::sin(d), 0.0, -std::cos(d)};
  (void)x;
  const DiskRegion cap(GeneralizedCircle::from_spherical_cap(c, rho), false);
  const auto rep = relative_width(a, SphereSet(cap));
  CHECK(rep.r_A == doctest::Approx(d - rho).epsilon(1e-9));
  CHECK(rep.R_A == doctest::Approx(d + rho).epsilon(1e-9));
}

TEST_CASE("subannulus selection: explicit cases") {
  const Annulus a(ExtendedPoint(0.0, 0.0), 0.01, 1.0, Metric::euclidean);  // w ~ 4.6

  SUBCASE("all sets small: A returned unchanged") {
    std::vector<SphereSet> sets;
    for (int i = 0; i < 4; ++i) {
      sets.push_back(SphereSet(DiskRegion::disk(Complex(0.3 + 0.1 * i, 0.02 * i), 0.01)));
    }
    const auto sel = subannulus_select(a, sets);
    CHECK(sel.alternative == SubannulusAlternative::one_small);
    CHECK_FALSE(sel.exception.has_value());
    CHECK(sel.selected.r == a.r);
    CHECK(sel.selected.R == a.R);
  }

  SUBCASE("one long radial segment: shrink around it with exception") {
    std::vector<SphereSet> sets;
    sets.push_back(SphereSet(make_segment(Complex(0.012, 0), Complex(0.9, 0), 64)));
    sets.push_back(SphereSet(DiskRegion::disk(Complex(0, 0.5), 0.01)));
    const auto sel = subannulus_select(a, sets);
    CHECK(sel.alternative == SubannulusAlternative::one_small);
    REQUIRE(sel.exception.has_value());
    CHECK(*sel.exception == 0);
    // the selected annulus hugs the segment
    CHECK(sel.selected.r == doctest::Approx(0.012).epsilon(1e-9));
    CHECK(sel.selected.R == doctest::Approx(0.9).epsilon(1e-9));
  }

  SUBCASE("two crossing radial segments: two-spanning alternative") {
    std::vector<SphereSet> sets;
    sets.push_back(SphereSet(make_segment(Complex(0.005, 0), Complex(1.1, 0), 128)));
    sets.push_back(SphereSet(make_segment(Complex(0, -0.005), Complex(0, -1.1), 128)));
    const auto sel = subannulus_select(a, sets);
    CHECK(sel.alternative == SubannulusAlternative::two_spanning);
    CHECK(meets_both_boundaries(sel.selected, sets[sel.spanning[0]], 1e-9));
    CHECK(meets_both_boundaries(sel.selected, sets[sel.spanning[1]], 1e-9));
  }
}

TEST_CASE("subannulus suite: randomized postconditions hold") {
  const auto res = run_subannulus_suite(300, 20240);
  CHECK(res.trials == 300);
  CHECK(res.violations == 0);
}

TEST_CASE("tie-break picks the smallest index") {
  const Annulus a(ExtendedPoint(0.0, 0.0), 0.01, 1.0, Metric::euclidean);
  // identical spanning segments, indices 1 and 2
  std::vector<SphereSet> sets;
  sets.push_back(SphereSet(DiskRegion::disk(Complex(0.5, 0.5), 0.005)));
  sets.push_back(SphereSet(make_segment(Complex(0.02, 0.0), Complex(0.8, 0), 64)));
  sets.push_back(SphereSet(make_segment(Complex(-0.02, 0.0), Complex(-0.8, 0), 64)));
  const auto sel = subannulus_select(a, sets);
  CHECK(sel.spanning[0] == 1);
}
