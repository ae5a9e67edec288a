#include <cmath>

#include "doctest.h"
#include "qcgeo/circle.hpp"
#include "qcgeo/moebius.hpp"
#include "qcgeo/rng.hpp"

using namespace qcgeo;

namespace {

GeneralizedCircle random_circle(Rng& rng) {
  const Complex c(rng.uniform(-3, 3), rng.uniform(-3, 3));
  return GeneralizedCircle::circle(c, rng.log_uniform(0.05, 4.0));
}

MoebiusMap random_moebius(Rng& rng) {
  for (;;) {
    const Complex a(rng.normal(), rng.normal());
    const Complex b(rng.normal(), rng.normal());
    const Complex c(rng.normal(), rng.normal());
    const Complex d(rng.normal(), rng.normal());
    if (std::abs(a * d - b * c) > 0.1) return MoebiusMap(a, b, c, d);
  }
}

ExtendedPoint random_finite(Rng& rng) {
  return ExtendedPoint(Complex(rng.uniform(-4, 4), rng.uniform(-4, 4)));
}

}  // namespace

TEST_CASE("reflection pinned values") {
  const auto unit = GeneralizedCircle::circle(Complex(0, 0), 1.0);
  CHECK(std::abs(unit.reflect(ExtendedPoint(2.0, 0.0)).value - Complex(0.5, 0.0)) < 1e-15);

  const auto imaginary_axis = GeneralizedCircle::line(Complex(1, 0), 0.0);
  CHECK(std::abs(imaginary_axis.reflect(ExtendedPoint(1.0, 1.0)).value - Complex(-1.0, 1.0)) < 1e-15);

  const auto c = GeneralizedCircle::circle(Complex(1, 0), 2.0);
  CHECK(std::abs(c.reflect(ExtendedPoint(2.0, 0.0)).value - Complex(5.0, 0.0)) < 1e-14);
}

TEST_CASE("reflection is an involution fixing the circle") {
  Rng rng(101);
  for (int i = 0; i < 10000; ++i) {
    const auto c = random_circle(rng);
    const auto z = random_finite(rng);
    const auto mid = c.reflect(z);
    const auto back = c.reflect(mid);
    if (back.at_infinity || mid.at_infinity) continue;  // z hit the center numerically
    // round trips through a distant intermediate lose precision accordingly
    const double scale = 1.0 + std::abs(z.value) + std::abs(mid.value);
    CHECK(std::abs(back.value - z.value) <= 1e-12 * scale);
  }
  const auto c = GeneralizedCircle::circle(Complex(0.5, -1.0), 1.7);
  for (int i = 0; i < 64; ++i) {
    const auto p = c.boundary_point(2.0 * kPi * i / 64);
    CHECK(std::abs(c.reflect(p).value - p.value) < 1e-13);
  }
}

TEST_CASE("reflection swaps the two complementary disks") {
  const auto d = DiskRegion::disk(Complex(1, 1), 2.0);
  const auto refl = MoebiusMap::reflection(d.boundary());
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto z = random_finite(rng);
    if (d.boundary().contains_boundary(z, 1e-6)) continue;
    const bool inside = d.contains(z);
    const auto w = refl.apply(z);
    CHECK(d.contains(w) == !inside);
  }
}

TEST_CASE("apply_moebius pinned values") {
  const auto inv = MoebiusMap::inversion();  // z -> 1/z
  const auto small = GeneralizedCircle::circle(Complex(0, 0), 0.5);
  const auto image = inv.map_circle(small);
  REQUIRE(image.kind() == GeneralizedCircle::Kind::circle);
  CHECK(std::abs(image.center()) < 1e-14);
  CHECK(image.radius() == doctest::Approx(2.0).epsilon(1e-14));

  Rng rng(17);
  const auto m = random_moebius(rng);
  const auto id = MoebiusMap::compose(m, m.inverse());
  for (int i = 0; i < 100; ++i) {
    const auto z = random_finite(rng);
    CHECK(std::abs(id.apply(z).value - z.value) < 1e-12 * (1.0 + std::abs(z.value)));
  }
}

TEST_CASE("conjugated reflection equals the reflection in the translated circle") {
  const auto refl_unit = MoebiusMap::reflection(GeneralizedCircle::circle(Complex(0, 0), 1.0));
  const auto t = MoebiusMap::translation(Complex(1, 0));
  const auto conjugated = MoebiusMap::compose(t, MoebiusMap::compose(refl_unit, t.inverse()));
  const auto direct = MoebiusMap::reflection(GeneralizedCircle::circle(Complex(1, 0), 1.0));
  Rng rng(29);
  for (int i = 0; i < 100; ++i) {
    const auto z = random_finite(rng);
    const auto w1 = conjugated.apply(z);
    const auto w2 = direct.apply(z);
    if (w1.at_infinity || w2.at_infinity) continue;
    CHECK(std::abs(w1.value - w2.value) < 1e-10 * (1.0 + std::abs(w2.value)));
  }
}

TEST_CASE("composition with conjugating factors") {
  const auto unit_refl = MoebiusMap::reflection(GeneralizedCircle::circle(Complex(0, 0), 1.0));
  // conjugating o conjugating = non-conjugating
  const auto twice = MoebiusMap::compose(unit_refl, unit_refl);
  CHECK_FALSE(twice.conjugating());
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const auto z = random_finite(rng);
    if (std::abs(z.value) < 1e-3) continue;
    CHECK(std::abs(twice.apply(z).value - z.value) < 1e-12 * (1.0 + std::abs(z.value)));
  }
  // associativity on sample points
  const auto m1 = random_moebius(rng);
  const auto m2 = MoebiusMap::reflection(random_circle(rng));
  const auto m3 = random_moebius(rng);
  const auto left = MoebiusMap::compose(MoebiusMap::compose(m1, m2), m3);
  const auto right = MoebiusMap::compose(m1, MoebiusMap::compose(m2, m3));
  for (int i = 0; i < 100; ++i) {
    const auto z = random_finite(rng);
    const auto w1 = left.apply(z);
    const auto w2 = right.apply(z);
    if (w1.at_infinity || w2.at_infinity) continue;
    CHECK(std::abs(w1.value - w2.value) < 1e-10 * (1.0 + std::abs(w2.value)));
  }
}

TEST_CASE("degenerate coefficient matrix rejected") {
  CHECK_THROWS_AS(MoebiusMap(1, 2, 2, 4), error);
}

TEST_CASE("circles map to circles: refit residual") {
  Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_moebius(rng);
    const auto d = DiskRegion::disk(Complex(rng.uniform(-2, 2), rng.uniform(-2, 2)),
                                    rng.log_uniform(0.1, 2.0));
    const auto image = m.map_disk(d);
    // push 8 boundary samples through the map and refit
    std::vector<ExtendedPoint> pts;
    for (int i = 0; i < 8; ++i) {
      pts.push_back(m.apply(d.boundary().boundary_point(2.0 * kPi * i / 8 + 0.37)));
    }
    double residual = 0.0;
    const auto refit = fit_circle(pts, &residual);
    CHECK(residual < 1e-9);
    // refit and the algebraic image describe the same circle: every refit
    // boundary point lies on the image circle
    for (int i = 0; i < 16; ++i) {
      const auto p = refit.boundary_point(2.0 * kPi * i / 16);
      CHECK(std::abs(image.boundary().eval_sign(p)) < 1e-8);
    }
  }
}

TEST_CASE("map_disk tracks the correct side") {
  Rng rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_moebius(rng);
    const auto d = DiskRegion::disk(Complex(rng.uniform(-2, 2), rng.uniform(-2, 2)),
                                    rng.log_uniform(0.1, 2.0));
    const auto image = m.map_disk(d);
    for (int i = 0; i < 16; ++i) {
      const Complex z = d.boundary().center() +
                        rng.u01() * 0.95 * d.boundary().radius() * rng.unit_circle_point();
      CHECK(image.contains_closure(m.apply(ExtendedPoint(z)), 1e-7));
    }
  }
}

TEST_CASE("cross ratio pinned values and invariance") {
  const auto inf = ExtendedPoint::infinity();
  CHECK(cross_ratio(ExtendedPoint(0.0, 0.0), ExtendedPoint(1.0, 0.0), ExtendedPoint(2.0, 0.0), inf) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(cross_ratio(ExtendedPoint(0.0, 0.0), ExtendedPoint(1.0, 0.0), ExtendedPoint(3.0, 0.0), inf) ==
        doctest::Approx(1.5).epsilon(1e-14));
  CHECK_THROWS_AS(cross_ratio(ExtendedPoint(0.0, 0.0), ExtendedPoint(0.0, 0.0),
                              ExtendedPoint(1.0, 0.0), ExtendedPoint(2.0, 0.0)),
                  error);

  Rng rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_moebius(rng);
    const auto a = random_finite(rng), b = random_finite(rng), c = random_finite(rng),
               d = random_finite(rng);
    const double before = cross_ratio(a, b, c, d);
    const double after = cross_ratio(m.apply(a), m.apply(b), m.apply(c), m.apply(d));
    CHECK(after == doctest::Approx(before).epsilon(1e-10));
  }
}

TEST_CASE("circle through three points and spherical caps") {
  const auto g = GeneralizedCircle::through(ExtendedPoint(1.0, 0.0), ExtendedPoint(0.0, 1.0),
                                            ExtendedPoint(-1.0, 0.0));
  REQUIRE(g.kind() == GeneralizedCircle::Kind::circle);
  CHECK(std::abs(g.center()) < 1e-12);
  CHECK(g.radius() == doctest::Approx(1.0).epsilon(1e-12));

  // collinear points give a line
  const auto l = GeneralizedCircle::through(ExtendedPoint(0.0, 0.0), ExtendedPoint(1.0, 1.0),
                                            ExtendedPoint(2.0, 2.0));
  CHECK(l.kind() == GeneralizedCircle::Kind::line);

  // three points with one at infinity give the line through the other two
  const auto l2 = GeneralizedCircle::through(ExtendedPoint(0.0, 0.0), ExtendedPoint(1.0, 0.0),
                                             ExtendedPoint::infinity());
  CHECK(l2.kind() == GeneralizedCircle::Kind::line);

  // cap round trip
  Rng rng(59);
  for (int i = 0; i < 200; ++i) {
    const auto d = DiskRegion::disk(Complex(rng.uniform(-2, 2), rng.uniform(-2, 2)),
                                    rng.log_uniform(0.05, 3.0));
    Vec3 cc;
    double cr;
    d.spherical_cap(&cc, &cr);
    const auto back = GeneralizedCircle::from_spherical_cap(cc, cr);
    CHECK(std::abs(back.center() - d.boundary().center()) < 1e-9);
    CHECK(back.radius() == doctest::Approx(d.boundary().radius()).epsilon(1e-9));
  }
}

TEST_CASE("disk region membership and boundary consistency") {
  const auto d = DiskRegion::disk(Complex(0.5, 0.5), 1.25);
  for (int i = 0; i < 100; ++i) {
    const auto p = d.boundary().boundary_point(2.0 * kPi * i / 100);
    CHECK(std::abs(d.boundary().signed_chart_dist(p)) < 1e-10);
    const Complex in = Complex(0.5, 0.5) + 0.999 * (p.value - Complex(0.5, 0.5));
    const Complex out = Complex(0.5, 0.5) + 1.001 * (p.value - Complex(0.5, 0.5));
    CHECK(d.contains(ExtendedPoint(in)));
    CHECK_FALSE(d.contains(ExtendedPoint(out)));
  }
  // complement region contains infinity
  const auto dc = DiskRegion::disk_complement(Complex(0, 0), 1.0);
  CHECK(dc.contains(ExtendedPoint::infinity()));
  CHECK_FALSE(dc.contains(ExtendedPoint(0.0, 0.0)));
}

TEST_CASE("triple-to-triple normalization") {
  const auto m = MoebiusMap::to_zero_one_inf(ExtendedPoint(2.0, 0.0), ExtendedPoint(0.0, 3.0),
                                             ExtendedPoint(-1.0, 0.0));
  CHECK(std::abs(m.apply(ExtendedPoint(2.0, 0.0)).value) < 1e-12);
  CHECK(std::abs(m.apply(ExtendedPoint(0.0, 3.0)).value - Complex(1, 0)) < 1e-12);
  CHECK(m.apply(ExtendedPoint(-1.0, 0.0)).at_infinity);

  const auto t = MoebiusMap::triple_to_triple(
      ExtendedPoint(0.0, 0.0), ExtendedPoint(1.0, 0.0), ExtendedPoint::infinity(),
      ExtendedPoint(0.0, 0.0), ExtendedPoint(1.0, 0.0), ExtendedPoint::infinity());
  Rng rng(61);
  for (int i = 0; i < 50; ++i) {
    const auto z = random_finite(rng);
    CHECK(std::abs(t.apply(z).value - z.value) < 1e-12 * (1.0 + std::abs(z.value)));
  }
}
