#include <cmath>

#include "doctest.h"
#include "qcgeo/rng.hpp"
#include "qcgeo/schottky_group.hpp"

using namespace qcgeo;

namespace {

SchottkyConfig two_disk_config() {
  return SchottkyConfig({DiskRegion::disk(Complex(-2, 0), 1.0), DiskRegion::disk(Complex(2, 0), 1.0)});
}

}  // namespace

TEST_CASE("reduce_word cancels adjacent involutions") {
  CHECK(reduce_word({0, 0}, 2).letters.empty());
  CHECK(reduce_word({0, 1, 1, 0}, 2).letters.empty());
  const auto w = reduce_word({0, 1, 0}, 2);
  CHECK(w.letters == std::vector<int>{0, 1, 0});
  CHECK_THROWS_AS(reduce_word({0, 3}, 2), error);
}

TEST_CASE("word counts k(k-1)^(n-1)") {
  for (int k = 2; k <= 5; ++k) {
    double expect = 1;
    for (int n = 0; n <= 8; ++n) {
      const auto words = enumerate_words(k, n);
      CHECK(words.size() == static_cast<std::size_t>(expect));
      for (const auto& w : words) {
        for (std::size_t i = 1; i < w.letters.size(); ++i) CHECK(w.letters[i] != w.letters[i - 1]);
      }
      expect = n == 0 ? k : expect * (k - 1);
    }
  }
  const auto two = enumerate_words(2, 3);
  REQUIRE(two.size() == 2);
  CHECK(two[0].letters == std::vector<int>{0, 1, 0});
  CHECK(two[1].letters == std::vector<int>{1, 0, 1});
}

TEST_CASE("apply_word basics") {
  const auto cfg = two_disk_config();
  const ExtendedPoint z(Complex(0.3, 0.4));
  CHECK(apply_word(cfg, ReflectionWord{}, z).value == z.value);
  // [i,i] reduces to the identity
  CHECK(apply_word(cfg, reduce_word({1, 1}, 2), z).value == z.value);
  // inverse word: reflections are involutions, so the reverse word inverts
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const ExtendedPoint p(Complex(rng.uniform(-4, 4), rng.uniform(-4, 4)));
    const auto w = enumerate_words(2, 5)[t % 2];
    ReflectionWord rev;
    rev.letters.assign(w.letters.rbegin(), w.letters.rend());
    const auto round_trip = apply_word(cfg, rev, apply_word(cfg, w, p));
    CHECK(std::abs(round_trip.value - p.value) < 1e-10 * (1 + std::abs(p.value)));
  }
}

TEST_CASE("orbit disks: counts, nesting, disjointness") {
  const auto cfg = two_disk_config();
  const auto orbit = orbit_disks(cfg, 6);
  // depth 0 disks are the originals
  CHECK(orbit[0].disk.boundary().center() == Complex(-2, 0));
  CHECK(orbit[1].disk.boundary().center() == Complex(2, 0));
  // two disks at each level n >= 1
  int count_by_depth[7] = {0, 0, 0, 0, 0, 0, 0};
  for (const auto& od : orbit) count_by_depth[od.depth]++;
  CHECK(count_by_depth[0] == 2);
  for (int n = 1; n <= 6; ++n) CHECK(count_by_depth[n] == 2);

  for (const auto& od : orbit) {
    if (od.parent < 0) continue;
    const auto& parent = orbit[od.parent].disk;
    // nesting: sample 16 boundary points of the child inside the parent
    const auto& b = od.disk.boundary();
    REQUIRE(b.kind() == GeneralizedCircle::Kind::circle);
    for (int i = 0; i < 16; ++i) {
      CHECK(parent.contains_closure(b.boundary_point(2 * kPi * i / 16), 1e-9));
    }
    // strict diameter decay along chains
    CHECK(spherical_diameter(od.disk) < spherical_diameter(orbit[od.parent].disk));
  }

  // disjoint interiors at fixed depth
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (std::size_t j = i + 1; j < orbit.size(); ++j) {
      if (orbit[i].depth != orbit[j].depth) continue;
      Vec3 ci, cj;
      double ri, rj;
      orbit[i].disk.spherical_cap(&ci, &ri);
      orbit[j].disk.spherical_cap(&cj, &rj);
      const double d = std::acos(std::fmin(1.0, std::fmax(-1.0, dot(ci, cj))));
      CHECK(d >= ri + rj - 1e-9);
    }
  }
}

TEST_CASE("two-disk limit set equals +-sqrt(3)") {
  const auto cfg = two_disk_config();
  const auto lim = limit_set_two(cfg, 1e-10);
  CHECK(lim.diameter_bound <= 1e-10);

  // oracle: iterate the composed reflection g = phi_1 o phi_2 from seed 0
  auto g = [](double z) { return (-7.0 * z + 12.0) / (4.0 * z - 7.0); };
  double z = 0.0;
  for (int i = 0; i < 200; ++i) z = g(z);
  CHECK(std::abs(z) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

  const double lo = std::fmin(lim.p1.value.real(), lim.p2.value.real());
  const double hi = std::fmax(lim.p1.value.real(), lim.p2.value.real());
  CHECK(lo == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-8));
  CHECK(hi == doctest::Approx(std::sqrt(3.0)).epsilon(1e-8));
  CHECK(std::abs(lim.p1.value.imag()) < 1e-8);
  CHECK(std::abs(lim.p2.value.imag()) < 1e-8);
}

TEST_CASE("limit set is Moebius-equivariant") {
  const auto cfg = two_disk_config();
  const auto lim = limit_set_two(cfg, 1e-10);
  Rng rng(77);
  for (int t = 0; t < 5; ++t) {
    MoebiusMap m = MoebiusMap::random_rotation(rng);
    const auto mapped_cfg = cfg.transformed(m);
    const auto mlim = limit_set_two(mapped_cfg, 1e-10);
    const auto q1 = m.apply(lim.p1), q2 = m.apply(lim.p2);
    const double d11 = chordal_dist(mlim.p1, q1) + chordal_dist(mlim.p2, q2);
    const double d12 = chordal_dist(mlim.p1, q2) + chordal_dist(mlim.p2, q1);
    CHECK(std::fmin(d11, d12) < 1e-8);
  }
}

TEST_CASE("symmetric configuration has symmetric limit points") {
  const auto cfg = two_disk_config();  // symmetric under z -> -z
  const auto lim = limit_set_two(cfg, 1e-10);
  CHECK(std::abs(lim.p1.value + lim.p2.value) < 1e-10);
}

TEST_CASE("word application is equivariant under conjugation") {
  const auto cfg = two_disk_config();
  Rng rng(13);
  for (int t = 0; t < 20; ++t) {
    const MoebiusMap m = MoebiusMap::random_rotation(rng);
    const auto mapped = cfg.transformed(m);
    const ExtendedPoint z(Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)));
    for (const auto& w : enumerate_words(2, 4)) {
      const auto lhs = apply_word(mapped, w, m.apply(z));
      const auto rhs = m.apply(apply_word(cfg, w, z));
      CHECK(chordal_dist(lhs, rhs) < 1e-9);
    }
  }
}

TEST_CASE("construction rejects bad configurations") {
  CHECK_THROWS_AS(SchottkyConfig({DiskRegion::disk(Complex(0, 0), 1.0)}), error);
  CHECK_THROWS_AS(SchottkyConfig({DiskRegion::disk(Complex(0, 0), 1.0),
                                  DiskRegion::disk(Complex(1, 0), 1.0)}),
                  error);
  // nearly tangent accepted but flagged
  const SchottkyConfig close({DiskRegion::disk(Complex(-1, 0), 1.0 - 2.5e-9),
                              DiskRegion::disk(Complex(1, 0), 1.0 - 2.5e-9)});
  CHECK(close.nearly_tangent());
}
