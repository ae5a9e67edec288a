#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace qcgeo {

// xoshiro256++ with splitmix64 seeding. Used instead of <random> engines so
// that suite outputs are bit-identical across platforms and standard library
// implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : state_) {
      x += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      word = z ^ (z >> 31);
    }
  }

  // Independent per-trial stream; serial and parallel runs agree.
  static Rng stream(std::uint64_t seed, std::uint64_t trial) {
    return Rng(seed * 0x9e3779b97f4a7c15ULL + trial * 0xd1342543de82ef95ULL + 0x632be59bd9b4e019ULL);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0,1).
  double u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * u01(); }

  double log_uniform(double a, double b) { return std::exp(uniform(std::log(a), std::log(b))); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double normal() {
    // Box-Muller; one value per call keeps the stream layout simple.
    double u = 0.0;
    while (u <= 0.0) u = u01();
    const double v = u01();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
  }

  std::complex<double> unit_circle_point() {
    const double t = uniform(0.0, 2.0 * M_PI);
    return {std::cos(t), std::sin(t)};
  }

  std::complex<double> in_disk(std::complex<double> center, double radius) {
    const double r = radius * std::sqrt(u01());
    return center + r * unit_circle_point();
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t state_[4];
};

}  // namespace qcgeo
