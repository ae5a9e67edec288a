#pragma once

#include <cstdint>
#include <vector>

#include "qcgeo/circle.hpp"
#include "qcgeo/moebius.hpp"

namespace qcgeo {

// A reduced word in the free product of the generating reflections: no two
// consecutive equal letters; the empty word is the identity.
struct ReflectionWord {
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }
};

// Reflection group generated by finitely many closed disks with pairwise
// disjoint closures.
class SchottkyConfig {
 public:
  explicit SchottkyConfig(std::vector<DiskRegion> disks);

  int generator_count() const { return static_cast<int>(disks_.size()); }
  const DiskRegion& disk(int i) const { return disks_.at(i); }
  const MoebiusMap& reflection(int i) const { return reflections_.at(i); }
  double min_gap() const { return min_gap_; }
  bool nearly_tangent() const { return nearly_tangent_; }

  SchottkyConfig transformed(const MoebiusMap& m) const;

 private:
  std::vector<DiskRegion> disks_;
  std::vector<MoebiusMap> reflections_;
  double min_gap_ = 0.0;        // min pairwise spherical boundary distance
  bool nearly_tangent_ = false; // gap below 1e-7, accepted but flagged
};

// Cancels adjacent equal letters until none remain.
ReflectionWord reduce_word(const std::vector<int>& letters, int generator_count);

// All reduced words of the given length; count is k(k-1)^(n-1) for n >= 1.
std::vector<ReflectionWord> enumerate_words(int generator_count, int length);

// phi_{i1} o ... o phi_{in} (z); the rightmost letter acts first.
ExtendedPoint apply_word(const SchottkyConfig& cfg, const ReflectionWord& w, const ExtendedPoint& z);

MoebiusMap word_map(const SchottkyConfig& cfg, const ReflectionWord& w);

struct OrbitDisk {
  ReflectionWord word;   // the acting word w
  int generator = 0;     // j != last letter of w
  DiskRegion disk;       // w(K_j)
  int parent = -1;       // index of the depth-(l(w)-1) disk containing this one
  int depth = 0;         // l(w)
};

// Breadth-first orbit enumeration to the given depth with parents recorded,
// so nesting checks are O(1).
std::vector<OrbitDisk> orbit_disks(const SchottkyConfig& cfg, int depth);

struct LimitSetResult {
  ExtendedPoint p1, p2;
  double diameter_bound = 0.0;  // spherical diameter of the deepest disks
  int depth_used = 0;
};

// The two nested-chain limit points of a two-generator configuration, found
// by following the alternating word chains until the child disk's spherical
// diameter drops below tol.
LimitSetResult limit_set_two(const SchottkyConfig& cfg, double tol = 1e-9, int depth_cap = 200);

double spherical_diameter(const DiskRegion& d);

}  // namespace qcgeo
