#include "qcgeo/schottky_group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

namespace qcgeo {

double spherical_diameter(const DiskRegion& d) {
  Vec3 c;
  double r;
  d.spherical_cap(&c, &r);
  return std::fmin(2.0 * r, kPi);
}

SchottkyConfig::SchottkyConfig(std::vector<DiskRegion> disks) : disks_(std::move(disks)) {
  if (disks_.size() < 2) throw error("Schottky configuration needs at least 2 disks");
  min_gap_ = HUGE_VAL;
  for (std::size_t i = 0; i < disks_.size(); ++i) {
    Vec3 ci;
    double ri;
    disks_[i].spherical_cap(&ci, &ri);
    for (std::size_t j = i + 1; j < disks_.size(); ++j) {
      Vec3 cj;
      double rj;
      disks_[j].spherical_cap(&cj, &rj);
      const double d = std::acos(std::fmin(1.0, std::fmax(-1.0, dot(ci, cj)))) - ri - rj;
      min_gap_ = std::fmin(min_gap_, d);
    }
  }
  if (!(min_gap_ > 0.0)) throw error("Schottky disks must have disjoint closures");
  nearly_tangent_ = min_gap_ < 1e-7;
  reflections_.reserve(disks_.size());
  for (const auto& d : disks_) reflections_.push_back(MoebiusMap::reflection(d.boundary()));
}

SchottkyConfig SchottkyConfig::transformed(const MoebiusMap& m) const {
  std::vector<DiskRegion> mapped;
  mapped.reserve(disks_.size());
  for (const auto& d : disks_) mapped.push_back(m.map_disk(d));
  return SchottkyConfig(std::move(mapped));
}

ReflectionWord reduce_word(const std::vector<int>& letters, int generator_count) {
  ReflectionWord w;
  for (int l : letters) {
    if (l < 0 || l >= generator_count) throw error("word letter outside generator index set");
    if (!w.letters.empty() && w.letters.back() == l) {
      w.letters.pop_back();  // reflections are involutions
    } else {
      w.letters.push_back(l);
    }
  }
  return w;
}

std::vector<ReflectionWord> enumerate_words(int generator_count, int length) {
  if (generator_count < 2) throw error("need at least 2 generators");
  if (length < 0) throw error("word length must be nonnegative");
  std::vector<ReflectionWord> level{ReflectionWord{}};
  for (int n = 0; n < length; ++n) {
    std::vector<ReflectionWord> next;
    next.reserve(level.size() * (generator_count - 1));
    for (const auto& w : level) {
      for (int g = 0; g < generator_count; ++g) {
        if (!w.letters.empty() && w.letters.back() == g) continue;
        ReflectionWord e = w;
        e.letters.push_back(g);
        next.push_back(std::move(e));
      }
    }
    level = std::move(next);
  }
  return level;
}

ExtendedPoint apply_word(const SchottkyConfig& cfg, const ReflectionWord& w, const ExtendedPoint& z) {
  ExtendedPoint p = z;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    p = cfg.disk(*it).boundary().reflect(p);
  }
  return p;
}

MoebiusMap word_map(const SchottkyConfig& cfg, const ReflectionWord& w) {
  MoebiusMap m = MoebiusMap::identity();
  for (int letter : w.letters) m = MoebiusMap::compose(m, cfg.reflection(letter));
  return m;
}

std::vector<OrbitDisk> orbit_disks(const SchottkyConfig& cfg, int depth) {
  if (depth < 0) throw error("orbit depth must be nonnegative");
  const int k = cfg.generator_count();
  std::vector<OrbitDisk> out;
  // depth 0: identity word, the original disks
  for (int j = 0; j < k; ++j) {
    out.push_back(OrbitDisk{ReflectionWord{}, j, cfg.disk(j), -1, 0});
  }
  // Deeper levels by prepending a generator: the disk of (i.w, K_l) is the
  // single reflection phi_i applied to the disk of (w, K_l), which stays
  // numerically stable along deeply nested chains.
  auto key_of = [](const std::vector<int>& word, int generator) {
    std::uint64_t h = 1469598103934665603ULL;
    for (int letter : word) {
      h ^= static_cast<std::uint64_t>(letter) + 0x9e3779b97f4a7c15ULL;
      h *= 1099511628211ULL;
    }
    h ^= static_cast<std::uint64_t>(generator) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
    return h;
  };
  std::size_t level_begin = 0, level_end = out.size();
  for (int n = 1; n <= depth; ++n) {
    // previous level lookup for parent resolution: the parent of (w, K_l) is
    // the entry (w minus its last letter, K_{last letter of w})
    std::unordered_map<std::uint64_t, int> prev;
    for (std::size_t pi = level_begin; pi < level_end; ++pi) {
      prev.emplace(key_of(out[pi].word.letters, out[pi].generator), static_cast<int>(pi));
    }
    const std::size_t next_begin = out.size();
    for (std::size_t pi = level_begin; pi < level_end; ++pi) {
      const int first = out[pi].word.empty() ? out[pi].generator : out[pi].word.letters.front();
      for (int i = 0; i < k; ++i) {
        if (i == first) continue;
        OrbitDisk child{ReflectionWord{}, out[pi].generator,
                        reflect_disk(cfg.disk(i).boundary(), out[pi].disk), -1, n};
        child.word.letters.reserve(out[pi].word.letters.size() + 1);
        child.word.letters.push_back(i);
        child.word.letters.insert(child.word.letters.end(), out[pi].word.letters.begin(),
                                  out[pi].word.letters.end());
        std::vector<int> prefix(child.word.letters.begin(), child.word.letters.end() - 1);
        const auto it = prev.find(key_of(prefix, child.word.letters.back()));
        child.parent = it != prev.end() ? it->second : -1;
        out.push_back(std::move(child));
      }
    }
    level_begin = next_begin;
    level_end = out.size();
  }
  return out;
}

LimitSetResult limit_set_two(const SchottkyConfig& cfg, double tol, int depth_cap) {
  if (cfg.generator_count() != 2) throw error("limit_set_two requires exactly two disks");
  LimitSetResult res;
  // Mutual recursion between the two alternating chains:
  //   C[s] at level n+1 = reflection in K_s of C[1-s] at level n,
  // starting from C[s] = K_{1-s}. One stable closed-form reflection per
  // level; the chain inside K_s is K_s, C[s]_1, C[s]_2, ...
  DiskRegion chain[2] = {cfg.disk(0), cfg.disk(1)};
  double diam[2] = {spherical_diameter(cfg.disk(0)), spherical_diameter(cfg.disk(1))};
  bool done[2] = {diam[0] <= tol, diam[1] <= tol};
  int n = 0;
  while ((!done[0] || !done[1]) && n < depth_cap) {
    const DiskRegion next0 = reflect_disk(cfg.disk(0).boundary(), chain[1]);
    const DiskRegion next1 = reflect_disk(cfg.disk(1).boundary(), chain[0]);
    chain[0] = next0;
    chain[1] = next1;
    ++n;
    for (int s = 0; s < 2; ++s) {
      const double child_diam = spherical_diameter(chain[s]);
      if (!(child_diam < diam[s] + 1e-15)) {
        throw error("nested chain diameters failed to decrease; inconsistent geometry");
      }
      diam[s] = child_diam;
      if (child_diam <= tol) done[s] = true;
    }
  }
  if (!done[0] || !done[1]) {
    throw error("limit set iteration hit the depth cap before reaching tol");
  }
  ExtendedPoint pts[2];
  for (int s = 0; s < 2; ++s) {
    Vec3 c;
    double r;
    chain[s].spherical_cap(&c, &r);
    pts[s] = unlift(c);
  }
  res.p1 = pts[0];
  res.p2 = pts[1];
  res.diameter_bound = std::fmax(diam[0], diam[1]);
  res.depth_used = n;
  return res;
}

}  // namespace qcgeo
