#include "qcgeo/profile.hpp"

#include <algorithm>

namespace qcgeo {

double EmpiricalProfile::eval(double arg) const {
  if (x.empty()) throw error("empty profile");
  if (arg <= x.front()) return y.front();
  if (arg >= x.back()) return y.back();
  const auto it = std::upper_bound(x.begin(), x.end(), arg);
  const std::size_t i = static_cast<std::size_t>(it - x.begin());
  const double t = (arg - x[i - 1]) / (x[i] - x[i - 1]);
  return y[i - 1] + t * (y[i] - y[i - 1]);
}

bool EmpiricalProfile::monotone() const {
  for (std::size_t i = 1; i < y.size(); ++i) {
    if (increasing ? y[i] < y[i - 1] - 1e-12 : y[i] > y[i - 1] + 1e-12) return false;
  }
  return true;
}

EmpiricalProfile fit_profile(std::vector<std::pair<double, double>> points, bool increasing) {
  if (points.empty()) throw error("cannot fit a profile to no points");
  std::sort(points.begin(), points.end());
  const double sign = increasing ? 1.0 : -1.0;
  // pool adjacent violators on sign*y with unit weights
  struct Block {
    double x_last, sum, count;
  };
  std::vector<Block> blocks;
  for (const auto& [px, py] : points) {
    blocks.push_back({px, sign * py, 1.0});
    while (blocks.size() >= 2) {
      auto& b = blocks[blocks.size() - 1];
      auto& a = blocks[blocks.size() - 2];
      if (a.sum / a.count <= b.sum / b.count) break;
      a.sum += b.sum;
      a.count += b.count;
      a.x_last = b.x_last;
      blocks.pop_back();
    }
  }
  EmpiricalProfile p;
  p.increasing = increasing;
  for (const auto& b : blocks) {
    p.x.push_back(b.x_last);
    p.y.push_back(sign * b.sum / b.count);
  }
  return p;
}

}  // namespace qcgeo
