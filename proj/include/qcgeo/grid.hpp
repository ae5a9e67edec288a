#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qcgeo/annulus.hpp"
#include "qcgeo/circle.hpp"
#include "qcgeo/continuum.hpp"

namespace qcgeo {

// Uniform chart grid; spherical grids weight cells by the spherical area
// density in the stereographic chart.
struct GridSpec {
  double x0 = -2.0, x1 = 2.0, y0 = -2.0, y1 = 2.0;
  int nx = 128, ny = 128;
  Metric metric = Metric::euclidean;

  double hx() const { return (x1 - x0) / nx; }
  double hy() const { return (y1 - y0) / ny; }
};

class Grid {
 public:
  explicit Grid(const GridSpec& spec);

  const GridSpec& spec() const { return spec_; }
  int nx() const { return spec_.nx; }
  int ny() const { return spec_.ny; }
  int cell_count() const { return spec_.nx * spec_.ny; }
  int index(int ix, int iy) const { return iy * spec_.nx + ix; }
  Complex center(int ix, int iy) const {
    return {spec_.x0 + (ix + 0.5) * spec_.hx(), spec_.y0 + (iy + 0.5) * spec_.hy()};
  }
  Complex center(int c) const { return center(c % spec_.nx, c / spec_.nx); }
  double area(int c) const { return area_[c]; }
  double length_density(int c) const { return density_[c]; }
  double total_area() const { return total_area_; }

 private:
  GridSpec spec_;
  std::vector<double> area_;
  std::vector<double> density_;
  double total_area_ = 0.0;
};

// Curve family specification: curves from E to F inside the domain mask,
// with optional crossable obstacle components.
struct FamilySpec {
  SphereSet e{DiskRegion::disk(Complex(0, 0), 1.0)};
  SphereSet f{DiskRegion::disk_complement(Complex(0, 0), 2.0)};
  std::function<bool(Complex)> domain;  // chart-point mask; empty = whole chart
  std::vector<SphereSet> obstacles;
};

// Family of curves connecting the two boundary circles of an annulus through
// its interior.
FamilySpec annulus_family(const Annulus& a);

// Chart-space helpers shared by the solver and its oracles.
bool set_contains_point(const SphereSet& s, Complex z);
double set_chart_box_dist(const SphereSet& s, double x0, double x1, double y0, double y1);
double dist_to_set(const SphereSet& s, Complex z, Metric metric);

// A Moebius image of a family: sets are pushed forward, the domain mask is
// pulled back through the inverse.
FamilySpec map_family(const FamilySpec& fam, const class MoebiusMap& m);

}  // namespace qcgeo
