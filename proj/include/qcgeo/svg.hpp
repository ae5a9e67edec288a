#pragma once

#include <string>
#include <vector>

#include "qcgeo/sphere.hpp"

namespace qcgeo {

// Minimal SVG writer with a fixed viewbox mapping of the chart rectangle.
class SvgCanvas {
 public:
  SvgCanvas(double x0, double x1, double y0, double y1, int pixels = 1000);

  void circle(Complex center, double radius, const std::string& stroke, double stroke_width,
              const std::string& fill = "none");
  void polyline(const std::vector<Complex>& pts, const std::string& stroke, double stroke_width,
                bool closed = false);
  void dot(Complex z, double radius_px, const std::string& fill);
  void save(const std::string& path) const;

 private:
  double px(double x) const { return (x - x0_) * scale_; }
  double py(double y) const { return (y1_ - y) * scale_; }  // svg y grows downward

  double x0_, x1_, y0_, y1_, scale_;
  int pixels_;
  std::string body_;
};

}  // namespace qcgeo
