#include "qcgeo/svg.hpp"

#include <cstdio>
#include <fstream>

namespace qcgeo {

SvgCanvas::SvgCanvas(double x0, double x1, double y0, double y1, int pixels)
    : x0_(x0), x1_(x1), y0_(y0), y1_(y1), pixels_(pixels) {
  if (!(x1 > x0 && y1 > y0)) throw error("svg: empty chart rectangle");
  scale_ = pixels / std::fmax(x1 - x0, y1 - y0);
}

void SvgCanvas::circle(Complex center, double radius, const std::string& stroke,
                       double stroke_width, const std::string& fill) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "<circle cx=\"%.4f\" cy=\"%.4f\" r=\"%.4f\" stroke=\"%s\" stroke-width=\"%.2f\" "
                "fill=\"%s\"/>\n",
                px(center.real()), py(center.imag()), radius * scale_, stroke.c_str(), stroke_width,
                fill.c_str());
  body_ += buf;
}

void SvgCanvas::polyline(const std::vector<Complex>& pts, const std::string& stroke,
                         double stroke_width, bool closed) {
  if (pts.empty()) return;
  body_ += closed ? "<polygon points=\"" : "<polyline points=\"";
  char buf[64];
  for (const auto& p : pts) {
    std::snprintf(buf, sizeof buf, "%.4f,%.4f ", px(p.real()), py(p.imag()));
    body_ += buf;
  }
  std::snprintf(buf, sizeof buf, "\" stroke=\"%s\" stroke-width=\"%.2f\" fill=\"none\"/>\n",
                stroke.c_str(), stroke_width);
  body_ += buf;
}

void SvgCanvas::dot(Complex z, double radius_px, const std::string& fill) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "<circle cx=\"%.4f\" cy=\"%.4f\" r=\"%.2f\" fill=\"%s\"/>\n",
                px(z.real()), py(z.imag()), radius_px, fill.c_str());
  body_ += buf;
}

void SvgCanvas::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write '" + path + "'");
  const double w = (x1_ - x0_) * scale_;
  const double h = (y1_ - y0_) * scale_;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  out << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
  out << body_;
  out << "</svg>\n";
}

}  // namespace qcgeo
