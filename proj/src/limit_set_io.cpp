#include <algorithm>
#include <cstdio>
#include <ostream>

#include "qfs/limit_set.hpp"

namespace qfs {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_csv(std::ostream& os, const LimitSetCloud& cloud) {
  os << "re,im,word_length\n";
  for (std::size_t i = 0; i < cloud.size(); ++i)
    os << fmt(cloud.points[i].real()) << ',' << fmt(cloud.points[i].imag()) << ',' << cloud.word_length[i] << '\n';
}

void write_svg(std::ostream& os, const LimitSetCloud& cloud) {
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  if (!cloud.points.empty()) {
    x0 = x1 = cloud.points[0].real();
    y0 = y1 = cloud.points[0].imag();
  }
  for (const auto& p : cloud.points) {
    x0 = std::min(x0, p.real());
    x1 = std::max(x1, p.real());
    y0 = std::min(y0, p.imag());
    y1 = std::max(y1, p.imag());
  }
  // A flat cloud (a Fuchsian limit set on the real line) still gets a
  // visible strip.
  double w = x1 - x0, h = y1 - y0;
  if (w <= 0 && h <= 0) w = h = 1;
  if (w <= 0) w = 0.1 * h;
  if (h <= 0) h = 0.1 * w;
  x0 -= 0.05 * w;
  y0 -= 0.05 * h;
  w *= 1.1;
  h *= 1.1;

  const double width = 1000.0;
  const double height = width * h / w;
  const double scale = width / w;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
  for (const auto& p : cloud.points) {
    const double cx = (p.real() - x0) * scale;
    const double cy = height - (p.imag() - y0) * scale;
    os << "<circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"0.5\"/>\n";
  }
  os << "</svg>\n";
}

}  // namespace qfs
