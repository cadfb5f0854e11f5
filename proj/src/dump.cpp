#include "geoforge/dump.hpp"

#include <cmath>
#include <cstdio>

namespace geoforge::dump {

std::string number(double v) {
  if (v == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void append_number(std::string& out, double v) { out += number(v); }

void append_point(std::string& out, Point p) {
  out += '[';
  append_number(out, p.x);
  out += ',';
  append_number(out, p.y);
  out += ']';
}

void append_points(std::string& out, std::span<const Point> pts) {
  out += '[';
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ',';
    append_point(out, pts[i]);
  }
  out += ']';
}

void append_bbox(std::string& out, const BBox& box) {
  out += '[';
  append_number(out, box.xmin);
  out += ',';
  append_number(out, box.ymin);
  out += ',';
  append_number(out, box.xmax);
  out += ',';
  append_number(out, box.ymax);
  out += ']';
}

}  // namespace geoforge::dump
