#pragma once

#include <span>
#include <string>

#include "geoforge/core.hpp"

// Text helpers shared by the module dump formats: compact JSON, numbers with
// up to 12 significant digits and no trailing zeros.
namespace geoforge::dump {

std::string number(double v);

void append_number(std::string& out, double v);
void append_point(std::string& out, Point p);
void append_points(std::string& out, std::span<const Point> pts);
void append_bbox(std::string& out, const BBox& box);

}  // namespace geoforge::dump
