#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "geoforge/core.hpp"

namespace geoforge {

// Fraction of the polygon area cut away by each cap, restricted to (0, 0.5].
class AreaFraction {
 public:
  explicit AreaFraction(double delta);
  double value() const { return delta_; }

 private:
  double delta_;
};

struct FloatingBodyResult {
  double delta = 0.0;
  // Chord midpoints in direction order; a closed polyline.
  std::vector<Point> dupin;
  // The cutting halfplanes that produced each midpoint (retained side).
  std::vector<Halfplane> cuts;
  // Intersection of the polygon with every retained side; empty when the
  // intersection has no area.
  std::optional<Polygon> convex_fb;
  bool is_dupin_convex = false;
};

inline constexpr std::size_t kDefaultDirections = 720;

// Area of poly on the far side of h, i.e. poly intersected with the
// complement of h.
double cap_area(const Polygon& poly, const Halfplane& h);

// Halfplane with outward normal (cos phi, sin phi) whose cap has area
// delta * area(poly). The offset is bisected between the support values of
// the polygon.
Halfplane cut_halfplane(const Polygon& poly, double phi, AreaFraction delta);

// Midpoint of the chord where h's boundary line crosses the polygon.
Point chord_midpoint(const Polygon& poly, const Halfplane& h);

FloatingBodyResult dupin_floating_body(const Polygon& poly, AreaFraction delta,
                                       std::size_t directions = kDefaultDirections);

// {"delta":d,"dupin":[[x,y],...],"convex_fb":[[x,y],...]|null,"is_dupin_convex":b}
std::string to_json(const FloatingBodyResult& result);

}  // namespace geoforge
