#pragma once

#include <span>
#include <string>
#include <vector>

#include "geoforge/core.hpp"

namespace geoforge {

// Convex layers, outermost first. Each layer lists every point on the hull
// boundary of the points remaining at that stage (vertices and collinear
// boundary points) in CCW order from its lexicographically smallest point.
// Layers of one or two points, or of collinear points, are degenerate.
struct OnionDecomposition {
  std::vector<std::vector<Point>> layers;
};

// Throws on empty input or near-duplicate points.
OnionDecomposition onion_decomposition(std::span<const Point> points);

// [[[x,y],...],...]
std::string to_json(const OnionDecomposition& onion);

}  // namespace geoforge
