#pragma once

#include <string>
#include <vector>

#include "geoforge/core.hpp"

namespace geoforge {

enum class FractalKind { triangle, carpet };

inline constexpr int kMaxTriangleDepth = 12;
inline constexpr int kMaxCarpetDepth = 7;

struct FractalOutput {
  int depth = 0;
  std::vector<Polygon> cells;
  FractalKind kind = FractalKind::triangle;
};

// Keeps the three corner triangles of the midpoint subdivision at each
// level. Cells are listed depth-first in corner order (the seed's vertex
// order, which the Polygon constructor has made CCW). Throws for a
// non-triangle seed or depth outside [0, 12].
FractalOutput sierpinski_triangle(const Polygon& seed, int depth);

// Keeps the eight outer cells of a 3x3 grid at each level, depth-first in
// row-major order from the top-left (north-west) cell. Cells are CCW
// rectangles starting at their lower-left corner. Throws for depth outside
// [0, 7].
FractalOutput sierpinski_carpet(const BBox& seed, int depth);

double total_area(const FractalOutput& fractal);

// {"kind":"triangle"|"carpet","depth":d,"cells":[[[x,y],...],...]}
std::string to_json(const FractalOutput& fractal);

}  // namespace geoforge
