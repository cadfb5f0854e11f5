#include "geoforge/fractals.hpp"

#include "geoforge/dump.hpp"

namespace geoforge {

namespace {

Point midpoint(Point a, Point b) { return 0.5 * (a + b); }

void subdivide_triangle(Point a, Point b, Point c, int depth, std::vector<Polygon>& out) {
  if (depth == 0) {
    out.push_back(Polygon::trusted({a, b, c}));
    return;
  }
  const Point ab = midpoint(a, b);
  const Point bc = midpoint(b, c);
  const Point ca = midpoint(c, a);
  subdivide_triangle(a, ab, ca, depth - 1, out);
  subdivide_triangle(ab, b, bc, depth - 1, out);
  subdivide_triangle(ca, bc, c, depth - 1, out);
}

Polygon rectangle(const BBox& box) {
  return Polygon::trusted(
      {{box.xmin, box.ymin}, {box.xmax, box.ymin}, {box.xmax, box.ymax}, {box.xmin, box.ymax}});
}

void subdivide_carpet(const BBox& box, int depth, std::vector<Polygon>& out) {
  if (depth == 0) {
    out.push_back(rectangle(box));
    return;
  }
  // Grid lines computed from the box edges so adjacent cells share them exactly.
  const double xs[4] = {box.xmin, box.xmin + box.width() / 3.0,
                        box.xmin + 2.0 * box.width() / 3.0, box.xmax};
  const double ys[4] = {box.ymax, box.ymax - box.height() / 3.0,
                        box.ymax - 2.0 * box.height() / 3.0, box.ymin};
  for (int row = 0; row < 3; ++row) {
    for (int col = 0; col < 3; ++col) {
      if (row == 1 && col == 1) continue;
      subdivide_carpet({xs[col], ys[row + 1], xs[col + 1], ys[row]}, depth - 1, out);
    }
  }
}

std::size_t power(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

FractalOutput sierpinski_triangle(const Polygon& seed, int depth) {
  if (seed.size() != 3) throw GeometryError("triangle seed needs exactly 3 vertices");
  if (depth < 0 || depth > kMaxTriangleDepth) {
    throw GeometryError("depth cap exceeded (triangle depth must be in [0, 12])");
  }
  FractalOutput out{depth, {}, FractalKind::triangle};
  out.cells.reserve(power(3, depth));
  subdivide_triangle(seed[0], seed[1], seed[2], depth, out.cells);
  return out;
}

FractalOutput sierpinski_carpet(const BBox& seed, int depth) {
  validate_bbox(seed);
  if (depth < 0 || depth > kMaxCarpetDepth) {
    throw GeometryError("depth cap exceeded (carpet depth must be in [0, 7])");
  }
  FractalOutput out{depth, {}, FractalKind::carpet};
  out.cells.reserve(power(8, depth));
  subdivide_carpet(seed, depth, out.cells);
  return out;
}

double total_area(const FractalOutput& fractal) {
  double sum = 0.0;
  for (const Polygon& cell : fractal.cells) sum += polygon_area(cell);
  return sum;
}

std::string to_json(const FractalOutput& fractal) {
  std::string out = R"({"kind":)";
  out += fractal.kind == FractalKind::triangle ? R"("triangle")" : R"("carpet")";
  out += R"(,"depth":)" + std::to_string(fractal.depth) + R"(,"cells":[)";
  for (std::size_t i = 0; i < fractal.cells.size(); ++i) {
    if (i) out += ',';
    dump::append_points(out, fractal.cells[i].vertices());
  }
  out += "]}";
  return out;
}

}  // namespace geoforge
