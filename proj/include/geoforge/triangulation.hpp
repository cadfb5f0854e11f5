#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "geoforge/core.hpp"

namespace geoforge {

struct Triangulation {
  Polygon polygon;
  // Index triples into polygon.vertices(), each in CCW order.
  std::vector<std::array<std::size_t, 3>> triangles;
};

// Ear clipping. Each step clips the lowest-index remaining vertex that is
// either a convex ear (CCW and no other remaining vertex in the closed
// triangle) or a straight collinear vertex. Throws "ear clipping stalled"
// if no such vertex exists.
Triangulation triangulate(const Polygon& poly);

double triangle_area(const Triangulation& tri, std::size_t k);

struct SampleRequest {
  std::size_t count;
  std::uint64_t seed;

  // Throws unless count >= 1.
  SampleRequest(std::size_t count, std::uint64_t seed);
};

// Uniform double in [0, 1) from the top 53 bits of one mt19937_64 draw.
double unit_draw(std::uint64_t bits);

// A + u(B - A) + v(C - A), folding (u, v) to (1 - u, 1 - v) when u + v > 1.
Point barycentric_point(Point a, Point b, Point c, double u, double v);

// Area-weighted uniform samples. The generator is std::mt19937_64 seeded
// with req.seed; each sample consumes three draws: triangle, u, v.
std::vector<Point> sample_points(const Triangulation& tri, const SampleRequest& req);

// {"triangles":[[i,j,k],...],"samples":[[x,y],...]}
std::string to_json(const Triangulation& tri, std::span<const Point> samples = {});

}  // namespace geoforge
