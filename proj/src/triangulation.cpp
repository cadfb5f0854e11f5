#include "geoforge/triangulation.hpp"

#include <algorithm>
#include <random>

#include "geoforge/dump.hpp"

namespace geoforge {

namespace {

bool in_closed_triangle(Point p, Point a, Point b, Point c) {
  return cross(b - a, p - a) >= 0.0 && cross(c - b, p - b) >= 0.0 &&
         cross(a - c, p - c) >= 0.0;
}

}  // namespace

Triangulation triangulate(const Polygon& poly) {
  const auto& vs = poly.vertices();
  Triangulation tri{poly, {}};
  std::vector<std::size_t> ring(vs.size());
  for (std::size_t i = 0; i < ring.size(); ++i) ring[i] = i;

  while (ring.size() > 3) {
    const std::size_t m = ring.size();
    bool clipped = false;
    for (std::size_t k = 0; k < m && !clipped; ++k) {
      const std::size_t ip = ring[(k + m - 1) % m];
      const std::size_t ic = ring[k];
      const std::size_t in = ring[(k + 1) % m];
      const Point a = vs[ip];
      const Point b = vs[ic];
      const Point c = vs[in];
      const Orientation o = orientation(a, b, c);
      bool ear = false;
      if (o == Orientation::collinear) {
        // A straight-through vertex; clipping it leaves the shape unchanged.
        ear = dot(a - b, c - b) < 0.0;
      } else if (o == Orientation::ccw) {
        ear = std::none_of(ring.begin(), ring.end(), [&](std::size_t j) {
          return j != ip && j != ic && j != in && in_closed_triangle(vs[j], a, b, c);
        });
      }
      if (ear) {
        tri.triangles.push_back({ip, ic, in});
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(k));
        clipped = true;
      }
    }
    if (!clipped) throw GeometryError("ear clipping stalled");
  }
  tri.triangles.push_back({ring[0], ring[1], ring[2]});
  return tri;
}

double triangle_area(const Triangulation& tri, std::size_t k) {
  const auto& vs = tri.polygon.vertices();
  const auto& t = tri.triangles[k];
  return 0.5 * cross(vs[t[1]] - vs[t[0]], vs[t[2]] - vs[t[0]]);
}

SampleRequest::SampleRequest(std::size_t count, std::uint64_t seed) : count(count), seed(seed) {
  if (count < 1) throw GeometryError("sample count must be at least 1");
}

double unit_draw(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

Point barycentric_point(Point a, Point b, Point c, double u, double v) {
  if (u + v > 1.0) {
    u = 1.0 - u;
    v = 1.0 - v;
  }
  return a + u * (b - a) + v * (c - a);
}

std::vector<Point> sample_points(const Triangulation& tri, const SampleRequest& req) {
  const auto& vs = tri.polygon.vertices();
  std::vector<double> cumulative;
  double total = 0.0;
  for (std::size_t k = 0; k < tri.triangles.size(); ++k) {
    total += std::max(0.0, triangle_area(tri, k));
    cumulative.push_back(total);
  }
  if (!(total > 0.0)) throw GeometryError("triangulation has zero area");

  std::mt19937_64 rng(req.seed);
  std::vector<Point> out;
  out.reserve(req.count);
  for (std::size_t s = 0; s < req.count; ++s) {
    const double r = unit_draw(rng()) * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
    const std::size_t k =
        std::min(static_cast<std::size_t>(it - cumulative.begin()), cumulative.size() - 1);
    const double u = unit_draw(rng());
    const double v = unit_draw(rng());
    const auto& t = tri.triangles[k];
    out.push_back(barycentric_point(vs[t[0]], vs[t[1]], vs[t[2]], u, v));
  }
  return out;
}

std::string to_json(const Triangulation& tri, std::span<const Point> samples) {
  std::string out = R"({"triangles":[)";
  for (std::size_t k = 0; k < tri.triangles.size(); ++k) {
    if (k) out += ',';
    const auto& t = tri.triangles[k];
    out += '[' + std::to_string(t[0]) + ',' + std::to_string(t[1]) + ',' +
           std::to_string(t[2]) + ']';
  }
  out += R"(],"samples":)";
  dump::append_points(out, samples);
  out += '}';
  return out;
}

}  // namespace geoforge
