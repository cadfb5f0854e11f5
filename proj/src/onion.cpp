#include "geoforge/onion.hpp"

#include <algorithm>

#include "geoforge/dump.hpp"

namespace geoforge {

namespace {

// Parameter of p along a -> b, used to order points on one hull edge.
double along(Point a, Point b, Point p) { return dot(p - a, b - a); }

bool on_segment(Point p, Point a, Point b) {
  return distance_to_segment(p, a, b) <= kEpsDist;
}

}  // namespace

OnionDecomposition onion_decomposition(std::span<const Point> points) {
  if (points.empty()) throw GeometryError("empty point set");
  for (const Point& p : points) validate_point(p);
  if (auto dup = find_near_duplicate(points)) {
    throw GeometryError("duplicate point (points " + std::to_string(dup->first) + " and " +
                        std::to_string(dup->second) + ")");
  }

  OnionDecomposition onion;
  std::vector<Point> remaining(points.begin(), points.end());
  while (!remaining.empty()) {
    const auto hull = convex_hull(remaining);
    std::vector<Point> layer;
    std::vector<Point> rest;
    if (hull.size() < 3) {
      // Everything left is collinear: one final layer along the line.
      layer = remaining;
      std::sort(layer.begin(), layer.end(), lex_less);
    } else {
      // Bucket boundary points by the first hull edge they lie on.
      std::vector<std::vector<Point>> by_edge(hull.size());
      for (const Point& p : remaining) {
        bool on = false;
        for (std::size_t e = 0; e < hull.size(); ++e) {
          const Point a = hull[e];
          const Point b = hull[(e + 1) % hull.size()];
          if (near_equal(p, b)) continue;  // belongs to the next edge
          if (on_segment(p, a, b)) {
            by_edge[e].push_back(p);
            on = true;
            break;
          }
        }
        if (!on) rest.push_back(p);
      }
      for (std::size_t e = 0; e < hull.size(); ++e) {
        const Point a = hull[e];
        const Point b = hull[(e + 1) % hull.size()];
        auto& run = by_edge[e];
        std::sort(run.begin(), run.end(),
                  [&](Point p, Point q) { return along(a, b, p) < along(a, b, q); });
        layer.insert(layer.end(), run.begin(), run.end());
      }
    }
    onion.layers.push_back(std::move(layer));
    remaining = std::move(rest);
  }
  return onion;
}

std::string to_json(const OnionDecomposition& onion) {
  std::string out = "[";
  for (std::size_t i = 0; i < onion.layers.size(); ++i) {
    if (i) out += ',';
    dump::append_points(out, onion.layers[i]);
  }
  out += ']';
  return out;
}

}  // namespace geoforge
