#pragma once

// Random instance generators for tests. Deliberately independent of the
// library's algorithms beyond the core primitive types.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "geoforge/core.hpp"

namespace fixtures {

using geoforge::Point;

inline double uniform(std::mt19937_64& rng, double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::vector<Point> random_points(std::mt19937_64& rng, std::size_t n,
                                        double lo = 0.0, double hi = 1.0) {
  std::vector<Point> pts(n);
  for (auto& p : pts) p = {uniform(rng, lo, hi), uniform(rng, lo, hi)};
  return pts;
}

// Points on a jittered circle, sorted by angle: always a convex polygon.
inline std::vector<Point> random_convex_ring(std::mt19937_64& rng, std::size_t n) {
  std::vector<double> angles(n);
  for (auto& a : angles) a = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  std::sort(angles.begin(), angles.end());
  const double rx = uniform(rng, 0.5, 2.0);
  const double ry = uniform(rng, 0.5, 2.0);
  const double cx = uniform(rng, -1.0, 1.0);
  const double cy = uniform(rng, -1.0, 1.0);
  std::vector<Point> ring;
  for (double a : angles) ring.push_back({cx + rx * std::cos(a), cy + ry * std::sin(a)});
  return ring;
}

inline bool proper_cross(Point a, Point b, Point c, Point d) {
  auto side = [](Point p, Point q, Point r) {
    const double v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return (v > 0) - (v < 0);
  };
  return side(a, b, c) * side(a, b, d) < 0 && side(c, d, a) * side(c, d, b) < 0;
}

// Random simple polygon: random points, then 2-opt moves that reverse the
// chain between two crossing edges until no proper crossing remains.
inline std::vector<Point> random_simple_polygon(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    auto pts = random_points(rng, n);
    bool changed = true;
    int rounds = 0;
    while (changed && rounds++ < 10000) {
      changed = false;
      for (std::size_t i = 0; i < n && !changed; ++i) {
        for (std::size_t j = i + 2; j < n && !changed; ++j) {
          if (i == 0 && j == n - 1) continue;
          if (proper_cross(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n])) {
            std::reverse(pts.begin() + static_cast<long>(i) + 1,
                         pts.begin() + static_cast<long>(j) + 1);
            changed = true;
          }
        }
      }
    }
    if (!changed) {
      try {
        geoforge::Polygon poly(pts);
        return poly.vertices();
      } catch (const geoforge::GeometryError&) {
        // touching configuration; draw again
      }
    }
  }
}

// Pairwise disjoint, non-vertical segments with endpoints inside (0,1)^2.
inline std::vector<geoforge::Segment> random_disjoint_segments(std::mt19937_64& rng,
                                                               std::size_t n,
                                                               double max_len = 0.4) {
  std::vector<geoforge::Segment> segs;
  int attempts = 0;
  while (segs.size() < n && attempts++ < 100000) {
    const Point a{uniform(rng, 0.02, 0.98), uniform(rng, 0.02, 0.98)};
    const double ang = uniform(rng, 0.0, std::numbers::pi);
    const double len = uniform(rng, 0.02, max_len);
    const Point b{a.x + len * std::cos(ang), a.y + len * std::sin(ang)};
    if (b.x <= 0.02 || b.x >= 0.98 || b.y <= 0.02 || b.y >= 0.98) continue;
    if (std::abs(b.x - a.x) < 1e-3) continue;
    bool ok = true;
    for (const auto& s : segs) {
      if (geoforge::segments_intersect(a, b, s.a, s.b)) {
        ok = false;
        break;
      }
    }
    if (ok) segs.push_back({a, b});
  }
  return segs;
}

}  // namespace fixtures
