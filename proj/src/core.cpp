#include "geoforge/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace geoforge {

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

bool near_equal(Point a, Point b) {
  return std::abs(a.x - b.x) <= kEpsDist && std::abs(a.y - b.y) <= kEpsDist;
}

void validate_point(Point p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
    throw GeometryError("non-finite coordinate");
  }
  if (std::abs(p.x) > kMaxCoordinate || std::abs(p.y) > kMaxCoordinate) {
    throw GeometryError("coordinate outside domain [-1e6, 1e6]");
  }
}

void validate_segment(const Segment& s) {
  validate_point(s.a);
  validate_point(s.b);
  if (near_equal(s.a, s.b)) throw GeometryError("degenerate segment");
}

double distance_to_segment(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

void validate_bbox(const BBox& box) {
  validate_point({box.xmin, box.ymin});
  validate_point({box.xmax, box.ymax});
  if (!(box.xmin < box.xmax) || !(box.ymin < box.ymax)) {
    throw GeometryError("bbox requires xmin < xmax and ymin < ymax");
  }
}

BBox bounding_box(std::span<const Point> points) {
  if (points.empty()) throw GeometryError("empty point set");
  BBox box{points[0].x, points[0].y, points[0].x, points[0].y};
  for (const Point& p : points) {
    box.xmin = std::min(box.xmin, p.x);
    box.ymin = std::min(box.ymin, p.y);
    box.xmax = std::max(box.xmax, p.x);
    box.ymax = std::max(box.ymax, p.y);
  }
  return box;
}

Halfplane Halfplane::from_normal(Point normal, double offset) {
  const double len = std::hypot(normal.x, normal.y);
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw GeometryError("halfplane normal must be nonzero");
  }
  return {normal.x / len, normal.y / len, offset / len};
}

Orientation orientation(Point p, Point q, Point r) {
  const double det = cross(q - p, r - p);
  if (std::abs(det) <= kEpsArea) return Orientation::collinear;
  return det > 0.0 ? Orientation::ccw : Orientation::cw;
}

double signed_area2(std::span<const Point> ring) {
  double sum = 0.0;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    sum += cross(ring[i], ring[(i + 1) % n]);
  }
  return sum;
}

double polygon_area(const Polygon& poly) {
  return 0.5 * std::abs(signed_area2(poly.vertices()));
}

namespace {

// Sign of the raw determinant; exact zero is the only collinear case.
int raw_sign(Point p, Point q, Point r) {
  const double det = cross(q - p, r - p);
  return (det > 0.0) - (det < 0.0);
}

bool within_box(Point a, Point b, Point p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(Point a, Point b, Point c, Point d) {
  const int d1 = raw_sign(c, d, a);
  const int d2 = raw_sign(c, d, b);
  const int d3 = raw_sign(a, b, c);
  const int d4 = raw_sign(a, b, d);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && within_box(c, d, a)) return true;
  if (d2 == 0 && within_box(c, d, b)) return true;
  if (d3 == 0 && within_box(a, b, c)) return true;
  if (d4 == 0 && within_box(a, b, d)) return true;
  return false;
}

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw GeometryError("polygon needs at least 3 vertices");
  for (const Point& p : vertices_) validate_point(p);
  for (std::size_t i = 0; i < n; ++i) {
    if (near_equal(vertices_[i], vertices_[(i + 1) % n])) {
      throw GeometryError("polygon has repeated consecutive vertices");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    // Edges i and j are adjacent when j == i + 1 or (i == 0, j == n - 1).
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segments_intersect(vertices_[i], vertices_[(i + 1) % n],
                             vertices_[j], vertices_[(j + 1) % n])) {
        throw GeometryError("polygon is not simple");
      }
    }
  }
  const double area2 = signed_area2(vertices_);
  if (std::abs(area2) <= 2.0 * kEpsArea) {
    throw GeometryError("polygon has zero area");
  }
  if (area2 < 0.0) std::reverse(vertices_.begin() + 1, vertices_.end());
}

Polygon Polygon::trusted(std::vector<Point> vertices) {
  Polygon poly;
  poly.vertices_ = std::move(vertices);
  return poly;
}

bool is_convex(std::span<const Point> ring) {
  const std::size_t n = ring.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = ring[i];
    const Point b = ring[(i + 1) % n];
    const Point c = ring[(i + 2) % n];
    if (cross(b - a, c - b) < -kEpsArea) return false;
  }
  return signed_area2(ring) > 0.0;
}

bool is_convex(const Polygon& poly) { return is_convex(poly.vertices()); }

std::vector<Point> convex_hull(std::span<const Point> points) {
  if (points.empty()) throw GeometryError("empty point set");
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;

  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p) != Orientation::ccw) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], pts[i]) != Orientation::ccw) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<Point> clip_convex_ring(std::span<const Point> ring,
                                    const Halfplane& h) {
  std::vector<Point> out;
  const std::size_t n = ring.size();
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Point cur = ring[i];
    const Point next = ring[(i + 1) % n];
    const double fc = h.evaluate(cur);
    const double fn = h.evaluate(next);
    if (fc <= 0.0) out.push_back(cur);
    if ((fc < 0.0 && fn > 0.0) || (fc > 0.0 && fn < 0.0)) {
      const double t = fc / (fc - fn);
      out.push_back(cur + t * (next - cur));
    }
  }
  std::vector<Point> ring_out;
  ring_out.reserve(out.size());
  for (const Point& p : out) {
    if (ring_out.empty() || !near_equal(ring_out.back(), p)) ring_out.push_back(p);
  }
  while (ring_out.size() > 1 && near_equal(ring_out.back(), ring_out.front())) {
    ring_out.pop_back();
  }
  if (ring_out.size() < 3 || 0.5 * signed_area2(ring_out) <= kEpsArea) return {};
  return ring_out;
}

std::optional<Polygon> clip_halfplane(const Polygon& poly, const Halfplane& h) {
  if (!is_convex(poly)) throw GeometryError("clip requires convex polygon");
  auto ring = clip_convex_ring(poly.vertices(), h);
  if (ring.empty()) return std::nullopt;
  return Polygon::trusted(std::move(ring));
}

double angle_at(Point v1, Point v3, Point v2) {
  if (near_equal(v1, v3) || near_equal(v2, v3)) {
    throw GeometryError("degenerate angle");
  }
  const Point u = v1 - v3;
  const Point v = v2 - v3;
  return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

Location point_in_polygon(Point p, const Polygon& poly) {
  const auto& vs = poly.vertices();
  const std::size_t n = vs.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point a = vs[j];
    const Point b = vs[i];
    if (distance_to_segment(p, a, b) <= kEpsDist) return Location::boundary;
    if ((b.y > p.y) != (a.y > p.y)) {
      const double x_cross = b.x + (p.y - b.y) * (a.x - b.x) / (a.y - b.y);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside ? Location::inside : Location::outside;
}

std::optional<std::pair<std::size_t, std::size_t>> find_near_duplicate(
    std::span<const Point> points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return points[a].x < points[b].x;
  });
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const Point a = points[order[i]];
      const Point b = points[order[j]];
      if (b.x - a.x > kEpsDist) break;
      if (std::abs(b.y - a.y) <= kEpsDist) {
        return std::pair{std::min(order[i], order[j]), std::max(order[i], order[j])};
      }
    }
  }
  return std::nullopt;
}

std::string to_string(Orientation o) {
  switch (o) {
    case Orientation::ccw: return "CCW";
    case Orientation::cw: return "CW";
    case Orientation::collinear: return "COLLINEAR";
  }
  return "?";
}

std::string to_string(Location loc) {
  switch (loc) {
    case Location::inside: return "INSIDE";
    case Location::boundary: return "BOUNDARY";
    case Location::outside: return "OUTSIDE";
  }
  return "?";
}

}  // namespace geoforge
