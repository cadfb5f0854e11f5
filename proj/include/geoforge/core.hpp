#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace geoforge {

// Tolerances for the documented coordinate domain |x|, |y| <= kMaxCoordinate.
inline constexpr double kEpsArea = 1e-9;
inline constexpr double kEpsDist = 1e-9;
inline constexpr double kMaxCoordinate = 1e6;

// Raised for any violated precondition or malformed geometry.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double distance(Point a, Point b);

// Strict lexicographic order on (x, y).
inline bool lex_less(Point a, Point b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// True when the points coincide within kEpsDist in both coordinates.
bool near_equal(Point a, Point b);

// Throws unless both coordinates are finite and inside the coordinate domain.
void validate_point(Point p);

struct Segment {
  Point a;
  Point b;
};

// Throws "degenerate segment" when the endpoints coincide.
void validate_segment(const Segment& s);

// Euclidean distance from p to the closed segment [a, b].
double distance_to_segment(Point p, Point a, Point b);

struct BBox {
  double xmin = 0.0;
  double ymin = 0.0;
  double xmax = 1.0;
  double ymax = 1.0;

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  double area() const { return width() * height(); }
  Point center() const { return {0.5 * (xmin + xmax), 0.5 * (ymin + ymax)}; }
  bool contains(Point p) const {
    return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
  }

  friend bool operator==(const BBox&, const BBox&) = default;
};

// Throws unless xmin < xmax and ymin < ymax with finite coordinates.
void validate_bbox(const BBox& box);

// Tight axis-aligned box; the result may be degenerate for < 2 distinct points.
BBox bounding_box(std::span<const Point> points);

// {p : normal . p <= offset}, with a unit normal.
struct Halfplane {
  double nx = 1.0;
  double ny = 0.0;
  double offset = 0.0;

  // Normalizes the direction; throws on a zero normal.
  static Halfplane from_normal(Point normal, double offset);

  double evaluate(Point p) const { return nx * p.x + ny * p.y - offset; }
  bool contains(Point p) const { return evaluate(p) <= 0.0; }
  Halfplane complement() const { return {-nx, -ny, -offset}; }
};

// A simple polygon stored counterclockwise. Construction validates and
// normalizes orientation (keeping the first vertex in place).
class Polygon {
 public:
  explicit Polygon(std::vector<Point> vertices);

  // Skips validation; for algorithm outputs that preserve simplicity and CCW
  // orientation by construction (convex clips, fractal cells).
  static Polygon trusted(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  Polygon() = default;
  std::vector<Point> vertices_;
};

enum class Orientation { ccw, cw, collinear };

Orientation orientation(Point p, Point q, Point r);

// Twice the signed area of the ring; positive for counterclockwise order.
double signed_area2(std::span<const Point> ring);

double polygon_area(const Polygon& poly);

// No clockwise turn anywhere along the ring (collinear runs allowed).
bool is_convex(std::span<const Point> ring);
bool is_convex(const Polygon& poly);

// True when two closed segments share at least one point.
bool segments_intersect(Point a, Point b, Point c, Point d);

// Strict hull vertices, CCW from the lexicographically smallest point.
// Degenerate inputs yield one point or the two extreme points.
std::vector<Point> convex_hull(std::span<const Point> points);

// poly intersected with h; std::nullopt when the result has zero area.
std::optional<Polygon> clip_halfplane(const Polygon& poly, const Halfplane& h);

// Ring-level clip used by the polygon overload and by repeated clipping;
// the input ring must be convex and CCW. Returns an empty ring for a
// zero-area result.
std::vector<Point> clip_convex_ring(std::span<const Point> ring,
                                    const Halfplane& h);

// Angle v1-v3-v2 at apex v3, in [0, pi].
double angle_at(Point v1, Point v3, Point v2);

enum class Location { inside, boundary, outside };

Location point_in_polygon(Point p, const Polygon& poly);

// Index pair of two points closer than kEpsDist in both coordinates, if any.
std::optional<std::pair<std::size_t, std::size_t>> find_near_duplicate(
    std::span<const Point> points);

std::string to_string(Orientation o);
std::string to_string(Location loc);

}  // namespace geoforge
