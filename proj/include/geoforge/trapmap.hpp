#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geoforge/core.hpp"

namespace geoforge {

// What a vertical ray or a trapezoid side runs into: an input segment or a
// wall of the bounding box.
struct Boundary {
  enum class Kind { segment, top_wall, bottom_wall };
  Kind kind = Kind::segment;
  std::size_t segment = 0;

  static Boundary top() { return {Kind::top_wall, 0}; }
  static Boundary bottom() { return {Kind::bottom_wall, 0}; }
  static Boundary of(std::size_t index) { return {Kind::segment, index}; }

  friend bool operator==(const Boundary&, const Boundary&) = default;
};

struct VerticalExtension {
  Point origin;
  Point up_hit;
  Boundary up_target;
  Point down_hit;
  Boundary down_target;
};

struct Trapezoid {
  Boundary top;
  Boundary bottom;
  double left_x = 0.0;
  double right_x = 0.0;
  // Endpoint on the left (right) side; empty where the side is a bbox wall.
  std::optional<Point> leftp;
  std::optional<Point> rightp;
};

class TrapezoidalMap {
 public:
  // Segments must be non-vertical and pairwise disjoint apart from shared
  // endpoints. Without a bbox, the endpoints' bounding box grown by 10% per
  // side is used.
  static TrapezoidalMap build(std::span<const Segment> segments,
                              std::optional<BBox> bbox = std::nullopt);

  const BBox& bbox() const { return bbox_; }
  // Input segments reoriented so that a.x < b.x, in input order.
  const std::vector<Segment>& segments() const { return segments_; }
  const std::vector<VerticalExtension>& extensions() const { return extensions_; }
  const std::vector<Trapezoid>& trapezoids() const { return trapezoids_; }

  // y-coordinate of a trapezoid side at x.
  double y_at(const Boundary& side, double x) const;
  double area(const Trapezoid& t) const;

  // Linear scan. Throws "degenerate query" when q lies on a segment or an
  // extension, and "query outside bbox" unless q is strictly inside.
  std::size_t locate(Point q) const;

 private:
  void compute_extensions();
  void compute_trapezoids();

  BBox bbox_;
  std::vector<Segment> segments_;
  std::vector<VerticalExtension> extensions_;
  std::vector<Trapezoid> trapezoids_;
};

// {"bbox":[...],"segments":[...],"extensions":[...],"trapezoids":[...]}
std::string to_json(const TrapezoidalMap& map);

}  // namespace geoforge
