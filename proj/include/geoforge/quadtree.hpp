#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geoforge/core.hpp"

namespace geoforge {

// Child slot order used by both quadtree variants and the array format.
enum class Quadrant : std::uint8_t { nw = 0, ne = 1, sw = 2, se = 3 };

// Splitting-line tie-break: x >= split goes east, y >= split goes north.
Quadrant quadrant_of(Point p, Point split);

inline constexpr std::int32_t kNoChild = -1;

// Point quadtree; node 0 is the root when the tree is nonempty. Shape depends
// on insertion order.
class PointQuadtree {
 public:
  struct Node {
    Point site;
    std::array<std::int32_t, 4> child{kNoChild, kNoChild, kNoChild, kNoChild};
  };

  PointQuadtree() = default;

  // Inserts in the given order; throws "duplicate site" on near-equal points.
  static PointQuadtree build(std::span<const Point> points);

  bool empty() const { return nodes_.empty(); }
  std::size_t size() const { return nodes_.size(); }
  std::size_t depth() const;
  const std::vector<Node>& nodes() const { return nodes_; }

  // Pre-order: node, then NW, NE, SW, SE.
  std::vector<Point> collect() const;

  // Coordinates compared within tol.
  bool structurally_equal(const PointQuadtree& other, double tol = 0.0) const;

 private:
  friend PointQuadtree parse_point_quadtree(std::string_view text);
  std::vector<Node> nodes_;
};

// Leaves deeper than this keep their points even above capacity.
inline constexpr std::size_t kMaxQuadtreeDepth = 32;

// Point-region quadtree: fixed regions split at their centers, points only in
// leaves. Node 0 is the root.
class PRQuadtree {
 public:
  struct Node {
    BBox region;
    std::size_t depth = 0;
    std::vector<Point> points;  // leaves only
    std::array<std::int32_t, 4> child{kNoChild, kNoChild, kNoChild, kNoChild};

    bool is_leaf() const { return child[0] == kNoChild; }
  };

  // Without a region, uses the points' bounding square grown by 5% per side.
  static PRQuadtree build(std::span<const Point> points,
                          std::optional<BBox> region, std::size_t capacity);

  const BBox& region() const { return nodes_.front().region; }
  std::size_t capacity() const { return capacity_; }
  // Set when some leaf at kMaxQuadtreeDepth holds more than capacity points.
  bool has_overfull_leaf() const { return overfull_; }
  const std::vector<Node>& nodes() const { return nodes_; }

  std::vector<Point> collect() const;

  bool structurally_equal(const PRQuadtree& other, double tol = 0.0) const;

 private:
  friend PRQuadtree parse_pr_quadtree(std::string_view text);
  std::int32_t build_node(const BBox& region, std::vector<Point> pts,
                          std::size_t depth);

  std::vector<Node> nodes_;
  std::size_t capacity_ = 1;
  bool overfull_ = false;
};

// The four child regions of box, indexed by Quadrant.
std::array<BBox, 4> split_region(const BBox& box);

// Array format, e.g. {"kind":"point","root":{"site":[1,2],"nw":null,...}}.
std::string to_array(const PointQuadtree& tree);
// {"kind":"pr","root":{"region":[...],"points":[...]}} or with "children".
std::string to_array(const PRQuadtree& tree);

// Inverses of to_array. A parsed PR tree takes its capacity from its fullest
// leaf, since the array format does not carry it.
PointQuadtree parse_point_quadtree(std::string_view text);
PRQuadtree parse_pr_quadtree(std::string_view text);

}  // namespace geoforge
