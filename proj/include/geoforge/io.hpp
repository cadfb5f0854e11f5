#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "geoforge/beta_skeleton.hpp"
#include "geoforge/core.hpp"
#include "geoforge/floating_body.hpp"
#include "geoforge/fractals.hpp"
#include "geoforge/onion.hpp"
#include "geoforge/quadtree.hpp"
#include "geoforge/trapmap.hpp"
#include "geoforge/triangulation.hpp"

namespace geoforge {

// Malformed scene text. The message carries the line and column.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Scene {
  std::vector<Point> points;
  std::vector<Segment> segments;
  std::vector<Polygon> polygons;
  std::optional<BBox> bbox;

  bool empty() const {
    return points.empty() && segments.empty() && polygons.empty() && !bbox;
  }
};

// Scene schema: an object with optional keys "points" ([[x,y],...]),
// "segments" ([[[x,y],[x,y]],...]), "polygons" ([[[x,y],...],...]) and
// "bbox" ([xmin,ymin,xmax,ymax]). Unknown or repeated keys are rejected.
// Throws ParseError for bad syntax and GeometryError, prefixed with the
// offending object such as "polygons[2]: ", for invalid geometry.
Scene parse_scene(std::string_view text);

// Writes only the non-empty keys, with shortest round-trip numbers.
std::string serialize_scene(const Scene& scene);

// Renderer-neutral drawing of a result.
struct OverlayPath {
  std::vector<Point> points;
  bool closed = false;
  bool filled = false;
  // Picks the palette color; onion layers and extensions use it.
  std::size_t layer = 0;
};

struct Overlay {
  std::vector<OverlayPath> paths;
  std::vector<Point> marks;

  bool empty() const { return paths.empty() && marks.empty(); }
};

// Point quadtree splits are clipped to frame.
Overlay to_overlay(const PointQuadtree& tree, const BBox& frame);
Overlay to_overlay(const PRQuadtree& tree);
Overlay to_overlay(const TrapezoidalMap& map);
Overlay to_overlay(const OnionDecomposition& onion);
Overlay to_overlay(const ProximityGraph& graph);
Overlay to_overlay(const FloatingBodyResult& result);
Overlay to_overlay(const Triangulation& tri, const std::vector<Point>& samples = {});
Overlay to_overlay(const FractalOutput& fractal);

// Lengths are fractions of the larger side of the padded view box.
struct RenderStyle {
  double stroke_width = 0.002;
  double mark_radius = 0.006;
  std::vector<std::string> palette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                   "#8c564b"};

  // Throws unless the lengths are positive and the palette is non-empty.
  void validate() const;
};

// SVG 1.1 with the y axis pointing up. The view box is the scene bbox (or,
// without one, the bounds of everything drawn) padded by 5% per side.
// Coordinates use 6 fixed decimals. Throws "nothing to render" when both the
// scene and the overlay are empty.
std::string emit_svg(const Scene& scene, const Overlay& overlay, const RenderStyle& style = {});

// Ipe 7 XML in page coordinates: scene points as disk marks, other geometry
// as black paths, the overlay inside one group. Numbers are rounded to 6
// decimals with trailing zeros dropped; everything is drawn in black, so the
// style is only validated. Same errors as emit_svg.
std::string emit_ipe(const Scene& scene, const Overlay& overlay, const RenderStyle& style = {});

}  // namespace geoforge
