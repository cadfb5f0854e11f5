#include "geoforge/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>

#include <json.hpp>

namespace geoforge {

namespace {

using json = nlohmann::json;

// ---- scene parsing ----

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  throw GeometryError(where + ": " + what);
}

Point read_point(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    invalid(where, "expected [x, y]");
  }
  const Point p{v[0].get<double>(), v[1].get<double>()};
  try {
    validate_point(p);
  } catch (const GeometryError& e) {
    invalid(where, e.what());
  }
  return p;
}

const json& read_list(const json& v, const std::string& key) {
  if (!v.is_array()) invalid(key, "expected a list");
  return v;
}

// Rethrows a module error with the object named.
template <class F>
auto named(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const GeometryError& e) {
    invalid(where, e.what());
  }
}

std::string strip_json_prefix(const std::string& msg) {
  // "[json.exception.parse_error.101] parse error at line 1, column 2: ..."
  const auto close = msg.find("] ");
  return close == std::string::npos ? msg : msg.substr(close + 2);
}

// ---- shared number formatting ----

std::string shortest(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string trimmed6(double v) {
  std::string s = fixed6(v);
  s.erase(s.find_last_not_of('0') + 1);
  if (s.back() == '.') s.pop_back();
  return s == "-0" ? "0" : s;
}

// ---- rendering helpers ----

std::optional<BBox> extent(const Scene& scene, const Overlay& overlay) {
  if (scene.bbox) return scene.bbox;
  std::vector<Point> all(scene.points);
  for (const Segment& s : scene.segments) {
    all.push_back(s.a);
    all.push_back(s.b);
  }
  for (const Polygon& p : scene.polygons) all.insert(all.end(), p.vertices().begin(), p.vertices().end());
  for (const OverlayPath& path : overlay.paths) all.insert(all.end(), path.points.begin(), path.points.end());
  all.insert(all.end(), overlay.marks.begin(), overlay.marks.end());
  if (all.empty()) return std::nullopt;
  return bounding_box(all);
}

BBox padded(BBox box) {
  double w = box.width();
  double h = box.height();
  if (w <= 0.0 && h <= 0.0) w = h = 1.0;
  else if (w <= 0.0) w = h;
  else if (h <= 0.0) h = w;
  const Point c = box.center();
  return {c.x - 0.55 * w, c.y - 0.55 * h, c.x + 0.55 * w, c.y + 0.55 * h};
}

void require_content(const Scene& scene, const Overlay& overlay) {
  if (scene.empty() && overlay.empty()) throw GeometryError("nothing to render");
}

}  // namespace

Scene parse_scene(std::string_view text) {
  json doc;
  std::vector<std::set<std::string>> keys;
  const json::parser_callback_t guard = [&](int, json::parse_event_t event, json& parsed) {
    if (event == json::parse_event_t::object_start) keys.emplace_back();
    else if (event == json::parse_event_t::object_end) keys.pop_back();
    else if (event == json::parse_event_t::key) {
      const auto key = parsed.get<std::string>();
      if (!keys.back().insert(key).second) throw ParseError("duplicate key \"" + key + "\"");
    }
    return true;
  };
  try {
    doc = json::parse(text.begin(), text.end(), guard);
  } catch (const json::parse_error& e) {
    throw ParseError(strip_json_prefix(e.what()));
  }
  if (!doc.is_object()) throw ParseError("scene must be a JSON object");

  Scene scene;
  for (const auto& [key, value] : doc.items()) {
    if (key == "points") {
      const auto& list = read_list(value, key);
      for (std::size_t i = 0; i < list.size(); ++i) {
        scene.points.push_back(read_point(list[i], "points[" + std::to_string(i) + "]"));
      }
    } else if (key == "segments") {
      const auto& list = read_list(value, key);
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string where = "segments[" + std::to_string(i) + "]";
        if (!list[i].is_array() || list[i].size() != 2) invalid(where, "expected [[x, y], [x, y]]");
        const Segment s{read_point(list[i][0], where), read_point(list[i][1], where)};
        named(where, [&] { validate_segment(s); return 0; });
        scene.segments.push_back(s);
      }
    } else if (key == "polygons") {
      const auto& list = read_list(value, key);
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string where = "polygons[" + std::to_string(i) + "]";
        if (!list[i].is_array()) invalid(where, "expected a vertex list");
        std::vector<Point> ring;
        for (const auto& v : list[i]) ring.push_back(read_point(v, where));
        scene.polygons.push_back(named(where, [&] { return Polygon(std::move(ring)); }));
      }
    } else if (key == "bbox") {
      if (!value.is_array() || value.size() != 4 ||
          !std::all_of(value.begin(), value.end(), [](const json& v) { return v.is_number(); })) {
        invalid("bbox", "expected [xmin, ymin, xmax, ymax]");
      }
      const BBox box{value[0].get<double>(), value[1].get<double>(), value[2].get<double>(),
                     value[3].get<double>()};
      named("bbox", [&] { validate_bbox(box); return 0; });
      scene.bbox = box;
    } else {
      throw ParseError("unknown key \"" + key + "\"");
    }
  }
  return scene;
}

std::string serialize_scene(const Scene& scene) {
  auto point = [](std::string& out, Point p) {
    out += '[' + shortest(p.x) + ',' + shortest(p.y) + ']';
  };
  std::vector<std::string> parts;
  if (!scene.points.empty()) {
    std::string s = R"("points":[)";
    for (std::size_t i = 0; i < scene.points.size(); ++i) {
      if (i) s += ',';
      point(s, scene.points[i]);
    }
    parts.push_back(s + ']');
  }
  if (!scene.segments.empty()) {
    std::string s = R"("segments":[)";
    for (std::size_t i = 0; i < scene.segments.size(); ++i) {
      if (i) s += ',';
      s += '[';
      point(s, scene.segments[i].a);
      s += ',';
      point(s, scene.segments[i].b);
      s += ']';
    }
    parts.push_back(s + ']');
  }
  if (!scene.polygons.empty()) {
    std::string s = R"("polygons":[)";
    for (std::size_t i = 0; i < scene.polygons.size(); ++i) {
      if (i) s += ',';
      s += '[';
      const auto& vs = scene.polygons[i].vertices();
      for (std::size_t k = 0; k < vs.size(); ++k) {
        if (k) s += ',';
        point(s, vs[k]);
      }
      s += ']';
    }
    parts.push_back(s + ']');
  }
  if (scene.bbox) {
    const BBox& b = *scene.bbox;
    parts.push_back(R"("bbox":[)" + shortest(b.xmin) + ',' + shortest(b.ymin) + ',' +
                    shortest(b.xmax) + ',' + shortest(b.ymax) + ']');
  }
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  return out + "}";
}

// ---- overlays ----

Overlay to_overlay(const PointQuadtree& tree, const BBox& frame) {
  Overlay ov;
  if (tree.empty()) return ov;
  const auto& nodes = tree.nodes();
  std::function<void(std::int32_t, BBox)> walk = [&](std::int32_t id, BBox box) {
    const auto& node = nodes[static_cast<std::size_t>(id)];
    const Point s = node.site;
    ov.paths.push_back({{{s.x, box.ymin}, {s.x, box.ymax}}, false, false, 0});
    ov.paths.push_back({{{box.xmin, s.y}, {box.xmax, s.y}}, false, false, 0});
    const BBox sub[4] = {{box.xmin, s.y, s.x, box.ymax},
                         {s.x, s.y, box.xmax, box.ymax},
                         {box.xmin, box.ymin, s.x, s.y},
                         {s.x, box.ymin, box.xmax, s.y}};
    for (int q = 0; q < 4; ++q) {
      if (node.child[q] != kNoChild) walk(node.child[q], sub[q]);
    }
  };
  walk(0, frame);
  return ov;
}

Overlay to_overlay(const PRQuadtree& tree) {
  Overlay ov;
  for (const auto& node : tree.nodes()) {
    if (!node.is_leaf()) continue;
    const BBox& r = node.region;
    ov.paths.push_back(
        {{{r.xmin, r.ymin}, {r.xmax, r.ymin}, {r.xmax, r.ymax}, {r.xmin, r.ymax}}, true, false, 0});
  }
  return ov;
}

Overlay to_overlay(const TrapezoidalMap& map) {
  Overlay ov;
  const BBox& b = map.bbox();
  ov.paths.push_back(
      {{{b.xmin, b.ymin}, {b.xmax, b.ymin}, {b.xmax, b.ymax}, {b.xmin, b.ymax}}, true, false, 0});
  for (const Segment& s : map.segments()) ov.paths.push_back({{s.a, s.b}, false, false, 0});
  for (const auto& e : map.extensions()) {
    ov.paths.push_back({{e.down_hit, e.up_hit}, false, false, 1});
  }
  return ov;
}

Overlay to_overlay(const OnionDecomposition& onion) {
  Overlay ov;
  for (std::size_t i = 0; i < onion.layers.size(); ++i) {
    ov.paths.push_back({onion.layers[i], onion.layers[i].size() > 2, false, i});
  }
  return ov;
}

Overlay to_overlay(const ProximityGraph& graph) {
  Overlay ov;
  for (const auto& [i, j] : graph.edges) {
    ov.paths.push_back({{graph.vertices[i], graph.vertices[j]}, false, false, 0});
  }
  return ov;
}

Overlay to_overlay(const FloatingBodyResult& result) {
  Overlay ov;
  ov.paths.push_back({result.dupin, true, false, 0});
  if (result.convex_fb) ov.paths.push_back({result.convex_fb->vertices(), true, false, 1});
  return ov;
}

Overlay to_overlay(const Triangulation& tri, const std::vector<Point>& samples) {
  Overlay ov;
  const auto& vs = tri.polygon.vertices();
  for (const auto& t : tri.triangles) ov.paths.push_back({{vs[t[0]], vs[t[1]], vs[t[2]]}, true, false, 0});
  ov.marks = samples;
  return ov;
}

Overlay to_overlay(const FractalOutput& fractal) {
  Overlay ov;
  for (const Polygon& cell : fractal.cells) ov.paths.push_back({cell.vertices(), true, true, 0});
  return ov;
}

// ---- SVG ----

void RenderStyle::validate() const {
  if (!(stroke_width > 0.0) || !(mark_radius > 0.0)) {
    throw GeometryError("render style lengths must be positive");
  }
  if (palette.empty()) throw GeometryError("render style palette must not be empty");
}

std::string emit_svg(const Scene& scene, const Overlay& overlay, const RenderStyle& style) {
  style.validate();
  require_content(scene, overlay);
  const BBox view = padded(*extent(scene, overlay));
  const double unit = std::max(view.width(), view.height());
  const std::string stroke = fixed6(style.stroke_width * unit);
  const std::string radius = fixed6(style.mark_radius * unit);
  // Reflect y inside the view box so it keeps the same extent.
  const double flip = view.ymin + view.ymax;
  auto xy = [&](Point p) { return fixed6(p.x) + ',' + fixed6(flip - p.y); };
  auto path_d = [&](const std::vector<Point>& pts, bool closed) {
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i) d += (i ? " L" : "M") + xy(pts[i]);
    if (closed) d += " Z";
    return d;
  };
  auto circle = [&](Point p, const std::string& fill) {
    return "<circle cx=\"" + fixed6(p.x) + "\" cy=\"" + fixed6(flip - p.y) + "\" r=\"" + radius +
           "\" fill=\"" + fill + "\"/>\n";
  };

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + fixed6(view.xmin) +
         ' ' + fixed6(view.ymin) + ' ' + fixed6(view.width()) + ' ' + fixed6(view.height()) +
         "\">\n";
  out += "<g id=\"scene\" fill=\"none\" stroke=\"#7f7f7f\" stroke-width=\"" + stroke + "\">\n";
  for (const Polygon& poly : scene.polygons) {
    out += "<path d=\"" + path_d(poly.vertices(), true) + "\"/>\n";
  }
  for (const Segment& s : scene.segments) out += "<path d=\"" + path_d({s.a, s.b}, false) + "\"/>\n";
  out += "</g>\n";
  out += "<g id=\"result\" fill=\"none\" stroke-width=\"" + stroke + "\">\n";
  for (const OverlayPath& path : overlay.paths) {
    const std::string& color = style.palette[path.layer % style.palette.size()];
    if (path.points.size() == 1) {
      out += circle(path.points[0], color);
      continue;
    }
    out += "<path d=\"" + path_d(path.points, path.closed) + "\" stroke=\"" + color + '"';
    if (path.filled) out += " fill=\"" + color + "\" fill-opacity=\"0.5\"";
    out += "/>\n";
  }
  for (const Point& p : overlay.marks) out += circle(p, style.palette[0]);
  out += "</g>\n";
  out += "<g id=\"points\">\n";
  for (const Point& p : scene.points) out += circle(p, "#000000");
  out += "</g>\n</svg>\n";
  return out;
}

// ---- Ipe ----

std::string emit_ipe(const Scene& scene, const Overlay& overlay, const RenderStyle& style) {
  style.validate();
  require_content(scene, overlay);
  auto pos = [](Point p) { return trimmed6(p.x) + ' ' + trimmed6(p.y); };
  auto mark = [&](Point p) {
    return "<use name=\"mark/disk(sx)\" pos=\"" + pos(p) + "\" size=\"normal\" stroke=\"black\"/>\n";
  };
  auto path = [&](const std::vector<Point>& pts, bool closed, bool filled) {
    if (pts.size() == 1) return mark(pts[0]);
    std::string s = "<path stroke=\"black\"";
    if (filled) s += " fill=\"black\"";
    s += '>';
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) s += '\n';
      s += pos(pts[i]) + (i ? " l" : " m");
    }
    if (closed) s += "\nh";
    return s + "</path>\n";
  };

  std::string out = "<?xml version=\"1.0\"?>\n<!DOCTYPE ipe SYSTEM \"ipe.dtd\">\n";
  out += "<ipe version=\"70218\" creator=\"geoforge\">\n<page>\n";
  for (const Polygon& poly : scene.polygons) out += path(poly.vertices(), true, false);
  for (const Segment& s : scene.segments) out += path({s.a, s.b}, false, false);
  for (const Point& p : scene.points) out += mark(p);
  if (!overlay.empty()) {
    out += "<group>\n";
    for (const OverlayPath& p : overlay.paths) out += path(p.points, p.closed, p.filled);
    for (const Point& p : overlay.marks) out += mark(p);
    out += "</group>\n";
  }
  out += "</page>\n</ipe>\n";
  return out;
}

}  // namespace geoforge
