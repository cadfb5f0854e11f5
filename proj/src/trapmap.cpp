#include "geoforge/trapmap.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "geoforge/dump.hpp"

namespace geoforge {

namespace {

bool shares_endpoint(const Segment& s, Point p) {
  return near_equal(s.a, p) || near_equal(s.b, p);
}

void check_pair(const Segment& s, const Segment& t, std::size_t i, std::size_t j) {
  auto fail = [&] {
    throw GeometryError("segments intersect: " + std::to_string(i) + " and " +
                        std::to_string(j));
  };
  const Point sp[2] = {s.a, s.b};
  const Point tp[2] = {t.a, t.b};
  int shared = 0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      if (!near_equal(sp[a], tp[b])) continue;
      ++shared;
      // Collinear continuation back over the other segment is an overlap.
      const Point u = sp[1 - a] - sp[a];
      const Point v = tp[1 - b] - tp[b];
      if (orientation(sp[a], sp[1 - a], tp[1 - b]) == Orientation::collinear && dot(u, v) > 0) {
        fail();
      }
    }
  }
  if (shared > 1) fail();
  if (shared == 1) {
    // Only the common endpoint may touch; any other contact is a crossing.
    for (int a = 0; a < 2; ++a) {
      if (!shares_endpoint(t, sp[a]) && distance_to_segment(sp[a], t.a, t.b) <= kEpsDist) fail();
      if (!shares_endpoint(s, tp[a]) && distance_to_segment(tp[a], s.a, s.b) <= kEpsDist) fail();
    }
    return;
  }
  if (segments_intersect(s.a, s.b, t.a, t.b)) fail();
  for (int a = 0; a < 2; ++a) {
    if (distance_to_segment(sp[a], t.a, t.b) <= kEpsDist ||
        distance_to_segment(tp[a], s.a, s.b) <= kEpsDist) {
      fail();
    }
  }
}

void append_boundary(std::string& out, const Boundary& b) {
  switch (b.kind) {
    case Boundary::Kind::top_wall: out += "\"top\""; break;
    case Boundary::Kind::bottom_wall: out += "\"bottom\""; break;
    case Boundary::Kind::segment: out += std::to_string(b.segment); break;
  }
}

void append_optional_point(std::string& out, const std::optional<Point>& p) {
  if (p) dump::append_point(out, *p);
  else out += "null";
}

}  // namespace

TrapezoidalMap TrapezoidalMap::build(std::span<const Segment> segments,
                                     std::optional<BBox> bbox) {
  TrapezoidalMap map;
  map.segments_.reserve(segments.size());
  for (const Segment& s : segments) {
    validate_segment(s);
    if (std::abs(s.a.x - s.b.x) <= kEpsDist) throw GeometryError("vertical segment unsupported");
    map.segments_.push_back(s.a.x < s.b.x ? s : Segment{s.b, s.a});
  }
  for (std::size_t i = 0; i < map.segments_.size(); ++i) {
    for (std::size_t j = i + 1; j < map.segments_.size(); ++j) {
      check_pair(map.segments_[i], map.segments_[j], i, j);
    }
  }

  std::vector<Point> endpoints;
  for (const Segment& s : map.segments_) {
    endpoints.push_back(s.a);
    endpoints.push_back(s.b);
  }
  if (bbox) {
    validate_bbox(*bbox);
    for (const Point& p : endpoints) {
      if (!(p.x > bbox->xmin && p.x < bbox->xmax && p.y > bbox->ymin && p.y < bbox->ymax)) {
        throw GeometryError("segment endpoint outside bbox");
      }
    }
    map.bbox_ = *bbox;
  } else {
    if (endpoints.empty()) throw GeometryError("bbox required for an empty segment set");
    const BBox tight = bounding_box(endpoints);
    const double px = 0.1 * tight.width();
    const double py = tight.height() > 0.0 ? 0.1 * tight.height() : px;
    map.bbox_ = {tight.xmin - px, tight.ymin - py, tight.xmax + px, tight.ymax + py};
  }

  map.compute_extensions();
  map.compute_trapezoids();
  return map;
}

double TrapezoidalMap::y_at(const Boundary& side, double x) const {
  switch (side.kind) {
    case Boundary::Kind::top_wall: return bbox_.ymax;
    case Boundary::Kind::bottom_wall: return bbox_.ymin;
    case Boundary::Kind::segment: break;
  }
  const Segment& s = segments_[side.segment];
  if (x == s.a.x) return s.a.y;
  if (x == s.b.x) return s.b.y;
  return s.a.y + (x - s.a.x) * (s.b.y - s.a.y) / (s.b.x - s.a.x);
}

double TrapezoidalMap::area(const Trapezoid& t) const {
  const double left = y_at(t.top, t.left_x) - y_at(t.bottom, t.left_x);
  const double right = y_at(t.top, t.right_x) - y_at(t.bottom, t.right_x);
  return 0.5 * (left + right) * (t.right_x - t.left_x);
}

void TrapezoidalMap::compute_extensions() {
  std::vector<Point> origins;
  for (const Segment& s : segments_) {
    for (Point p : {s.a, s.b}) {
      const bool seen = std::any_of(origins.begin(), origins.end(),
                                    [&](Point q) { return near_equal(p, q); });
      if (!seen) origins.push_back(p);
    }
  }
  for (const Point& p : origins) {
    VerticalExtension ext{p, {p.x, bbox_.ymax}, Boundary::top(), {p.x, bbox_.ymin},
                          Boundary::bottom()};
    for (std::size_t i = 0; i < segments_.size(); ++i) {
      const Segment& s = segments_[i];
      if (shares_endpoint(s, p) || p.x < s.a.x || p.x > s.b.x) continue;
      const double y = y_at(Boundary::of(i), p.x);
      if (y > p.y && y < ext.up_hit.y) {
        ext.up_hit.y = y;
        ext.up_target = Boundary::of(i);
      } else if (y < p.y && y > ext.down_hit.y) {
        ext.down_hit.y = y;
        ext.down_target = Boundary::of(i);
      }
    }
    extensions_.push_back(ext);
  }
}

void TrapezoidalMap::compute_trapezoids() {
  std::vector<double> xs{bbox_.xmin, bbox_.xmax};
  // Distinct endpoints grouped by x, for choosing leftp / rightp.
  std::map<double, std::vector<Point>> endpoints_at;
  for (const auto& e : extensions_) {
    xs.push_back(e.origin.x);
    endpoints_at[e.origin.x].push_back(e.origin);
  }
  for (auto& [x, pts] : endpoints_at) {
    std::sort(pts.begin(), pts.end(), [](Point a, Point b) { return a.y < b.y; });
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  auto endpoint_on_side = [&](double x, const Boundary& bottom,
                              const Boundary& top) -> std::optional<Point> {
    const auto it = endpoints_at.find(x);
    if (it == endpoints_at.end()) return std::nullopt;
    const double lo = y_at(bottom, x) - kEpsDist;
    const double hi = y_at(top, x) + kEpsDist;
    for (const Point& p : it->second) {
      if (p.y >= lo && p.y <= hi) return p;
    }
    return std::nullopt;
  };

  // Trapezoids still open at the left edge of the current slab, in slab order.
  std::vector<std::size_t> open;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    const double x0 = xs[k];
    const double x1 = xs[k + 1];
    const double xm = 0.5 * (x0 + x1);

    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < segments_.size(); ++i) {
      if (segments_[i].a.x <= x0 && segments_[i].b.x >= x1) active.push_back(i);
    }
    std::sort(active.begin(), active.end(), [&](std::size_t a, std::size_t b) {
      return y_at(Boundary::of(a), xm) < y_at(Boundary::of(b), xm);
    });
    std::vector<Boundary> sides{Boundary::bottom()};
    for (std::size_t i : active) sides.push_back(Boundary::of(i));
    sides.push_back(Boundary::top());

    std::vector<std::size_t> next_open;
    std::vector<bool> continued(open.size(), false);
    for (std::size_t c = 0; c + 1 < sides.size(); ++c) {
      const Boundary& bottom = sides[c];
      const Boundary& top = sides[c + 1];
      std::optional<std::size_t> match;
      for (std::size_t o = 0; o < open.size(); ++o) {
        const Trapezoid& t = trapezoids_[open[o]];
        if (t.bottom == bottom && t.top == top) {
          match = o;
          break;
        }
      }
      if (match) {
        continued[*match] = true;
        trapezoids_[open[*match]].right_x = x1;
        next_open.push_back(open[*match]);
      } else {
        Trapezoid t{top, bottom, x0, x1, std::nullopt, std::nullopt};
        if (k > 0) t.leftp = endpoint_on_side(x0, bottom, top);
        next_open.push_back(trapezoids_.size());
        trapezoids_.push_back(t);
      }
    }
    for (std::size_t o = 0; o < open.size(); ++o) {
      if (continued[o]) continue;
      Trapezoid& t = trapezoids_[open[o]];
      t.rightp = endpoint_on_side(t.right_x, t.bottom, t.top);
    }
    open = std::move(next_open);
  }
}

std::size_t TrapezoidalMap::locate(Point q) const {
  if (!(q.x > bbox_.xmin && q.x < bbox_.xmax && q.y > bbox_.ymin && q.y < bbox_.ymax)) {
    throw GeometryError("query outside bbox");
  }
  for (const Segment& s : segments_) {
    if (distance_to_segment(q, s.a, s.b) <= kEpsDist) throw GeometryError("degenerate query");
  }
  for (const auto& e : extensions_) {
    if (std::abs(q.x - e.origin.x) <= kEpsDist && q.y >= e.down_hit.y - kEpsDist &&
        q.y <= e.up_hit.y + kEpsDist) {
      throw GeometryError("degenerate query");
    }
  }
  for (std::size_t i = 0; i < trapezoids_.size(); ++i) {
    const Trapezoid& t = trapezoids_[i];
    if (q.x > t.left_x && q.x < t.right_x && q.y > y_at(t.bottom, q.x) &&
        q.y < y_at(t.top, q.x)) {
      return i;
    }
  }
  throw GeometryError("degenerate query");
}

std::string to_json(const TrapezoidalMap& map) {
  std::string out = R"({"bbox":)";
  dump::append_bbox(out, map.bbox());
  out += R"(,"segments":[)";
  for (std::size_t i = 0; i < map.segments().size(); ++i) {
    if (i) out += ',';
    const Point ends[] = {map.segments()[i].a, map.segments()[i].b};
    dump::append_points(out, ends);
  }
  out += R"(],"extensions":[)";
  for (std::size_t i = 0; i < map.extensions().size(); ++i) {
    const auto& e = map.extensions()[i];
    if (i) out += ',';
    out += R"({"origin":)";
    dump::append_point(out, e.origin);
    out += R"(,"up":)";
    dump::append_point(out, e.up_hit);
    out += R"(,"up_target":)";
    append_boundary(out, e.up_target);
    out += R"(,"down":)";
    dump::append_point(out, e.down_hit);
    out += R"(,"down_target":)";
    append_boundary(out, e.down_target);
    out += '}';
  }
  out += R"(],"trapezoids":[)";
  for (std::size_t i = 0; i < map.trapezoids().size(); ++i) {
    const auto& t = map.trapezoids()[i];
    if (i) out += ',';
    out += R"({"top":)";
    append_boundary(out, t.top);
    out += R"(,"bottom":)";
    append_boundary(out, t.bottom);
    out += R"(,"left_x":)";
    dump::append_number(out, t.left_x);
    out += R"(,"right_x":)";
    dump::append_number(out, t.right_x);
    out += R"(,"leftp":)";
    append_optional_point(out, t.leftp);
    out += R"(,"rightp":)";
    append_optional_point(out, t.rightp);
    out += '}';
  }
  out += "]}";
  return out;
}

}  // namespace geoforge
