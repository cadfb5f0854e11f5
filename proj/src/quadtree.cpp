#include "geoforge/quadtree.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <json.hpp>

#include "geoforge/dump.hpp"

namespace geoforge {

namespace {

constexpr std::array<const char*, 4> kQuadrantKeys{"nw", "ne", "sw", "se"};

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

bool close(Point a, Point b, double tol) {
  return close(a.x, b.x, tol) && close(a.y, b.y, tol);
}

bool close(const BBox& a, const BBox& b, double tol) {
  return close(a.xmin, b.xmin, tol) && close(a.ymin, b.ymin, tol) &&
         close(a.xmax, b.xmax, tol) && close(a.ymax, b.ymax, tol);
}

[[noreturn]] void malformed(const std::string& what) {
  throw GeometryError("malformed quadtree array: " + what);
}

Point parse_point(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    malformed("expected [x,y]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

BBox parse_region(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4) malformed("expected region [xmin,ymin,xmax,ymax]");
  BBox box;
  for (const auto& v : j) {
    if (!v.is_number()) malformed("region entries must be numbers");
  }
  box = {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
  validate_bbox(box);
  return box;
}

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(e.what());
  }
}

void expect_kind(const nlohmann::json& doc, const char* kind) {
  if (!doc.is_object() || doc.size() != 2 || !doc.contains("kind") ||
      !doc.contains("root")) {
    malformed("expected object with keys kind, root");
  }
  if (doc["kind"] != kind) malformed(std::string("kind must be \"") + kind + "\"");
}

}  // namespace

Quadrant quadrant_of(Point p, Point split) {
  const bool east = p.x >= split.x;
  const bool north = p.y >= split.y;
  if (north) return east ? Quadrant::ne : Quadrant::nw;
  return east ? Quadrant::se : Quadrant::sw;
}

std::array<BBox, 4> split_region(const BBox& box) {
  const Point c = box.center();
  std::array<BBox, 4> out;
  out[static_cast<int>(Quadrant::nw)] = {box.xmin, c.y, c.x, box.ymax};
  out[static_cast<int>(Quadrant::ne)] = {c.x, c.y, box.xmax, box.ymax};
  out[static_cast<int>(Quadrant::sw)] = {box.xmin, box.ymin, c.x, c.y};
  out[static_cast<int>(Quadrant::se)] = {c.x, box.ymin, box.xmax, c.y};
  return out;
}

// ---------------------------------------------------------------------------
// Point quadtree

PointQuadtree PointQuadtree::build(std::span<const Point> points) {
  for (const Point& p : points) validate_point(p);
  if (auto dup = find_near_duplicate(points)) {
    throw GeometryError("duplicate site (points " + std::to_string(dup->first) +
                        " and " + std::to_string(dup->second) + ")");
  }
  PointQuadtree tree;
  tree.nodes_.reserve(points.size());
  for (const Point& p : points) {
    if (tree.nodes_.empty()) {
      tree.nodes_.push_back(Node{p});
      continue;
    }
    std::size_t at = 0;
    for (;;) {
      const auto q = static_cast<std::size_t>(quadrant_of(p, tree.nodes_[at].site));
      const std::int32_t next = tree.nodes_[at].child[q];
      if (next == kNoChild) {
        tree.nodes_[at].child[q] = static_cast<std::int32_t>(tree.nodes_.size());
        tree.nodes_.push_back(Node{p});
        break;
      }
      at = static_cast<std::size_t>(next);
    }
  }
  return tree;
}

std::size_t PointQuadtree::depth() const {
  if (nodes_.empty()) return 0;
  std::function<std::size_t(std::int32_t)> walk = [&](std::int32_t i) -> std::size_t {
    if (i == kNoChild) return 0;
    std::size_t best = 0;
    for (std::int32_t c : nodes_[static_cast<std::size_t>(i)].child) best = std::max(best, walk(c));
    return best + 1;
  };
  return walk(0);
}

std::vector<Point> PointQuadtree::collect() const {
  std::vector<Point> out;
  out.reserve(nodes_.size());
  std::function<void(std::int32_t)> walk = [&](std::int32_t i) {
    if (i == kNoChild) return;
    const Node& n = nodes_[static_cast<std::size_t>(i)];
    out.push_back(n.site);
    for (std::int32_t c : n.child) walk(c);
  };
  if (!nodes_.empty()) walk(0);
  return out;
}

bool PointQuadtree::structurally_equal(const PointQuadtree& other, double tol) const {
  if (nodes_.size() != other.nodes_.size()) return false;
  // Compare by simultaneous walk so differing node numbering does not matter.
  std::function<bool(std::int32_t, std::int32_t)> same = [&](std::int32_t a, std::int32_t b) {
    if (a == kNoChild || b == kNoChild) return a == b;
    const Node& na = nodes_[static_cast<std::size_t>(a)];
    const Node& nb = other.nodes_[static_cast<std::size_t>(b)];
    if (!close(na.site, nb.site, tol)) return false;
    for (int q = 0; q < 4; ++q) {
      if (!same(na.child[q], nb.child[q])) return false;
    }
    return true;
  };
  return nodes_.empty() || same(0, 0);
}

std::string to_array(const PointQuadtree& tree) {
  std::string out = R"({"kind":"point","root":)";
  const auto& nodes = tree.nodes();
  std::function<void(std::int32_t)> emit = [&](std::int32_t i) {
    if (i == kNoChild) {
      out += "null";
      return;
    }
    const auto& n = nodes[static_cast<std::size_t>(i)];
    out += R"({"site":)";
    dump::append_point(out, n.site);
    for (int q = 0; q < 4; ++q) {
      out += ",\"";
      out += kQuadrantKeys[q];
      out += "\":";
      emit(n.child[q]);
    }
    out += '}';
  };
  emit(tree.empty() ? kNoChild : 0);
  out += '}';
  return out;
}

PointQuadtree parse_point_quadtree(std::string_view text) {
  const auto doc = parse_json(text);
  expect_kind(doc, "point");
  PointQuadtree tree;
  std::function<std::int32_t(const nlohmann::json&)> read = [&](const nlohmann::json& j) {
    if (j.is_null()) return kNoChild;
    if (!j.is_object() || j.size() != 5 || !j.contains("site")) malformed("bad point node");
    const auto index = static_cast<std::int32_t>(tree.nodes_.size());
    tree.nodes_.push_back(PointQuadtree::Node{parse_point(j["site"])});
    for (int q = 0; q < 4; ++q) {
      if (!j.contains(kQuadrantKeys[q])) malformed("point node missing child key");
      const std::int32_t c = read(j[kQuadrantKeys[q]]);
      tree.nodes_[static_cast<std::size_t>(index)].child[q] = c;
    }
    return index;
  };
  read(doc["root"]);
  return tree;
}

// ---------------------------------------------------------------------------
// PR quadtree

PRQuadtree PRQuadtree::build(std::span<const Point> points, std::optional<BBox> region,
                             std::size_t capacity) {
  if (capacity < 1) throw GeometryError("capacity must be at least 1");
  for (const Point& p : points) validate_point(p);

  BBox root;
  if (region) {
    validate_bbox(*region);
    root = *region;
    for (const Point& p : points) {
      if (!root.contains(p)) throw GeometryError("point outside region");
    }
  } else if (points.empty()) {
    root = BBox{};
  } else {
    const BBox tight = bounding_box(points);
    double side = std::max(tight.width(), tight.height());
    if (side <= 0.0) side = 1.0;
    const double half = 0.5 * side * 1.1;
    const Point c = tight.center();
    root = {c.x - half, c.y - half, c.x + half, c.y + half};
  }

  PRQuadtree tree;
  tree.capacity_ = capacity;
  tree.build_node(root, std::vector<Point>(points.begin(), points.end()), 0);
  return tree;
}

std::int32_t PRQuadtree::build_node(const BBox& region, std::vector<Point> pts,
                                    std::size_t depth) {
  const auto index = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back(Node{region, depth, {}});
  if (pts.size() <= capacity_ || depth >= kMaxQuadtreeDepth) {
    if (pts.size() > capacity_) overfull_ = true;
    nodes_[static_cast<std::size_t>(index)].points = std::move(pts);
    return index;
  }
  std::array<std::vector<Point>, 4> buckets;
  const Point c = region.center();
  for (const Point& p : pts) buckets[static_cast<std::size_t>(quadrant_of(p, c))].push_back(p);
  const auto regions = split_region(region);
  for (std::size_t q = 0; q < 4; ++q) {
    const std::int32_t child = build_node(regions[q], std::move(buckets[q]), depth + 1);
    nodes_[static_cast<std::size_t>(index)].child[q] = child;
  }
  return index;
}

std::vector<Point> PRQuadtree::collect() const {
  std::vector<Point> out;
  for (const Node& n : nodes_) {
    out.insert(out.end(), n.points.begin(), n.points.end());
  }
  return out;
}

bool PRQuadtree::structurally_equal(const PRQuadtree& other, double tol) const {
  if (nodes_.size() != other.nodes_.size()) return false;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& a = nodes_[i];
    const Node& b = other.nodes_[i];
    if (a.child != b.child || a.depth != b.depth || !close(a.region, b.region, tol) ||
        a.points.size() != b.points.size()) {
      return false;
    }
    for (std::size_t k = 0; k < a.points.size(); ++k) {
      if (!close(a.points[k], b.points[k], tol)) return false;
    }
  }
  return true;
}

std::string to_array(const PRQuadtree& tree) {
  std::string out = R"({"kind":"pr","root":)";
  const auto& nodes = tree.nodes();
  std::function<void(std::size_t)> emit = [&](std::size_t i) {
    const auto& n = nodes[i];
    out += R"({"region":)";
    dump::append_bbox(out, n.region);
    if (n.is_leaf()) {
      out += R"(,"points":)";
      dump::append_points(out, n.points);
    } else {
      out += R"(,"children":[)";
      for (int q = 0; q < 4; ++q) {
        if (q) out += ',';
        emit(static_cast<std::size_t>(n.child[q]));
      }
      out += ']';
    }
    out += '}';
  };
  emit(0);
  out += '}';
  return out;
}

PRQuadtree parse_pr_quadtree(std::string_view text) {
  const auto doc = parse_json(text);
  expect_kind(doc, "pr");
  PRQuadtree tree;
  std::size_t fullest = 0;
  std::function<std::int32_t(const nlohmann::json&, std::size_t)> read =
      [&](const nlohmann::json& j, std::size_t depth) {
        if (!j.is_object() || j.size() != 2 || !j.contains("region")) malformed("bad pr node");
        const auto index = static_cast<std::int32_t>(tree.nodes_.size());
        tree.nodes_.push_back(PRQuadtree::Node{parse_region(j["region"]), depth, {}});
        if (j.contains("points")) {
          if (!j["points"].is_array()) malformed("points must be a list");
          std::vector<Point> pts;
          for (const auto& p : j["points"]) pts.push_back(parse_point(p));
          fullest = std::max(fullest, pts.size());
          tree.nodes_[static_cast<std::size_t>(index)].points = std::move(pts);
        } else if (j.contains("children")) {
          const auto& ch = j["children"];
          if (!ch.is_array() || ch.size() != 4) malformed("children must have 4 entries");
          for (int q = 0; q < 4; ++q) {
            const std::int32_t c = read(ch[static_cast<std::size_t>(q)], depth + 1);
            tree.nodes_[static_cast<std::size_t>(index)].child[q] = c;
          }
        } else {
          malformed("pr node needs points or children");
        }
        return index;
      };
  read(doc["root"], 0);
  tree.capacity_ = std::max<std::size_t>(1, fullest);
  return tree;
}

}  // namespace geoforge
