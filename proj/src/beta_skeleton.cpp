#include "geoforge/beta_skeleton.hpp"

#include <cmath>
#include <numbers>

#include "geoforge/dump.hpp"

namespace geoforge {

BetaParameter::BetaParameter(double beta) : beta_(beta) {
  if (!std::isfinite(beta) || !(beta > 0.0)) {
    throw GeometryError("beta must be in (0, inf)");
  }
}

double theta_of_beta(BetaParameter beta) {
  const double b = beta.value();
  if (b >= 1.0) return std::asin(1.0 / b);
  return std::numbers::pi - std::asin(b);
}

namespace {

bool angle_blocks(Point p, Point q, Point r, double theta) {
  return angle_at(p, r, q) >= theta - kEpsAngle;
}

// Disks of radius beta*d/2 centred at (1 - beta/2) p + (beta/2) q and the
// mirror image; r blocks when it lies in both.
bool lune_blocks(Point p, Point q, Point r, double beta) {
  const double d = distance(p, q);
  const double radius = 0.5 * beta * d + kEpsDist;
  const Point c1 = (1.0 - 0.5 * beta) * p + (0.5 * beta) * q;
  const Point c2 = (0.5 * beta) * p + (1.0 - 0.5 * beta) * q;
  return distance(r, c1) <= radius && distance(r, c2) <= radius;
}

}  // namespace

ProximityGraph beta_skeleton(std::span<const Point> points, BetaParameter beta,
                             SkeletonRegion region) {
  if (points.size() < 2) throw GeometryError("beta skeleton needs at least 2 points");
  for (const Point& p : points) validate_point(p);
  if (auto dup = find_near_duplicate(points)) {
    throw GeometryError("duplicate point (points " + std::to_string(dup->first) + " and " +
                        std::to_string(dup->second) + ")");
  }

  const double theta = theta_of_beta(beta);
  const bool use_disks = region == SkeletonRegion::lune && beta.value() > 1.0;

  ProximityGraph graph;
  graph.vertices.assign(points.begin(), points.end());
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool empty = true;
      for (std::size_t k = 0; k < n && empty; ++k) {
        if (k == i || k == j) continue;
        empty = use_disks ? !lune_blocks(points[i], points[j], points[k], beta.value())
                          : !angle_blocks(points[i], points[j], points[k], theta);
      }
      if (empty) graph.edges.insert({i, j});
    }
  }
  return graph;
}

std::string to_json(const ProximityGraph& graph) {
  std::string out = R"({"points":)";
  dump::append_points(out, graph.vertices);
  out += R"(,"edges":[)";
  bool first = true;
  for (const auto& [i, j] : graph.edges) {
    if (!first) out += ',';
    first = false;
    out += '[' + std::to_string(i) + ',' + std::to_string(j) + ']';
  }
  out += "]}";
  return out;
}

}  // namespace geoforge
