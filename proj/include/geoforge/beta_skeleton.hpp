#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "geoforge/core.hpp"

namespace geoforge {

inline constexpr double kEpsAngle = 1e-9;

// A positive, finite skeleton parameter.
class BetaParameter {
 public:
  explicit BetaParameter(double beta);
  double value() const { return beta_; }

 private:
  double beta_;
};

// Apex angle threshold: asin(1/beta) for beta >= 1, pi - asin(beta) for beta <= 1.
double theta_of_beta(BetaParameter beta);

// Forbidden region around a candidate edge pq.
enum class SkeletonRegion {
  // beta <= 1: points seeing pq at an angle >= theta. beta >= 1: the
  // intersection of the two disks of diameter beta*|pq| through p and q.
  // Gabriel graph at beta = 1, relative neighborhood graph at beta = 2.
  lune,
  // Points seeing pq at an angle >= theta, for every beta (union of two disks
  // once beta > 1).
  circle,
};

struct ProximityGraph {
  std::vector<Point> vertices;
  // Unordered pairs stored as (i, j) with i < j.
  std::set<std::pair<std::size_t, std::size_t>> edges;
};

// O(n^3) brute force. A third point on the boundary of the forbidden region
// (within kEpsAngle / kEpsDist) removes the edge.
ProximityGraph beta_skeleton(std::span<const Point> points, BetaParameter beta,
                             SkeletonRegion region = SkeletonRegion::lune);

// {"points":[[x,y],...],"edges":[[i,j],...]}
std::string to_json(const ProximityGraph& graph);

}  // namespace geoforge
