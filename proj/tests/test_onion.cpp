#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "geoforge/onion.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace geoforge;

namespace {

std::map<std::pair<double, double>, int> membership(const OnionDecomposition& onion) {
  std::map<std::pair<double, double>, int> out;
  for (std::size_t l = 0; l < onion.layers.size(); ++l) {
    for (const Point& p : onion.layers[l]) out[{p.x, p.y}] = static_cast<int>(l);
  }
  return out;
}

}  // namespace

TEST_CASE("small onions") {
  const std::vector<Point> tri{{0, 0}, {1, 0}, {0, 1}};
  const auto one = onion_decomposition(tri);
  REQUIRE(one.layers.size() == 1);
  CHECK(one.layers[0].size() == 3);

  const std::vector<Point> square{{1, 1}, {0, 0}, {0.5, 0.5}, {1, 0}, {0, 1}};
  const auto two = onion_decomposition(square);
  REQUIRE(two.layers.size() == 2);
  CHECK(two.layers[0] == std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(two.layers[1] == std::vector<Point>{{0.5, 0.5}});
  CHECK(to_json(two) == "[[[0,0],[1,0],[1,1],[0,1]],[[0.5,0.5]]]");
}

TEST_CASE("collinear boundary points leave with their layer") {
  const std::vector<Point> pts{{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 0}, {2, 1}, {1, 1}};
  const auto onion = onion_decomposition(pts);
  REQUIRE(onion.layers.size() == 2);
  CHECK(onion.layers[0] ==
        std::vector<Point>{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {0, 2}});
  CHECK(onion.layers[1] == std::vector<Point>{{1, 1}});
}

TEST_CASE("all-collinear input is a single layer") {
  const std::vector<Point> pts{{3, 3}, {1, 1}, {0, 0}, {2, 2}};
  const auto onion = onion_decomposition(pts);
  REQUIRE(onion.layers.size() == 1);
  CHECK(onion.layers[0] == std::vector<Point>{{0, 0}, {1, 1}, {2, 2}, {3, 3}});
}

TEST_CASE("errors") {
  CHECK_THROWS_WITH_AS(onion_decomposition(std::vector<Point>{}), "empty point set",
                       GeometryError);
  const std::vector<Point> dup{{0, 0}, {1, 0}, {0, 0}};
  CHECK_THROWS_WITH_AS(onion_decomposition(dup), "duplicate point (points 0 and 2)",
                       GeometryError);
}

TEST_CASE("random sets agree with the gift-wrapping oracle") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 10; ++trial) {
    const auto pts = fixtures::random_points(rng, 300);
    const auto onion = onion_decomposition(pts);
    const auto expected = oracle::onion_layers(pts);
    const auto got = membership(onion);
    std::size_t total = 0;
    for (const auto& layer : onion.layers) total += layer.size();
    CHECK(total == pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(got.at({pts[i].x, pts[i].y}) == expected[i]);
    }
    double prev_area = INFINITY;
    for (std::size_t l = 0; l < onion.layers.size(); ++l) {
      const auto& layer = onion.layers[l];
      CHECK(layer.front() == *std::min_element(layer.begin(), layer.end(), lex_less));
      if (layer.size() < 3) continue;
      const double area = 0.5 * signed_area2(layer);
      CHECK(area > 0.0);
      CHECK(area < prev_area);
      prev_area = area;
      // Inner layers lie strictly inside this one.
      const Polygon hull(convex_hull(layer));
      for (std::size_t m = l + 1; m < onion.layers.size(); ++m) {
        for (const Point& p : onion.layers[m]) CHECK(point_in_polygon(p, hull) == Location::inside);
      }
    }
  }
}

TEST_CASE("layer membership is invariant under rotation") {
  std::mt19937_64 rng(55);
  const auto pts = fixtures::random_points(rng, 150);
  const double th = fixtures::uniform(rng, 0, 2 * std::numbers::pi);
  std::vector<Point> turned;
  for (const Point& p : pts) {
    turned.push_back({std::cos(th) * p.x - std::sin(th) * p.y + 3,
                      std::sin(th) * p.x + std::cos(th) * p.y - 1});
  }
  const auto a = membership(onion_decomposition(pts));
  const auto b = membership(onion_decomposition(turned));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(a.at({pts[i].x, pts[i].y}) == b.at({turned[i].x, turned[i].y}));
  }
}
