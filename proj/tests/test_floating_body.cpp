#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "geoforge/floating_body.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace geoforge;

namespace {

const Polygon kUnitSquare({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
constexpr double kPi = std::numbers::pi;

double distance_to_ring(Point p, const std::vector<Point>& ring) {
  double best = INFINITY;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    best = std::min(best, distance_to_segment(p, ring[i], ring[(i + 1) % ring.size()]));
  }
  return best;
}

double min_distance_to_polyline(Point p, const std::vector<Point>& m) {
  return distance_to_ring(p, m);
}

// Symmetric Hausdorff distance between the closed polyline and the polygon
// boundary, sampled at the vertices of each.
double hausdorff(const std::vector<Point>& a, const std::vector<Point>& b) {
  double d = 0.0;
  for (const Point& p : a) d = std::max(d, distance_to_ring(p, b));
  for (const Point& p : b) d = std::max(d, min_distance_to_polyline(p, a));
  return d;
}

}  // namespace

TEST_CASE("area fraction range") {
  CHECK_THROWS_WITH_AS(AreaFraction(0), "delta must be in (0, 0.5]", GeometryError);
  CHECK_THROWS_AS(AreaFraction(0.6), GeometryError);
  CHECK(AreaFraction(0.5).value() == 0.5);
}

TEST_CASE("cutting lines in the unit square") {
  // Normal pointing down: the cap below y = c has area c.
  const Halfplane down = cut_halfplane(kUnitSquare, 3 * kPi / 2, AreaFraction(0.1));
  CHECK(down.ny == doctest::Approx(-1.0));
  CHECK(-down.offset == doctest::Approx(0.1).epsilon(1e-10));
  const Halfplane right = cut_halfplane(kUnitSquare, 0.0, AreaFraction(0.5));
  CHECK(right.offset == doctest::Approx(0.5).epsilon(1e-10));
  CHECK_THROWS_AS(cut_halfplane(Polygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}), 0,
                                AreaFraction(0.1)),
                  GeometryError);
}

TEST_CASE("chord midpoints") {
  const Point m1 = chord_midpoint(kUnitSquare, Halfplane::from_normal({0, -1}, -0.1));
  CHECK(m1.x == doctest::Approx(0.5));
  CHECK(m1.y == doctest::Approx(0.1));
  const Point m2 = chord_midpoint(kUnitSquare, Halfplane::from_normal({1, 0}, 0.5));
  CHECK(m2.x == doctest::Approx(0.5));
  CHECK(m2.y == doctest::Approx(0.5));
  const Polygon tri({{0, 0}, {1, 0}, {0, 1}});
  const Point m3 = chord_midpoint(tri, Halfplane::from_normal({1, 0}, 0.5));
  CHECK(m3.x == doctest::Approx(0.5));
  CHECK(m3.y == doctest::Approx(0.25));
  CHECK_THROWS_WITH_AS(chord_midpoint(kUnitSquare, Halfplane::from_normal({1, 0}, 2)),
                       "line does not cut polygon", GeometryError);
  CHECK_THROWS_AS(chord_midpoint(kUnitSquare, Halfplane::from_normal({1, 0}, 1)), GeometryError);
}

TEST_CASE("cap areas on random convex polygons") {
  std::mt19937_64 rng(123);
  for (int t = 0; t < 100; ++t) {
    const Polygon poly(fixtures::random_convex_ring(rng, 3 + t % 15));
    const double phi = fixtures::uniform(rng, 0, 2 * kPi);
    const Halfplane h = cut_halfplane(poly, phi, AreaFraction(0.2));
    const double area = polygon_area(poly);
    const double cap = oracle::area_beyond(poly.vertices(), {h.nx, h.ny}, h.offset);
    CHECK(std::abs(cap - 0.2 * area) <= 1e-8 * area);
    CHECK(std::abs(cap_area(poly, h) - cap) <= 1e-12 * area);
  }
}

TEST_CASE("unit square at delta = 0.5 collapses to the centre") {
  const auto r = dupin_floating_body(kUnitSquare, AreaFraction(0.5), 64);
  for (const Point& m : r.dupin) {
    CHECK(std::abs(m.x - 0.5) < 1e-6);
    CHECK(std::abs(m.y - 0.5) < 1e-6);
  }
  CHECK_FALSE(r.convex_fb.has_value());
  CHECK(to_json(r).find(R"("convex_fb":null)") != std::string::npos);
}

TEST_CASE("unit square at delta = 0.1") {
  const auto r = dupin_floating_body(kUnitSquare, AreaFraction(0.1));
  REQUIRE(r.dupin.size() == 720);
  // Axis directions are k = 0, 180, 360, 540.
  const Point expected[] = {{0.9, 0.5}, {0.5, 0.9}, {0.1, 0.5}, {0.5, 0.1}};
  for (int i = 0; i < 4; ++i) {
    const Point m = r.dupin[static_cast<std::size_t>(180 * i)];
    CHECK(std::abs(m.x - expected[i].x) < 1e-6);
    CHECK(std::abs(m.y - expected[i].y) < 1e-6);
  }
  CHECK(r.is_dupin_convex);
  REQUIRE(r.convex_fb);
  CHECK(is_convex(*r.convex_fb));
  for (const Point& m : r.dupin) {
    CHECK(distance_to_ring(m, r.convex_fb->vertices()) <= kEpsDist);
  }
}

TEST_CASE("thin triangle has a non-convex Dupin body") {
  const Polygon thin({{0, 0}, {10, 0}, {0, 1}});
  CHECK_FALSE(dupin_floating_body(thin, AreaFraction(0.45)).is_dupin_convex);
}

TEST_CASE("right triangle midpoints follow the corner hyperbolas") {
  // Toward the right-angle corner the cap is a corner triangle with legs
  // sqrt(delta); away from it the retained corner triangle has legs
  // sqrt(1 - delta). Either way the chord midpoint sits on the diagonal.
  const Polygon tri({{0, 0}, {1, 0}, {0, 1}});
  const double delta = 0.2;
  const auto r = dupin_floating_body(tri, AreaFraction(delta), 720);
  const Point away = r.dupin[90];    // phi = pi/4
  const Point toward = r.dupin[450]; // phi = 5pi/4
  CHECK(away.x == doctest::Approx(std::sqrt(1 - delta) / 2).epsilon(1e-9));
  CHECK(away.y == doctest::Approx(std::sqrt(1 - delta) / 2).epsilon(1e-9));
  CHECK(toward.x == doctest::Approx(std::sqrt(delta) / 2).epsilon(1e-9));
  CHECK(toward.y == doctest::Approx(std::sqrt(delta) / 2).epsilon(1e-9));
  // The arc near the hypotenuse bends away from the body, so no delta
  // gives a convex midpoint curve on a triangle.
  CHECK_FALSE(r.is_dupin_convex);
}

TEST_CASE("floating body invariants on random convex polygons") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 10; ++t) {
    const Polygon poly(fixtures::random_convex_ring(rng, 5 + t));
    const auto small = dupin_floating_body(poly, AreaFraction(0.1), 180);
    const auto large = dupin_floating_body(poly, AreaFraction(0.25), 180);
    REQUIRE(small.convex_fb);
    REQUIRE(large.convex_fb);
    for (const Point& v : large.convex_fb->vertices()) {
      CHECK(point_in_polygon(v, *small.convex_fb) != Location::outside);
    }
    for (const Point& v : small.convex_fb->vertices()) {
      CHECK(point_in_polygon(v, poly) != Location::outside);
    }
    for (const Point& m : small.dupin) CHECK(point_in_polygon(m, poly) == Location::inside);
  }
}

TEST_CASE("discretisation error shrinks with more directions") {
  const Polygon hex({{0, 0}, {2, 0}, {3, 1}, {2, 2.5}, {0.5, 2}, {-0.5, 1}});
  const auto coarse = dupin_floating_body(hex, AreaFraction(0.1), 720);
  const auto fine = dupin_floating_body(hex, AreaFraction(0.1), 2880);
  REQUIRE(coarse.is_dupin_convex);
  REQUIRE(fine.is_dupin_convex);
  const double d_coarse = hausdorff(coarse.dupin, coarse.convex_fb->vertices());
  const double d_fine = hausdorff(fine.dupin, fine.convex_fb->vertices());
  const double diam = distance({2, 2.5}, {0, 0});
  CHECK(d_coarse <= 2 * kPi * diam / 720);
  CHECK(d_fine < d_coarse / 3);
}

TEST_CASE("rigid-motion equivariance") {
  // Rotating by a whole number of direction steps maps sample k to k + 37.
  constexpr std::size_t kDirs = 360;
  const Polygon base({{0, 0}, {3, 0}, {4, 2}, {1, 3}});
  const double th = 2 * kPi * 37 / kDirs;
  const Point shift{5, -2};
  auto move = [&](Point p) {
    return Point{std::cos(th) * p.x - std::sin(th) * p.y + shift.x,
                 std::sin(th) * p.x + std::cos(th) * p.y + shift.y};
  };
  std::vector<Point> moved;
  for (const Point& p : base.vertices()) moved.push_back(move(p));
  const auto a = dupin_floating_body(base, AreaFraction(0.2), kDirs);
  const auto b = dupin_floating_body(Polygon(moved), AreaFraction(0.2), kDirs);
  for (std::size_t k = 0; k < kDirs; ++k) {
    CHECK(distance(move(a.dupin[k]), b.dupin[(k + 37) % kDirs]) < 1e-8);
  }
  REQUIRE(a.convex_fb);
  REQUIRE(b.convex_fb);
  for (const Point& v : a.convex_fb->vertices()) {
    CHECK(distance_to_ring(move(v), b.convex_fb->vertices()) < 1e-8);
  }
  CHECK(a.is_dupin_convex == b.is_dupin_convex);
}
