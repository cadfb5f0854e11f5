#include <doctest.h>

#include <random>

#include "geoforge/triangulation.hpp"
#include "support/fixtures.hpp"

using namespace geoforge;

namespace {

double area_sum(const Triangulation& tri) {
  double s = 0.0;
  for (std::size_t k = 0; k < tri.triangles.size(); ++k) s += triangle_area(tri, k);
  return s;
}

bool strictly_inside(Point p, Point a, Point b, Point c) {
  return cross(b - a, p - a) > 0 && cross(c - b, p - b) > 0 && cross(a - c, p - c) > 0;
}

const Polygon kUnitSquare({{0, 0}, {1, 0}, {1, 1}, {0, 1}});

}  // namespace

TEST_CASE("triangle is its own triangulation") {
  const Polygon t({{0, 0}, {1, 0}, {0, 1}});
  const auto tri = triangulate(t);
  REQUIRE(tri.triangles.size() == 1);
  CHECK(tri.triangles[0] == std::array<std::size_t, 3>{0, 1, 2});
}

TEST_CASE("convex quadrilateral") {
  const Polygon q({{0, 0}, {2, 0}, {2, 1}, {0, 1}});
  const auto tri = triangulate(q);
  CHECK(tri.triangles.size() == 2);
  CHECK(area_sum(tri) == doctest::Approx(2.0));
  // Lowest index first: vertex 0 is an ear.
  CHECK(tri.triangles[0] == std::array<std::size_t, 3>{3, 0, 1});
}

TEST_CASE("reflex vertex is never clipped") {
  // Arrow shape; vertex 3 is reflex.
  const Polygon arrow({{0, 0}, {4, 0}, {4, 4}, {2, 1}, {0, 4}});
  const auto tri = triangulate(arrow);
  CHECK(tri.triangles.size() == 3);
  CHECK(area_sum(tri) == doctest::Approx(polygon_area(arrow)).epsilon(1e-12));
  for (std::size_t k = 0; k < tri.triangles.size(); ++k) {
    // The last triangle is what remains, not a clipped ear.
    if (k + 1 < tri.triangles.size()) CHECK(tri.triangles[k][1] != 3);
    CHECK(triangle_area(tri, k) > 0.0);
  }
}

TEST_CASE("collinear runs are clipped as zero-area ears") {
  const Polygon p({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {3, 1}, {0, 1}});
  const auto tri = triangulate(p);
  CHECK(tri.triangles.size() == 4);
  CHECK(area_sum(tri) == doctest::Approx(3.0).epsilon(1e-12));
  for (std::size_t k = 0; k < tri.triangles.size(); ++k) CHECK(triangle_area(tri, k) >= 0.0);
}

TEST_CASE("random simple 30-gons: count, area and coverage") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const Polygon poly(fixtures::random_simple_polygon(rng, 30));
    const auto tri = triangulate(poly);
    REQUIRE(tri.triangles.size() == 28);
    CHECK(std::abs(area_sum(tri) - polygon_area(poly)) <= 1e-9 * polygon_area(poly));
    const auto& vs = poly.vertices();
    int probes = 0;
    while (probes < 200) {
      const Point p{fixtures::uniform(rng), fixtures::uniform(rng)};
      if (point_in_polygon(p, poly) != Location::inside) continue;
      ++probes;
      int hits = 0;
      for (const auto& t : tri.triangles) hits += strictly_inside(p, vs[t[0]], vs[t[1]], vs[t[2]]);
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("barycentric hook") {
  const Point a{1, 2}, b{5, 2}, c{1, 6};
  CHECK(barycentric_point(a, b, c, 0, 0) == a);
  CHECK(barycentric_point(a, b, c, 1, 0) == b);
  CHECK(barycentric_point(a, b, c, 0, 1) == c);
  // Folding reflects the far half of the parallelogram back into the triangle.
  const Point f = barycentric_point(a, b, c, 0.75, 0.5);
  CHECK(f.x == doctest::Approx(2.0));
  CHECK(f.y == doctest::Approx(4.0));
  CHECK(unit_draw(0) == 0.0);
  CHECK(unit_draw(~std::uint64_t{0}) < 1.0);
}

TEST_CASE("sample request validation") {
  CHECK_THROWS_AS(SampleRequest(0, 1), GeometryError);
  CHECK_NOTHROW(SampleRequest(1, 0));
}

TEST_CASE("unit square quadrant counts") {
  const auto tri = triangulate(kUnitSquare);
  for (std::uint64_t seed : {1ull, 7ull, 123456789ull}) {
    const auto pts = sample_points(tri, SampleRequest(10000, seed));
    REQUIRE(pts.size() == 10000);
    int q[4] = {0, 0, 0, 0};
    for (const Point& p : pts) {
      CHECK(point_in_polygon(p, kUnitSquare) != Location::outside);
      q[(p.x >= 0.5 ? 1 : 0) + (p.y >= 0.5 ? 2 : 0)]++;
    }
    for (int c : q) CHECK(std::abs(c - 2500) <= 150);
  }
}

TEST_CASE("L-shaped hexagon cells are area weighted") {
  const Polygon ell({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
  const auto pts = sample_points(triangulate(ell), SampleRequest(10000, 99));
  int cells[3] = {0, 0, 0};
  for (const Point& p : pts) {
    CHECK(point_in_polygon(p, ell) != Location::outside);
    if (p.y < 1 && p.x < 1) ++cells[0];
    else if (p.y < 1) ++cells[1];
    else ++cells[2];
  }
  for (int c : cells) CHECK(std::abs(c - 3333) <= 180);
}

TEST_CASE("sub-rectangle hit fraction within 4 sigma") {
  const Polygon ell({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
  const std::size_t n = 100000;
  const auto pts = sample_points(triangulate(ell), SampleRequest(n, 5));
  const BBox r{0.2, 0.3, 1.7, 0.9};
  const double p = r.area() / 3.0;
  std::size_t hits = 0;
  for (const Point& q : pts) hits += r.contains(q);
  const double sigma = std::sqrt(static_cast<double>(n) * p * (1 - p));
  CHECK(std::abs(static_cast<double>(hits) - static_cast<double>(n) * p) <= 4 * sigma);
}

TEST_CASE("samples are reproducible and pinned") {
  const auto tri = triangulate(kUnitSquare);
  const auto a = sample_points(tri, SampleRequest(50, 42));
  const auto b = sample_points(tri, SampleRequest(50, 42));
  CHECK(a == b);
  CHECK(sample_points(tri, SampleRequest(50, 43)) != a);
  // A prefix of a longer run equals the shorter run.
  const auto c = sample_points(tri, SampleRequest(80, 42));
  CHECK(std::equal(a.begin(), a.end(), c.begin()));
}

TEST_CASE("dump") {
  const auto tri = triangulate(Polygon({{0, 0}, {1, 0}, {0, 1}}));
  const std::vector<Point> s{{0.25, 0.5}};
  CHECK(to_json(tri, s) == R"({"triangles":[[0,1,2]],"samples":[[0.25,0.5]]})");
  CHECK(to_json(tri) == R"({"triangles":[[0,1,2]],"samples":[]})");
}
