#include "geoforge/floating_body.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "geoforge/dump.hpp"

namespace geoforge {

AreaFraction::AreaFraction(double delta) : delta_(delta) {
  if (!(delta > 0.0 && delta <= 0.5)) throw GeometryError("delta must be in (0, 0.5]");
}

namespace {

void require_convex(const Polygon& poly) {
  if (!is_convex(poly)) throw GeometryError("floating body requires convex polygon");
}

// Area of ring ∩ h without the zero-area cutoff of clip_convex_ring, so that
// tiny caps still measure correctly.
double clipped_area(std::span<const Point> ring, const Halfplane& h) {
  double area2 = 0.0;
  Point first{};
  Point prev{};
  bool started = false;
  auto emit = [&](Point p) {
    if (!started) {
      first = p;
      started = true;
    } else {
      area2 += cross(prev, p);
    }
    prev = p;
  };
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point cur = ring[i];
    const Point next = ring[(i + 1) % n];
    const double fc = h.evaluate(cur);
    const double fn = h.evaluate(next);
    if (fc <= 0.0) emit(cur);
    if ((fc < 0.0 && fn > 0.0) || (fc > 0.0 && fn < 0.0)) emit(cur + (fc / (fc - fn)) * (next - cur));
  }
  if (!started) return 0.0;
  area2 += cross(prev, first);
  return 0.5 * std::abs(area2);
}

double diameter(const Polygon& poly) {
  double best = 0.0;
  for (const Point& a : poly.vertices()) {
    for (const Point& b : poly.vertices()) best = std::max(best, distance(a, b));
  }
  return best;
}

}  // namespace

double cap_area(const Polygon& poly, const Halfplane& h) {
  return clipped_area(poly.vertices(), h.complement());
}

Halfplane cut_halfplane(const Polygon& poly, double phi, AreaFraction delta) {
  require_convex(poly);
  if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi)) {
    throw GeometryError("direction angle must be in [0, 2pi)");
  }
  const Point n{std::cos(phi), std::sin(phi)};
  double lo = INFINITY;
  double hi = -INFINITY;
  for (const Point& v : poly.vertices()) {
    lo = std::min(lo, dot(n, v));
    hi = std::max(hi, dot(n, v));
  }
  const double target = delta.value() * polygon_area(poly);
  const double stop = 1e-12 * diameter(poly);
  // cap area falls monotonically from the full area at lo to zero at hi.
  for (int iter = 0; iter < 200 && hi - lo >= stop; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double area = cap_area(poly, Halfplane{n.x, n.y, mid});
    if (area == target) {
      lo = hi = mid;
      break;
    }
    if (area > target) lo = mid;
    else hi = mid;
  }
  return Halfplane{n.x, n.y, 0.5 * (lo + hi)};
}

Point chord_midpoint(const Polygon& poly, const Halfplane& h) {
  const auto& vs = poly.vertices();
  const std::size_t n = vs.size();
  const Point tangent{-h.ny, h.nx};
  double tmin = INFINITY;
  double tmax = -INFINITY;
  Point pmin{};
  Point pmax{};
  auto take = [&](Point p) {
    const double t = dot(tangent, p);
    if (t < tmin) {
      tmin = t;
      pmin = p;
    }
    if (t > tmax) {
      tmax = t;
      pmax = p;
    }
  };
  bool below = false;
  bool above = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = vs[i];
    const Point b = vs[(i + 1) % n];
    const double fa = h.evaluate(a);
    const double fb = h.evaluate(b);
    below = below || fa < -kEpsDist;
    above = above || fa > kEpsDist;
    if (fa == 0.0) take(a);
    if ((fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0)) take(a + (fa / (fa - fb)) * (b - a));
  }
  if (!below || !above || !(tmax - tmin > kEpsDist)) {
    throw GeometryError("line does not cut polygon");
  }
  return 0.5 * (pmin + pmax);
}

FloatingBodyResult dupin_floating_body(const Polygon& poly, AreaFraction delta,
                                       std::size_t directions) {
  require_convex(poly);
  if (directions < 3) throw GeometryError("need at least 3 directions");

  FloatingBodyResult result;
  result.delta = delta.value();
  result.dupin.reserve(directions);
  result.cuts.reserve(directions);
  for (std::size_t k = 0; k < directions; ++k) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(k) /
                       static_cast<double>(directions);
    const Halfplane h = cut_halfplane(poly, phi, delta);
    result.cuts.push_back(h);
    result.dupin.push_back(chord_midpoint(poly, h));
  }

  std::vector<Point> ring = poly.vertices();
  for (const Halfplane& h : result.cuts) {
    ring = clip_convex_ring(ring, h);
    if (ring.empty()) break;
  }
  if (!ring.empty()) result.convex_fb = Polygon::trusted(std::move(ring));

  const auto& m = result.dupin;
  result.is_dupin_convex = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const Point a = m[i];
    const Point b = m[(i + 1) % m.size()];
    const Point c = m[(i + 2) % m.size()];
    if (cross(b - a, c - b) < -kEpsArea) {
      result.is_dupin_convex = false;
      break;
    }
  }
  return result;
}

std::string to_json(const FloatingBodyResult& result) {
  std::string out = R"({"delta":)";
  dump::append_number(out, result.delta);
  out += R"(,"dupin":)";
  dump::append_points(out, result.dupin);
  out += R"(,"convex_fb":)";
  if (result.convex_fb) dump::append_points(out, result.convex_fb->vertices());
  else out += "null";
  out += R"(,"is_dupin_convex":)";
  out += result.is_dupin_convex ? "true" : "false";
  out += '}';
  return out;
}

}  // namespace geoforge
