#include "geoforge/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "geoforge/io.hpp"

namespace geoforge::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string output = "-";
  std::string format = "json";
  double beta = 0.0;
  double delta = 0.0;
  std::size_t directions = kDefaultDirections;
  std::size_t capacity = 1;
  int depth = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::vector<double> bbox;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to a sibling temporary file, then renames it over the target.
void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write output file: " + path);
    f << text;
    f.close();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("cannot write output file: " + path);
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot write output file: " + path);
  }
}

const Polygon& single_polygon(const Scene& scene) {
  if (scene.polygons.size() != 1) {
    throw GeometryError("scene must contain exactly one polygon (found " +
                        std::to_string(scene.polygons.size()) + ")");
  }
  return scene.polygons.front();
}

std::optional<BBox> bbox_option(const Options& o, const Scene& scene) {
  if (o.bbox.empty()) return scene.bbox;
  const BBox box{o.bbox[0], o.bbox[1], o.bbox[2], o.bbox[3]};
  validate_bbox(box);
  return box;
}

BBox frame_of(const Scene& scene) {
  if (scene.bbox) return *scene.bbox;
  const BBox b = bounding_box(scene.points);
  const double pad = 0.05 * std::max({b.width(), b.height(), 1e-9});
  return {b.xmin - pad, b.ymin - pad, b.xmax + pad, b.ymax + pad};
}

void check_ranges(const std::string& cmd, const Options& o) {
  auto fail = [](const std::string& msg) { throw UsageError(msg); };
  if (cmd == "beta-skeleton" && !(o.beta > 0.0 && std::isfinite(o.beta))) {
    fail("--beta must be in (0, inf)");
  }
  if (cmd == "floating-body") {
    if (!(o.delta > 0.0 && o.delta <= 0.5)) fail("--delta must be in (0, 0.5]");
    if (o.directions < 3 || o.directions > 1000000) fail("--directions must be in [3, 1000000]");
  }
  if (cmd == "pr-quadtree" && o.capacity < 1) fail("--capacity must be at least 1");
  if (cmd == "sample" && (o.count < 1 || o.count > 10000000)) {
    fail("--count must be in [1, 10000000]");
  }
  if (cmd == "sierpinski-triangle" && (o.depth < 0 || o.depth > kMaxTriangleDepth)) {
    fail("--depth must be in [0, 12]");
  }
  if (cmd == "sierpinski-carpet" && (o.depth < 0 || o.depth > kMaxCarpetDepth)) {
    fail("--depth must be in [0, 7]");
  }
}

struct Result {
  std::string json;
  Overlay overlay;
};

Result compute(const std::string& cmd, const Options& o, Scene& scene) {
  if (cmd == "quadtree") {
    const auto tree = PointQuadtree::build(scene.points);
    if (tree.empty()) throw GeometryError("empty point set");
    return {to_array(tree), to_overlay(tree, frame_of(scene))};
  }
  if (cmd == "pr-quadtree") {
    const auto tree = PRQuadtree::build(scene.points, bbox_option(o, scene), o.capacity);
    return {to_array(tree), to_overlay(tree)};
  }
  if (cmd == "trapmap") {
    const auto map = TrapezoidalMap::build(scene.segments, bbox_option(o, scene));
    return {to_json(map), to_overlay(map)};
  }
  if (cmd == "onion") {
    const auto onion = onion_decomposition(scene.points);
    return {to_json(onion), to_overlay(onion)};
  }
  if (cmd == "beta-skeleton") {
    const auto graph = beta_skeleton(scene.points, BetaParameter(o.beta));
    return {to_json(graph), to_overlay(graph)};
  }
  if (cmd == "floating-body") {
    const auto fb = dupin_floating_body(single_polygon(scene), AreaFraction(o.delta), o.directions);
    return {to_json(fb), to_overlay(fb)};
  }
  if (cmd == "triangulate") {
    const auto tri = triangulate(single_polygon(scene));
    return {to_json(tri), to_overlay(tri)};
  }
  if (cmd == "sample") {
    const auto tri = triangulate(single_polygon(scene));
    const auto pts = sample_points(tri, SampleRequest(o.count, o.seed));
    return {to_json(tri, pts), to_overlay(tri, pts)};
  }
  if (cmd == "sierpinski-triangle") {
    const auto f = sierpinski_triangle(single_polygon(scene), o.depth);
    return {to_json(f), to_overlay(f)};
  }
  // sierpinski-carpet
  const auto box = bbox_option(o, scene);
  if (!box) throw GeometryError("carpet needs a seed rectangle (--bbox or a scene bbox)");
  if (!scene.bbox) scene.bbox = box;
  const auto f = sierpinski_carpet(*box, o.depth);
  return {to_json(f), to_overlay(f)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Builds geometric structures from a scene file and writes them as JSON, SVG or Ipe XML.",
               "geoforge"};
  app.require_subcommand(1, 1);
  Options o;

  auto add = [&](const std::string& name, const std::string& about, bool needs_input = true) {
    CLI::App* sub = app.add_subcommand(name, about);
    auto* in = sub->add_option("--input", o.input, "Scene file, or - for standard input");
    if (needs_input) in->required();
    sub->add_option("--output", o.output, "Output file, or - for standard output")
        ->capture_default_str();
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "svg", "ipe"}))
        ->capture_default_str();
    return sub;
  };
  auto bbox_flag = [&](CLI::App* sub) {
    sub->add_option("--bbox", o.bbox, "xmin ymin xmax ymax")->expected(4);
  };

  add("quadtree", "Point quadtree over the scene points in input order");
  {
    CLI::App* pr = add("pr-quadtree", "Point-region quadtree over the scene points");
    pr->add_option("--capacity", o.capacity, "Leaf capacity (>= 1)")->capture_default_str();
    bbox_flag(pr);
  }
  bbox_flag(add("trapmap", "Trapezoidal map of the scene segments"));
  add("onion", "Convex layers of the scene points");
  add("beta-skeleton", "Lune-based beta-skeleton of the scene points")
      ->add_option("--beta", o.beta, "Skeleton parameter in (0, inf)")
      ->required();
  {
    CLI::App* fb = add("floating-body", "Dupin and convex floating bodies of the scene polygon");
    fb->add_option("--delta", o.delta, "Cut area fraction in (0, 0.5]")->required();
    fb->add_option("--directions", o.directions, "Number of cut directions")->capture_default_str();
  }
  add("triangulate", "Ear-clipping triangulation of the scene polygon");
  {
    CLI::App* s = add("sample", "Uniform random points in the scene polygon");
    s->add_option("--count", o.count, "Number of samples (>= 1)")->required();
    s->add_option("--seed", o.seed, "64-bit generator seed")->required();
  }
  add("sierpinski-triangle", "Sierpinski triangle on the scene polygon (a triangle)")
      ->add_option("--depth", o.depth, "Recursion depth in [0, 12]")
      ->required();
  {
    CLI::App* c = add("sierpinski-carpet", "Sierpinski carpet on --bbox or the scene bbox", false);
    c->add_option("--depth", o.depth, "Recursion depth in [0, 7]")->required();
    bbox_flag(c);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    CLI::App* target = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    out << target->help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    check_ranges(cmd, o);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    Scene scene = o.input.empty() ? Scene{} : parse_scene(read_input(o.input));
    Result result = compute(cmd, o, scene);
    std::string doc;
    if (o.format == "json") doc = result.json + '\n';
    else if (o.format == "svg") doc = emit_svg(scene, result.overlay);
    else doc = emit_ipe(scene, result.overlay);
    write_output(o.output, doc, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace geoforge::cli
