// intdist: command-line front end for triple points, enumeration,
// constructions, property suites and SVG rendering.
//
// Exit codes: 0 success, 1 usage or parse error, 2 domain error, 3 bound violation.

#include "intdist/constructions.hpp"
#include "intdist/enumerator.hpp"
#include "intdist/error.hpp"
#include "intdist/json_io.hpp"
#include "intdist/svg.hpp"
#include "intdist/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace intdist;

namespace {

struct Globals {
  std::string field;
  std::string out;
  std::string svg;
  std::uint64_t seed = 1;
  double tol = -1.0;
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::InvalidSpec, "cannot write '" + path + "'");
  f << text;
}

Json input(const Globals& g) {
  if (g.field.empty()) throw Error(ErrorCode::InvalidSpec, "an input file is required (--field FILE)");
  return read_json_file(g.field);
}

SolverOptions solver_options(const Globals& g) {
  SolverOptions opt;
  if (g.tol > 0.0) opt.residual_tol = g.tol;
  return opt;
}

// Box around the sites with a margin of half their extent (at least 1).
Rect default_bbox(const Diagram& d) {
  std::vector<Point> pts;
  for (const WeightedSite& s : d.sites()) pts.push_back(s.point);
  Rect r = d.field().bounding_hint(pts);
  if (d.field().torus() != nullptr) return r;
  const double pad = std::max(1.0, 0.5 * std::max(r.width(), r.height()));
  const Point c = r.center();
  const double half = 0.5 * std::max(r.width(), r.height()) + pad;
  return Rect{c - Point::Constant(half), c + Point::Constant(half)};
}

struct RenderArgs {
  int resolution = 800;
  std::vector<double> bbox;
  bool no_sites = false;
  bool no_rays = false;
  bool grid = false;
};

RenderSpec render_spec(const Diagram& d, const RenderArgs& args) {
  RenderSpec spec;
  spec.resolution = args.resolution;
  spec.bbox = default_bbox(d);
  if (!args.bbox.empty()) spec.bbox = Rect{Point(args.bbox[0], args.bbox[1]), Point(args.bbox[2], args.bbox[3])};
  spec.show.sites = !args.no_sites;
  spec.show.rays = !args.no_rays;
  spec.show.grid = args.grid;
  return spec;
}

void add_render_options(CLI::App* cmd, RenderArgs& args) {
  cmd->add_option("--resolution", args.resolution, "raster resolution in pixels")->check(CLI::Range(16, 8192));
  cmd->add_option("--bbox", args.bbox, "render window: xmin ymin xmax ymax")->expected(4);
  cmd->add_flag("--no-sites", args.no_sites, "omit site markers");
  cmd->add_flag("--no-rays", args.no_rays, "omit degenerate-site rays");
  cmd->add_flag("--grid", args.grid, "draw unit grid lines");
}

int cmd_triple(const Globals& g, const RenderArgs& r) {
  const Diagram d = diagram_from_json(input(g));
  if (d.size() != 3) throw Error(ErrorCode::InvalidSpec, "triple needs exactly three sites");
  const SiteTriple sites{d.sites()[0], d.sites()[1], d.sites()[2]};
  const TriplePointSet found = triple_points(d.field(), sites, solver_options(g));
  write_text(g.out, dump(triple_points_to_json(found)));
  if (!g.svg.empty()) write_text(g.svg, render_svg(d, render_spec(d, r), found.points));
  return 0;
}

int cmd_enumerate(const Globals& g, bool assert_bound, const RenderArgs& r) {
  const TriangleSpec triangle = triangle_from_json(input(g));
  const EnumerationReport report = enumerate_candidates(triangle, solver_options(g), assert_bound);
  write_text(g.out, dump(report_to_json(report)));
  if (!report.within_bound) std::cerr << "warning: candidate count exceeds the bound\n";
  if (!g.svg.empty()) {
    const Diagram d(triangle.field, {WeightedSite{triangle.vertices[0], 0.0}, WeightedSite{triangle.vertices[1], 0.0},
                                     WeightedSite{triangle.vertices[2], 0.0}});
    std::vector<Point> marks;
    for (const Candidate& c : report.integer_points) marks.push_back(c.point);
    write_text(g.svg, render_svg(d, render_spec(d, r), marks));
  }
  return 0;
}

int cmd_render(const Globals& g, const RenderArgs& r) {
  const Diagram d = diagram_from_json(input(g));
  std::vector<Point> marks;
  const bool collinear = d.size() == 3 && d.field().plane() != nullptr &&
                         is_collinear(d.sites()[0].point, d.sites()[1].point, d.sites()[2].point);
  if (d.size() == 3 && !d.field().is_cone() && !collinear) {
    marks = triple_points(d.field(), {d.sites()[0], d.sites()[1], d.sites()[2]}, solver_options(g)).points;
  }
  const std::string svg = render_svg(d, render_spec(d, r), marks);
  write_text(g.svg.empty() ? g.out : g.svg, svg);
  return 0;
}

int cmd_verify(const Globals& g, const std::string& suite, long samples) {
  SuiteOptions opt;
  opt.seed = g.seed;
  opt.samples = samples;
  const SuiteReport report = run_suite(suite, opt);
  write_text(g.out, format_report(report));
  return report.passed() ? 0 : 2;
}

int exit_code(const Error& e) {
  switch (e.code()) {
    case ErrorCode::InvalidSpec: return 1;
    case ErrorCode::BoundViolation: return 3;
    default: return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted Voronoi triple points and integer-distance point sets"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--field", g.field, "input JSON file (diagram, triangle or point set)");
  app.add_option("--out", g.out, "output file (default: standard output)");
  app.add_option("--svg", g.svg, "SVG output file");
  app.add_option("--seed", g.seed, "seed for randomized suites");
  app.add_option("--tol", g.tol, "residual tolerance for the triple-point solver");

  RenderArgs render_args;

  auto* triple = app.add_subcommand("triple", "triple points of a three-site diagram");
  triple->add_option("input", g.field, "diagram JSON");
  add_render_options(triple, render_args);

  bool assert_bound = false;
  auto* enumerate = app.add_subcommand("enumerate", "points at integer-difference distances from a triangle");
  enumerate->add_option("input", g.field, "triangle JSON");
  enumerate->add_flag("--assert-bound", assert_bound, "exit 3 if the candidate bound is exceeded");
  add_render_options(enumerate, render_args);

  auto* render = app.add_subcommand("render", "rasterize a diagram to SVG");
  render->add_option("input", g.field, "diagram JSON");
  add_render_options(render, render_args);

  std::string suite;
  long samples = 0;
  auto* verify = app.add_subcommand("verify", "run a seeded property suite");
  verify->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--samples", samples, "sample count (0: suite default)");

  auto* construct = app.add_subcommand("construct", "integer-distance constructions");
  construct->require_subcommand(1);

  PythagoreanTriple triple_abc;
  int n_points = 4;
  bool center = false, scaled = false, exact = false;
  auto* pyth = construct->add_subcommand("pythagorean", "points q^(2j) on the unit circle");
  pyth->add_option("--a", triple_abc.a, "leg a");
  pyth->add_option("--b", triple_abc.b, "leg b");
  pyth->add_option("--c", triple_abc.c, "hypotenuse c");
  pyth->add_option("--n", n_points, "number of circle points");
  pyth->add_flag("--center", center, "include the circle center");
  pyth->add_flag("--scaled", scaled, "multiply by the common denominator");
  pyth->add_flag("--exact", exact, "emit rational strings");

  int grid_n = 3;
  auto* grid = construct->add_subcommand("grid", "the n x n integer grid");
  grid->add_option("--n", grid_n, "grid side");

  auto* norm_set = construct->add_subcommand("norm-for-set", "strictly convex norm making a point set integral");
  norm_set->add_option("input", g.field, "point-set JSON");

  int cone_k = 10;
  auto* cone = construct->add_subcommand("cone-equilateral", "k unit-equilateral points on the infinite cone");
  cone->add_option("--k", cone_k, "number of points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*triple) return cmd_triple(g, render_args);
    if (*enumerate) return cmd_enumerate(g, assert_bound, render_args);
    if (*render) return cmd_render(g, render_args);
    if (*verify) return cmd_verify(g, suite, samples);
    if (*pyth) {
      const RationalPointSet set = pythagorean_circle_set(triple_abc, n_points, center);
      if (exact) {
        write_text(g.out, dump(rational_set_to_json(set, scaled)));
      } else {
        Json j = point_set_to_json(set.to_doubles(scaled));
        j["scale"] = set.scale.str();
        write_text(g.out, dump(j));
      }
      return 0;
    }
    if (*grid) {
      write_text(g.out, dump(point_set_to_json(grid_set(grid_n))));
      return 0;
    }
    if (*norm_set) {
      const std::vector<Point> pts = point_set_from_json(input(g));
      write_text(g.out, dump(integral_norm_to_json(norm_for_integer_distances(pts))));
      return 0;
    }
    if (*cone) {
      write_text(g.out, dump(cone_points_to_json(cone_equilateral_set(cone_k))));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
