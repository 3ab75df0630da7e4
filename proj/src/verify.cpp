#include "intdist/verify.hpp"

#include "intdist/constructions.hpp"
#include "intdist/enumerator.hpp"
#include "intdist/error.hpp"
#include "intdist/voronoi.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

namespace intdist {

namespace {

const Rect kBox{Point(-5.0, -5.0), Point(5.0, 5.0)};

PropertyResult named(std::string name) {
  PropertyResult r;
  r.name = std::move(name);
  return r;
}

void record(PropertyResult& r, bool ok, const std::string& what = {}) {
  ++r.checked;
  if (!ok) {
    ++r.failures;
    r.passed = false;
    if (r.detail.empty()) r.detail = what;
  }
}

NormSpec random_strict_norm(Rng& rng) { return NormSpec::lp(rng.uniform(1.2, 8.0)); }

Diagram random_diagram(Rng& rng) {
  const std::size_t n = 1 + rng.index(5);
  std::vector<WeightedSite> sites;
  while (sites.size() < n) {
    const Point p = rng.point_in(kBox);
    const bool apart = std::all_of(sites.begin(), sites.end(), [&](const auto& s) { return (s.point - p).norm() > 0.1; });
    if (apart) sites.push_back({p, rng.uniform(-2.0, 2.0)});
  }
  return Diagram(random_strict_norm(rng), std::move(sites));
}

std::string point_text(const Point& p) {
  std::ostringstream os;
  os.precision(12);
  os << "(" << p.x() << ", " << p.y() << ")";
  return os.str();
}

// Weights for a triple with w1 = 0 satisfying |w_i - w_j| < d(s_i, s_j).
void random_weights(Rng& rng, const DistanceField& field, SiteTriple& sites) {
  const double d12 = field.dist(sites[0].point, sites[1].point);
  const double d13 = field.dist(sites[0].point, sites[2].point);
  const double d23 = field.dist(sites[1].point, sites[2].point);
  sites[0].weight = 0.0;
  do {
    sites[1].weight = rng.uniform(-d12, d12);
    sites[2].weight = rng.uniform(-d13, d13);
  } while (std::abs(sites[1].weight - sites[2].weight) >= d23);
}

PropertyResult star(const SuiteOptions& opt) {
  Rng rng(opt.seed);
  PropertyResult r = named("star-shaped cells");
  const long diagrams = opt.samples > 0 ? opt.samples : 400;
  for (long k = 0; k < diagrams; ++k) {
    const Diagram d = random_diagram(rng);
    const Point p = rng.point_in(Rect{Point(-10.0, -10.0), Point(10.0, 10.0)});
    for (std::size_t i : owners(d, p)) {
      for (int s = 0; s < 50; ++s) {
        const double t = rng.unit();
        const Point q = p + t * (d.sites()[i].point - p);
        const auto o = owners(d, q);
        record(r, std::find(o.begin(), o.end(), i) != o.end(), "site lost ownership at " + point_text(q));
      }
    }
  }
  return r;
}

std::vector<PropertyResult> lipschitz(const SuiteOptions& opt) {
  Rng rng(opt.seed);
  const long triples = opt.samples > 0 ? opt.samples : 10000;
  const HexagonalTorus hex = hexagonal_torus(1.0);
  std::vector<DistanceField> fields{NormSpec::euclidean(), NormSpec::l1(), NormSpec::linf(), FlatTorus({1, 0}, {0, 1}),
                                    hex.torus, InfiniteCone{}};
  PropertyResult lip = named("lipschitz |d(p,q) - d(p,r)| <= d(q,r)");
  PropertyResult col = named("collinear equality d(p,r) = d(p,q) + d(q,r)");
  for (long k = 0; k < triples; ++k) {
    const bool random_lp = k % 7 == 6;
    const DistanceField field = random_lp ? DistanceField(random_strict_norm(rng)) : fields[k % 7 % fields.size()];
    const bool cone = field.is_cone();
    const Rect box = cone ? Rect{Point(0.05, -10.0), Point(3.0, 10.0)} : kBox;
    const Point p = rng.point_in(box), q = rng.point_in(box), s = rng.point_in(box);
    const double gap = std::abs(field.dist(p, q) - field.dist(p, s)) - field.dist(q, s);
    record(lip, gap <= 1e-12, "violated by " + std::to_string(gap));
    if (field.plane() != nullptr) {
      const Point mid = p + rng.unit() * (s - p);
      const double err = std::abs(field.dist(p, s) - field.dist(p, mid) - field.dist(mid, s));
      record(col, err <= 1e-12 * std::max(1.0, field.dist(p, s)), "collinear mismatch " + std::to_string(err));
    }
  }
  return {lip, col};
}

std::vector<PropertyResult> non_overlap(const SuiteOptions& opt) {
  Rng rng(opt.seed);
  const long diagrams = opt.samples > 0 ? opt.samples : 400;
  PropertyResult single = named("interior points have a single owner");
  PropertyResult interior = named("non-degenerate sites are interior to their cells");
  for (long k = 0; k < diagrams; ++k) {
    const Diagram d = random_diagram(rng);
    const std::vector<SiteClass> classes = classify_sites(d);
    for (int s = 0; s < 50; ++s) {
      const Point p = rng.point_in(Rect{Point(-10.0, -10.0), Point(10.0, 10.0)});
      std::vector<std::pair<double, std::size_t>> wd;
      for (std::size_t i = 0; i < d.size(); ++i) wd.emplace_back(weighted_distance(d, i, p), i);
      std::sort(wd.begin(), wd.end());
      const std::size_t best = wd[0].second;
      const bool strictly_inside = wd.size() == 1 || wd[1].first - wd[0].first > 10.0 * kOwnerTolerance;
      if (!strictly_inside || classes[best].kind != SiteClass::Kind::NonDegenerate) continue;
      const auto o = owners(d, p);
      record(single, o.size() == 1 && o[0] == best, "shared interior point " + point_text(p));
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (classes[i].kind != SiteClass::Kind::NonDegenerate) continue;
      // Radius well inside the smallest weighted-distance gap at the site.
      double gap = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < d.size(); ++j) {
        if (j != i) gap = std::min(gap, weighted_distance(d, j, d.sites()[i].point) - weighted_distance(d, i, d.sites()[i].point));
      }
      const double radius = std::isfinite(gap) ? 0.25 * gap * d.field().plane()->norm.min_radial() : 1.0;
      for (int s = 0; s < 8; ++s) {
        const Point q = d.sites()[i].point + radius * rng.unit() * unit_direction(kTwoPi * rng.unit());
        const auto o = owners(d, q);
        record(interior, o.size() == 1 && o[0] == i, "site not interior at " + point_text(q));
      }
    }
  }
  return {single, interior};
}

std::vector<PropertyResult> triple_cap(const SuiteOptions& opt) {
  Rng rng(opt.seed);
  const long instances = opt.samples > 0 ? opt.samples : 1000;
  PropertyResult cap = named("at most 2 triple points per strict-norm diagram");
  PropertyResult resid = named("triple-point residuals below 1e-9");
  PropertyResult oracle = named("solver matches grid-scan oracle (count and location)");
  for (long k = 0; k < instances; ++k) {
    const TripleInstance inst = random_triple_instance(rng);
    TriplePointSet found;
    try {
      found = triple_points(inst.field, inst.sites);
    } catch (const Error& e) {
      record(cap, false, "instance " + std::to_string(k) + ": " + e.what());
      continue;
    }
    record(cap, found.points.size() <= 2, "instance " + std::to_string(k));
    for (double res : found.residuals) record(resid, res < 1e-9, "residual " + std::to_string(res));
    if (opt.oracle && k < opt.oracle_checks) {
      const std::vector<Point> ref = opt.oracle(inst.field, inst.sites);
      bool ok = ref.size() == found.points.size();
      for (const Point& q : ref) {
        ok = ok && std::any_of(found.points.begin(), found.points.end(),
                               [&](const Point& p) { return (p - q).norm() <= opt.oracle_match; });
      }
      std::ostringstream os;
      os << "instance " << k << ": oracle " << ref.size() << " points, solver " << found.points.size();
      record(oracle, ok, os.str());
    }
  }
  std::vector<PropertyResult> out{cap, resid};
  if (opt.oracle) out.push_back(oracle);
  return out;
}

std::vector<PropertyResult> torus_cap(const SuiteOptions& opt) {
  Rng rng(opt.seed);
  const long instances = opt.samples > 0 ? opt.samples : 200;
  const HexagonalTorus hex = hexagonal_torus(1.0);
  const FlatTorus square({1.0, 0.0}, {0.0, 1.0});
  PropertyResult cap = named("at most 6 triple points per flat-torus diagram");
  PropertyResult k36 = named("hexagonal torus: 6 points equidistant from center and vertex classes");
  for (long k = 0; k < instances; ++k) {
    const FlatTorus& torus = k % 2 == 0 ? square : hex.torus;
    const DistanceField field(torus);
    SiteTriple sites;
    for (;;) {
      for (auto& s : sites) s.point = torus.from_coordinates(Eigen::Vector2d(rng.unit(), rng.unit()));
      if (field.dist(sites[0].point, sites[1].point) > 0.05 && field.dist(sites[0].point, sites[2].point) > 0.05 &&
          field.dist(sites[1].point, sites[2].point) > 0.05) {
        break;
      }
    }
    random_weights(rng, field, sites);
    try {
      const TriplePointSet found = triple_points(field, sites);
      record(cap, found.points.size() <= triple_point_cap(field) && found.points.size() <= 6,
             "instance " + std::to_string(k));
    } catch (const Error& e) {
      record(cap, false, "instance " + std::to_string(k) + ": " + e.what());
    }
  }
  const TriplePointSet hex_points =
      triple_points(hex.torus, {WeightedSite{hex.center, 0.0}, WeightedSite{hex.vclass1, 0.0},
                                WeightedSite{hex.vclass2, 0.0}});
  const bool residuals_ok =
      std::all_of(hex_points.residuals.begin(), hex_points.residuals.end(), [](double r) { return r < 1e-9; });
  record(k36, hex_points.points.size() == 6 && residuals_ok &&
                  static_cast<int>(hex_points.points.size()) == max_equidistant_bound(FlatTorus::kEulerGenus),
         std::to_string(hex_points.points.size()) + " points");
  return {cap, k36};
}

std::vector<PropertyResult> cone(const SuiteOptions& opt) {
  Rng rng(opt.seed);
  const long triples = opt.samples > 0 ? opt.samples : 10000;
  PropertyResult unit = named("10 points (1/2, i*pi) pairwise at distance 1");
  const std::vector<ConePoint> pts = cone_equilateral_set(10);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double d = cone_distance(pts[i], pts[j]);
      record(unit, std::abs(d - 1.0) <= 1e-12, "distance " + std::to_string(d));
    }
  }
  PropertyResult tri = named("cone triangle inequality");
  PropertyResult seam = named("branches agree at |dtheta| = pi");
  for (long k = 0; k < triples; ++k) {
    auto sample = [&rng] { return ConePoint{rng.uniform(0.01, 3.0), rng.uniform(-12.0, 12.0)}; };
    const ConePoint a = sample(), b = sample(), c = sample();
    const double gap = cone_distance(a, c) - cone_distance(a, b) - cone_distance(b, c);
    record(tri, gap <= 1e-12, "violated by " + std::to_string(gap));
    if (k % 10 == 0) {
      const ConePoint q{b.r, a.theta + kPi};
      const double cosine = std::sqrt(a.r * a.r + q.r * q.r - 2.0 * a.r * q.r * std::cos(kPi));
      record(seam, std::abs(cone_distance(a, q) - cosine) <= 1e-12 && std::abs(cosine - (a.r + q.r)) <= 1e-12,
             "seam mismatch");
    }
  }
  return {unit, tri, seam};
}

std::vector<PropertyResult> constructions(const SuiteOptions& opt) {
  PropertyResult pyth = named("Pythagorean circle sets are exactly integral after scaling");
  PropertyResult grid = named("grid sets have integer L1 distances");
  PropertyResult norm = named("constructed norms are strict and realise the integer targets");
  PropertyResult diam = named("n <= 10 * max(D, 1) on integer-distance sets");
  for (const PythagoreanTriple t : {PythagoreanTriple{3, 4, 5}, PythagoreanTriple{5, 12, 13}, PythagoreanTriple{8, 15, 17}}) {
    for (int n = 1; n <= 6; ++n) {
      for (bool center : {false, true}) {
        if (n + (center ? 1 : 0) < 2) continue;
        const RationalPointSet set = pythagorean_circle_set(t, n, center);
        const ExactDistanceCheck check = verify_integer_distances_exact(set);
        record(pyth, check.ok, "triple " + std::to_string(t.a) + "," + std::to_string(t.b) + " n=" + std::to_string(n));
        if (!check.ok) continue;
        // Floating-point route through the distance checker as well.
        const std::vector<Point> scaled = set.to_doubles(true);
        const DiameterReport rep = check_diameter_bound(DistanceField::euclidean(), scaled);
        const auto exact_d = static_cast<double>(check.diameter);
        record(diam, std::abs(rep.diameter - exact_d) <= 1e-9 * exact_d && static_cast<double>(rep.n) <= 10.0 * std::max(rep.diameter, 1.0),
               "pythagorean diameter");
      }
    }
  }
  for (int n = 2; n <= 6; ++n) {
    const std::vector<Point> pts = grid_set(n);
    record(grid, verify_integer_distances(NormSpec::l1(), pts, 0.0).ok, "grid " + std::to_string(n));
  }

  Rng rng(opt.seed);
  std::vector<std::vector<Point>> inputs{{{0.0, 0.0}, {1.0, 0.0}, {0.0, 2.0}}};
  for (int set = 0; set < 3; ++set) {
    for (;;) {
      std::vector<Point> pts;
      for (int k = 0; k < 4; ++k) pts.push_back(rng.point_in(Rect{Point(0.0, 0.0), Point(4.0, 4.0)}));
      bool general = !slope_distinctness_check(pts).has_value();
      for (int a = 0; a < 4 && general; ++a) {
        for (int b = a + 1; b < 4; ++b) general = general && (pts[a] - pts[b]).norm() > 0.2;
      }
      if (general) {
        inputs.push_back(pts);
        break;
      }
    }
  }
  for (const auto& pts : inputs) {
    try {
      const IntegralNorm result = norm_for_integer_distances(pts);
      const NormSpec spec = NormSpec::arcs(result.body);
      bool ok = strict_convexity_margin(spec) > 0.0;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
          const double d = distance(spec, result.scaled_points[i], result.scaled_points[j]);
          const auto target = static_cast<double>(result.target_distances(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
          ok = ok && std::abs(d - target) <= 1e-6;
        }
      }
      record(norm, ok, std::to_string(pts.size()) + "-point set");
      const DiameterReport rep = check_diameter_bound(spec, result.scaled_points);
      record(diam, static_cast<double>(rep.n) <= 10.0 * std::max(rep.diameter, 1.0), "constructed-norm diameter");
    } catch (const Error& e) {
      record(norm, false, e.what());
    }
  }
  return {pyth, grid, norm, diam};
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"star", "lipschitz", "non-overlap", "triple-cap",
                                              "torus-cap", "cone", "constructions"};
  return names;
}

TripleInstance random_triple_instance(Rng& rng) {
  const DistanceField field(random_strict_norm(rng));
  SiteTriple sites;
  do {
    for (auto& s : sites) s.point = rng.point_in(kBox);
  } while (is_collinear(sites[0].point, sites[1].point, sites[2].point) ||
           std::min({(sites[0].point - sites[1].point).norm(), (sites[0].point - sites[2].point).norm(),
                     (sites[1].point - sites[2].point).norm()}) < 0.1);
  random_weights(rng, field, sites);
  return {field, sites};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report{name, {}, 0.0};
  if (name == "star") {
    report.properties = {star(options)};
  } else if (name == "lipschitz") {
    report.properties = lipschitz(options);
  } else if (name == "non-overlap") {
    report.properties = non_overlap(options);
  } else if (name == "triple-cap") {
    report.properties = triple_cap(options);
  } else if (name == "torus-cap") {
    report.properties = torus_cap(options);
  } else if (name == "cone") {
    report.properties = cone(options);
  } else if (name == "constructions") {
    report.properties = constructions(options);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string format_report(const SuiteReport& report) {
  std::ostringstream os;
  for (const PropertyResult& p : report.properties) {
    os << (p.passed ? "PASS " : "FAIL ") << report.suite << ": " << p.name << " (" << p.checked << " checked, "
       << p.failures << " failed)";
    if (!p.passed) os << " first failure: " << p.detail;
    os << "\n";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", report.seconds);
  os << (report.passed() ? "PASS " : "FAIL ") << report.suite << " suite in " << buf << " s\n";
  return os.str();
}

}  // namespace intdist
