#include "intdist/json_io.hpp"

#include "intdist/error.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace intdist {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::InvalidSpec, msg); }

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

double number(const Json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return static_cast<double>(parse_rational(j.get<std::string>()));
  bad(std::string(what) + " must be a number");
}

double number_at(const Json& j, const char* key) { return number(field_of(j, key), key); }

Json num(double x) { return Json(round_sig(x)); }

// Arcs stay at full precision so a re-parsed body still passes the
// endpoint continuity check.
Json arc_to_json(const Arc& a) {
  return Json{{"cx", a.center.x()}, {"cy", a.center.y()}, {"r", a.radius}, {"a0", a.start_angle},
              {"a1", a.end_angle}};
}

Json norm_to_json_impl(const NormSpec& spec) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LpNorm>) {
          return Json{{"type", "lp"}, {"p", num(v.p)}};
        } else if constexpr (std::is_same_v<T, L1Norm>) {
          return Json{{"type", "l1"}};
        } else if constexpr (std::is_same_v<T, LinfNorm>) {
          return Json{{"type", "linf"}};
        } else {
          Json arcs = Json::array();
          for (const Arc& a : v.arcs()) arcs.push_back(arc_to_json(a));
          return Json{{"type", "arcs"}, {"arcs", arcs}};
        }
      },
      spec.variant());
}

}  // namespace

double round_sig(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

Json point_to_json(const Point& p) { return Json::array({num(p.x()), num(p.y())}); }

Point point_from_json(const Json& j) {
  if (j.is_array() && j.size() == 2) return {number(j[0], "x"), number(j[1], "y")};
  if (j.is_object()) return {number_at(j, "x"), number_at(j, "y")};
  bad("a point is [x, y] or {\"x\":..,\"y\":..}");
}

Json norm_to_json(const NormSpec& spec) { return norm_to_json_impl(spec); }

NormSpec norm_from_json(const Json& j) {
  const Json& type = field_of(j, "type");
  if (!type.is_string()) bad("norm type must be a string");
  const std::string t = type.get<std::string>();
  if (t == "lp") return NormSpec::lp(number_at(j, "p"));
  if (t == "l1") return NormSpec::l1();
  if (t == "linf") return NormSpec::linf();
  if (t == "arcs") {
    const Json& arcs = field_of(j, "arcs");
    if (!arcs.is_array()) bad("'arcs' must be an array");
    std::vector<Arc> out;
    for (const Json& a : arcs) {
      out.push_back(Arc{{number_at(a, "cx"), number_at(a, "cy")}, number_at(a, "r"), number_at(a, "a0"),
                        number_at(a, "a1")});
    }
    return NormSpec::arcs(ArcBody(std::move(out)));
  }
  bad("unknown norm type '" + t + "'");
}

Json field_to_json(const DistanceField& field) {
  if (const auto* np = field.plane()) return Json{{"type", "norm-plane"}, {"norm", norm_to_json(np->norm)}};
  if (const auto* t = field.torus()) {
    return Json{{"type", "torus"}, {"u", point_to_json(t->u())}, {"v", point_to_json(t->v())}};
  }
  return Json{{"type", "cone"}};
}

DistanceField field_from_json(const Json& j) {
  const Json& type = field_of(j, "type");
  if (!type.is_string()) bad("field type must be a string");
  const std::string t = type.get<std::string>();
  if (t == "norm-plane") return DistanceField(norm_from_json(field_of(j, "norm")));
  if (t == "torus") return DistanceField(FlatTorus(point_from_json(field_of(j, "u")), point_from_json(field_of(j, "v"))));
  if (t == "cone") return DistanceField(InfiniteCone{});
  bad("unknown field type '" + t + "'");
}

Json diagram_to_json(const Diagram& diagram) {
  Json sites = Json::array();
  for (const WeightedSite& s : diagram.sites()) {
    sites.push_back(Json{{"x", num(s.point.x())}, {"y", num(s.point.y())}, {"w", num(s.weight)}});
  }
  return Json{{"field", field_to_json(diagram.field())}, {"sites", sites}};
}

Diagram diagram_from_json(const Json& j) {
  DistanceField field = j.contains("field") ? field_from_json(j.at("field")) : DistanceField::euclidean();
  const Json& sites = field_of(j, "sites");
  if (!sites.is_array()) bad("'sites' must be an array");
  std::vector<WeightedSite> out;
  for (const Json& s : sites) {
    out.push_back(WeightedSite{{number_at(s, "x"), number_at(s, "y")}, s.contains("w") ? number_at(s, "w") : 0.0});
  }
  return Diagram(std::move(field), std::move(out));
}

Json triple_points_to_json(const TriplePointSet& set) {
  Json points = Json::array();
  Json residuals = Json::array();
  for (std::size_t k = 0; k < set.points.size(); ++k) {
    points.push_back(point_to_json(set.points[k]));
    residuals.push_back(num(set.residuals[k]));
  }
  return Json{{"points", points},
              {"residuals", residuals},
              {"solver_stats",
               {{"seeds_tried", set.stats.seeds_tried}, {"newton_iterations", set.stats.newton_iterations}}}};
}

Json triangle_to_json(const TriangleSpec& triangle) {
  Json v = Json::array();
  for (const Point& p : triangle.vertices) v.push_back(point_to_json(p));
  return Json{{"field", field_to_json(triangle.field)}, {"vertices", v}};
}

TriangleSpec triangle_from_json(const Json& j) {
  DistanceField field = j.contains("field") ? field_from_json(j.at("field")) : DistanceField::euclidean();
  std::array<Point, 3> v;
  if (j.contains("vertices")) {
    const Json& arr = j.at("vertices");
    if (!arr.is_array() || arr.size() != 3) bad("'vertices' must hold exactly three points");
    for (std::size_t k = 0; k < 3; ++k) v[k] = point_from_json(arr[k]);
  } else {
    v = {point_from_json(field_of(j, "s1")), point_from_json(field_of(j, "s2")), point_from_json(field_of(j, "s3"))};
  }
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = a + 1; b < 3; ++b) {
      if (!(field.dist(v[a], v[b]) > 1e-9)) throw Error(ErrorCode::DuplicatePoint, "triangle vertices coincide");
    }
  }
  return TriangleSpec{std::move(field), v};
}

Json candidate_to_json(const Candidate& c) {
  return Json{{"w2", c.w2},
              {"w3", c.w3},
              {"x", num(c.point.x())},
              {"y", num(c.point.y())},
              {"d", Json::array({num(c.distances[0]), num(c.distances[1]), num(c.distances[2])})}};
}

Json report_to_json(const EnumerationReport& report) {
  Json candidates = Json::array();
  for (const Candidate& c : report.candidates) candidates.push_back(candidate_to_json(c));
  Json integer_points = Json::array();
  for (const Candidate& c : report.integer_points) integer_points.push_back(candidate_to_json(c));
  return Json{{"triangle", triangle_to_json(report.triangle)},
              {"bound", report.bound},
              {"within_bound", report.within_bound},
              {"weight_pairs_swept", report.weight_pairs_swept},
              {"candidates", candidates},
              {"integer_points", integer_points},
              {"diameter", num(report.diameter)}};
}

Json point_set_to_json(std::span<const Point> points) {
  Json arr = Json::array();
  for (const Point& p : points) arr.push_back(point_to_json(p));
  return Json{{"points", arr}};
}

std::vector<Point> point_set_from_json(const Json& j) {
  const Json& arr = field_of(j, "points");
  if (!arr.is_array()) bad("'points' must be an array");
  std::vector<Point> out;
  for (const Json& p : arr) out.push_back(point_from_json(p));
  return out;
}

Json rational_set_to_json(const RationalPointSet& set, bool scaled) {
  const std::vector<RationalPoint> pts = scaled ? set.scaled_points() : set.points;
  const Rational s = scaled ? Rational(set.scale) : Rational(1);
  Json arr = Json::array();
  for (const RationalPoint& p : pts) arr.push_back(Json::array({to_string(p.x), to_string(p.y)}));
  Json dist = Json::array();
  for (const auto& row : set.distances) {
    Json r = Json::array();
    for (const Rational& d : row) r.push_back(to_string(d * s));
    dist.push_back(r);
  }
  return Json{{"points", arr}, {"distances", dist}, {"scale", set.scale.str()}, {"scaled", scaled}};
}

Json cone_points_to_json(std::span<const ConePoint> points) {
  Json arr = Json::array();
  for (const ConePoint& p : points) arr.push_back(Json{{"r", num(p.r)}, {"theta", num(p.theta)}});
  return Json{{"points", arr}};
}

std::vector<ConePoint> cone_points_from_json(const Json& j) {
  const Json& arr = field_of(j, "points");
  if (!arr.is_array()) bad("'points' must be an array");
  std::vector<ConePoint> out;
  for (const Json& p : arr) out.push_back(ConePoint{number_at(p, "r"), number_at(p, "theta")});
  return out;
}

Json integral_norm_to_json(const IntegralNorm& result) {
  Json targets = Json::array();
  for (Eigen::Index i = 0; i < result.target_distances.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < result.target_distances.cols(); ++k) row.push_back(result.target_distances(i, k));
    targets.push_back(row);
  }
  // Scaled points stay at full precision: the targets are only integral for
  // the exact scaled coordinates.
  Json pts = Json::array();
  for (const Point& p : result.scaled_points) pts.push_back(Json::array({p.x(), p.y()}));
  return Json{{"norm", norm_to_json(NormSpec::arcs(result.body))},
              {"scaled_points", pts},
              {"target_distances", targets},
              {"epsilon", num(result.epsilon)},
              {"scale", result.scale}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    bad("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace intdist
