#include "intdist/enumerator.hpp"

#include "intdist/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace intdist {

namespace {

double integer_gap(double d) { return std::abs(d - std::round(d)); }

bool point_less(const Point& a, const Point& b) { return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y()); }

}  // namespace

long candidate_bound(double d12, double d13, int per_diagram) {
  if (!(d12 > 0.0) || !(d13 > 0.0)) {
    throw Error(ErrorCode::NonPositiveDistance, "candidate bound needs positive distances");
  }
  const long f12 = static_cast<long>(std::floor(d12));
  const long f13 = static_cast<long>(std::floor(d13));
  return per_diagram * (2 * f12 + 1) * (2 * f13 + 1);
}

EnumerationReport enumerate_candidates(const TriangleSpec& triangle, const SolverOptions& options,
                                       bool assert_bound) {
  const DistanceField& field = triangle.field;
  const auto& v = triangle.vertices;
  if (field.is_cone()) throw Error(ErrorCode::UnsupportedField, "enumeration runs on planes and tori only");
  if (const auto* np = field.plane(); np != nullptr && !np->norm.strict()) {
    throw Error(ErrorCode::NonStrictNorm, "enumeration needs a strictly convex norm");
  }
  if (field.plane() != nullptr && is_collinear(v[0], v[1], v[2])) {
    throw Error(ErrorCode::CollinearSites, "triangle vertices are collinear");
  }

  const double d12 = field.dist(v[0], v[1]);
  const double d13 = field.dist(v[0], v[2]);
  const double d23 = field.dist(v[1], v[2]);
  const int per_diagram = static_cast<int>(triple_point_cap(field));

  EnumerationReport report{triangle, {}, {}, candidate_bound(d12, d13, per_diagram), 0,
                           std::max({d12, d13, d23})};

  const int r2 = static_cast<int>(std::floor(d12));
  const int r3 = static_cast<int>(std::floor(d13));
  for (int w2 = -r2; w2 <= r2; ++w2) {
    for (int w3 = -r3; w3 <= r3; ++w3) {
      ++report.weight_pairs_swept;
      const SiteTriple sites{WeightedSite{v[0], 0.0}, WeightedSite{v[1], static_cast<double>(w2)},
                             WeightedSite{v[2], static_cast<double>(w3)}};
      const TriplePointSet found = triple_points(field, sites, options);
      for (const Point& p : found.points) {
        report.candidates.push_back(
            Candidate{p, w2, w3, {field.dist(p, v[0]), field.dist(p, v[1]), field.dist(p, v[2])}});
      }
    }
  }

  std::sort(report.candidates.begin(), report.candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.w2 != b.w2) return a.w2 < b.w2;
    if (a.w3 != b.w3) return a.w3 < b.w3;
    return point_less(a.point, b.point);
  });
  for (const Candidate& c : report.candidates) {
    const bool integral = std::all_of(c.distances.begin(), c.distances.end(),
                                      [](double d) { return integer_gap(d) <= kIntegralityTolerance; });
    if (integral) report.integer_points.push_back(c);
  }

  report.within_bound = static_cast<long>(report.candidates.size()) <= report.bound;
  if (assert_bound && !report.within_bound) {
    std::ostringstream os;
    os << report.candidates.size() << " candidates exceed the bound " << report.bound;
    throw Error(ErrorCode::BoundViolation, os.str());
  }
  return report;
}

IntegerDistanceCheck verify_integer_distances(const DistanceField& field, std::span<const Point> points,
                                              double tol) {
  const auto n = static_cast<Eigen::Index>(points.size());
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "integer-distance check needs at least two points");
  IntegerDistanceCheck out{true, Eigen::MatrixXd::Zero(n, n), 0.0};
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double d = field.dist(points[i], points[j]);
      out.matrix(i, j) = out.matrix(j, i) = d;
      const double nearest = std::max(1.0, std::round(d));
      const double gap = std::abs(d - nearest);
      out.worst = std::max(out.worst, gap);
      if (gap > tol) out.ok = false;
    }
  }
  return out;
}

DiameterReport diameter_report(long n, double diameter) {
  return DiameterReport{n, diameter, static_cast<double>(n) / std::max(diameter, 1.0)};
}

DiameterReport check_diameter_bound(const DistanceField& field, std::span<const Point> points) {
  if (!field.is_strict_plane()) throw Error(ErrorCode::NonStrictNorm, "diameter bound applies to strict planes");
  const IntegerDistanceCheck check = verify_integer_distances(field, points);
  if (!check.ok) {
    std::ostringstream os;
    os << "pairwise distances deviate from integers by up to " << check.worst;
    throw Error(ErrorCode::NotIntegerDistanceSet, os.str());
  }
  return diameter_report(static_cast<long>(points.size()), check.matrix.maxCoeff());
}

}  // namespace intdist
