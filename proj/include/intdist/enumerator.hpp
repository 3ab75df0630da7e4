#pragma once

// Points at integer distance from the three vertices of a triangle, found by
// sweeping integer weight pairs and collecting the triple points of each
// weighted diagram.

#include "intdist/triple_points.hpp"

#include <Eigen/Core>

#include <array>
#include <vector>

namespace intdist {

inline constexpr double kIntegralityTolerance = 1e-6;

/// Three pairwise distinct vertices in a strict plane or on a flat torus.
struct TriangleSpec {
  DistanceField field;
  std::array<Point, 3> vertices;
};

struct Candidate {
  Point point;
  int w2 = 0;
  int w3 = 0;
  std::array<double, 3> distances{};
};

struct EnumerationReport {
  TriangleSpec triangle;
  std::vector<Candidate> candidates;
  std::vector<Candidate> integer_points;
  long bound = 0;
  long weight_pairs_swept = 0;
  /// Largest pairwise vertex distance.
  double diameter = 0.0;
  bool within_bound = true;
};

/// per_diagram * (2*floor(d12) + 1) * (2*floor(d13) + 1); per_diagram is 2 on a
/// strict plane. Throws Error(NonPositiveDistance) unless d12, d13 > 0.
long candidate_bound(double d12, double d13, int per_diagram = 2);

/// Sweeps |w2| <= floor(d12), |w3| <= floor(d13) and collects the triple points
/// of the sites (v1, 0), (v2, w2), (v3, w3). Candidates are sorted by
/// (w2, w3, x, y). Throws Error(CollinearSites), Error(NonStrictNorm), and,
/// when assert_bound is set, Error(BoundViolation) if the candidate count
/// exceeds the bound.
EnumerationReport enumerate_candidates(const TriangleSpec& triangle, const SolverOptions& options = {},
                                       bool assert_bound = true);

struct IntegerDistanceCheck {
  bool ok = false;
  Eigen::MatrixXd matrix;
  /// Largest deviation of an off-diagonal entry from the nearest positive integer.
  double worst = 0.0;
};

/// Pairwise distances and their distance to the nearest positive integer.
/// Throws Error(InvalidArgument) for fewer than two points.
IntegerDistanceCheck verify_integer_distances(const DistanceField& field, std::span<const Point> points,
                                              double tol = kIntegralityTolerance);

struct DiameterReport {
  long n = 0;
  double diameter = 0.0;
  /// n / max(diameter, 1).
  double ratio = 0.0;
};

/// n against the diameter D of an integer-distance set on a strict plane.
/// Throws Error(NotIntegerDistanceSet) if the distances are not integers
/// within kIntegralityTolerance and Error(NonStrictNorm) off strict planes.
DiameterReport check_diameter_bound(const DistanceField& field, std::span<const Point> points);

/// Same report from an already-known distance matrix (exact-arithmetic sets).
DiameterReport diameter_report(long n, double diameter);

}  // namespace intdist
