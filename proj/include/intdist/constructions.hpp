#pragma once

// Generators for integer-distance point sets and for a strictly convex norm
// that makes a given point set integral.

#include "intdist/norm.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace intdist {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

struct RationalPoint {
  Rational x;
  Rational y;
};

/// "num/den" (or plain integer) decimal form.
std::string to_string(const Rational& q);
/// Accepts "num/den", integers, and finite decimals such as "-0.28".
Rational parse_rational(const std::string& text);

struct PythagoreanTriple {
  long a = 3;
  long b = 4;
  long c = 5;
};

struct RationalPointSet {
  std::vector<RationalPoint> points;
  /// Exact pairwise Euclidean distances.
  std::vector<std::vector<Rational>> distances;
  /// Least common multiple of the distance denominators.
  BigInt scale = 1;

  std::vector<RationalPoint> scaled_points() const;
  std::vector<Point> to_doubles(bool scaled) const;
};

/// Exact square root of a non-negative rational, if it is a perfect square.
std::optional<Rational> exact_sqrt(const Rational& q);

/// Points q^(2j), j = 0..n-1, with q = (a + bi)/c on the unit circle, plus the
/// origin when include_center is set. Throws Error(NotPythagorean) unless
/// a^2 + b^2 = c^2 with positive sides, Error(InvalidArgument) for n < 1 or
/// for fewer than two points overall.
RationalPointSet pythagorean_circle_set(const PythagoreanTriple& triple, int n, bool include_center);

struct ExactDistanceCheck {
  bool ok = false;
  /// Largest pairwise distance of the scaled set.
  BigInt diameter = 0;
};

/// Integer test for scale * points in exact arithmetic (tolerance 0).
ExactDistanceCheck verify_integer_distances_exact(const RationalPointSet& set);

/// The n x n integer grid {0..n-1}^2. Throws Error(InvalidArgument) for n < 1.
std::vector<Point> grid_set(int n);

/// Two point pairs whose connecting lines have equal slope.
struct ParallelPairs {
  std::array<std::size_t, 2> first;
  std::array<std::size_t, 2> second;
};

/// std::nullopt when all connecting lines have distinct slopes (angles mod pi
/// differing by at least 1e-9). Throws Error(DuplicatePoint) or
/// Error(InvalidArgument) for fewer than two points.
std::optional<ParallelPairs> slope_distinctness_check(std::span<const Point> points);

struct IntegralNorm {
  ArcBody body;
  std::vector<Point> scaled_points;
  IntMatrix target_distances;
  /// Expansion slack used for the direction vectors.
  double epsilon = 0.0;
  double scale = 1.0;
};

/// Builds a strictly convex arc-bounded unit ball under which every pair of
/// the scaled points is at an integer distance: pairwise directions are
/// expanded by distance / floor(distance) and joined by large circular arcs.
/// Throws Error(SlopeCollision) when two connecting lines are parallel and
/// Error(ConstructionFailed) when the required scale exceeds 1e12 or no arc
/// radius keeps the body strictly convex.
IntegralNorm norm_for_integer_distances(std::span<const Point> points);

}  // namespace intdist
