#pragma once

// Convex distance functions on the plane, described by their unit balls.

#include "intdist/types.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <variant>
#include <vector>

namespace intdist {

/// Largest accepted L_p exponent. Beyond it the ball is numerically
/// indistinguishable from the square L_inf ball.
inline constexpr double kMaxLpExponent = 64.0;

/// Default number of boundary samples for the convexity margin.
inline constexpr std::size_t kMarginSamples = 4096;

/// Margin at or below which a sampled boundary counts as non-strict.
inline constexpr double kMarginTolerance = 1e-9;

template <typename Scalar>
Scalar lp_norm(const Vec2<Scalar>& v, Scalar p) {
  using std::abs;
  using std::pow;
  const Scalar ax = abs(v.x());
  const Scalar ay = abs(v.y());
  const Scalar big = std::max(ax, ay);
  if (big == Scalar(0)) return Scalar(0);
  const Scalar ratio = std::min(ax, ay) / big;
  return big * pow(Scalar(1) + pow(ratio, p), Scalar(1) / p);
}

template <typename Scalar>
Scalar l1_norm(const Vec2<Scalar>& v) {
  using std::abs;
  return abs(v.x()) + abs(v.y());
}

template <typename Scalar>
Scalar linf_norm(const Vec2<Scalar>& v) {
  using std::abs;
  return std::max(abs(v.x()), abs(v.y()));
}

/// One circular arc of an ArcBody boundary, traversed counterclockwise from
/// start_angle to end_angle (angles are parameters on the arc's own circle).
struct Arc {
  Point center{0.0, 0.0};
  double radius = 1.0;
  double start_angle = 0.0;
  double end_angle = 0.0;

  Point start_point() const { return center + radius * unit_direction(start_angle); }
  Point end_point() const { return center + radius * unit_direction(end_angle); }
};

/// Centrally symmetric, strictly convex unit ball bounded by circular arcs.
/// Construction validates every invariant and throws Error(InvalidSpec).
class ArcBody {
 public:
  explicit ArcBody(std::vector<Arc> arcs);

  const std::vector<Arc>& arcs() const { return arcs_; }

  /// Euclidean distance from the origin to the boundary in direction theta.
  double radial(double theta) const;

  /// Index of the arc whose angular span (seen from the origin) holds theta.
  std::size_t arc_index(double theta) const;

 private:
  std::vector<Arc> arcs_;
  // Polar angle of each arc's start point, ascending, paired with arc index.
  std::vector<double> polar_starts_;
  std::vector<std::size_t> polar_order_;
};

struct LpNorm {
  double p = 2.0;
};
struct L1Norm {};
struct LinfNorm {};

using NormVariant = std::variant<LpNorm, L1Norm, LinfNorm, ArcBody>;

/// A centrally symmetric convex unit ball K; defines ||v||_K and d_K.
class NormSpec {
 public:
  static NormSpec lp(double p);
  static NormSpec l1() { return NormSpec(L1Norm{}); }
  static NormSpec linf() { return NormSpec(LinfNorm{}); }
  static NormSpec euclidean() { return lp(2.0); }
  static NormSpec arcs(ArcBody body) { return NormSpec(std::move(body)); }

  /// L_p for 1 < p < inf and every valid ArcBody are strictly convex.
  bool strict() const {
    return std::holds_alternative<LpNorm>(variant_) || std::holds_alternative<ArcBody>(variant_);
  }

  const NormVariant& variant() const { return variant_; }

  /// Smallest and largest boundary radius (the ball lies between the two circles).
  double min_radial() const { return min_radial_; }
  double max_radial() const { return max_radial_; }

 private:
  explicit NormSpec(NormVariant v);

  NormVariant variant_;
  double min_radial_ = 1.0;
  double max_radial_ = 1.0;
};

/// Smallest s >= 0 with v in s*K.
double norm(const NormSpec& spec, const Point& v);

/// d_K(p, q) = ||q - p||_K.
double distance(const NormSpec& spec, const Point& p, const Point& q);

/// Boundary radius rho(theta) > 0.
double radial(const NormSpec& spec, double theta);

/// Sampled strict-convexity margin: the minimum, over consecutive triples of
/// boundary samples, of the middle point's outward sag past the chord of its
/// neighbours divided by the chord length. Exactly 0 for L1 and L_inf.
double strict_convexity_margin(const NormSpec& spec, std::size_t samples = kMarginSamples);

}  // namespace intdist
