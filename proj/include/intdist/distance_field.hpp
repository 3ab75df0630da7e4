#pragma once

#include "intdist/norm.hpp"
#include "intdist/surfaces.hpp"

#include <span>
#include <variant>

namespace intdist {

struct NormPlane {
  NormSpec norm;
};

/// Marker for the infinite-angle cone; chart points are (r, theta).
struct InfiniteCone {};

using FieldVariant = std::variant<NormPlane, FlatTorus, InfiniteCone>;

/// A geodesic 2D metric evaluated on chart coordinates: a normed plane, a flat
/// torus, or the infinite-angle cone.
class DistanceField {
 public:
  DistanceField(NormSpec norm) : variant_(NormPlane{std::move(norm)}) {}  // NOLINT
  DistanceField(FlatTorus torus) : variant_(std::move(torus)) {}          // NOLINT
  DistanceField(InfiniteCone cone) : variant_(cone) {}                    // NOLINT

  static DistanceField euclidean() { return DistanceField(NormSpec::euclidean()); }

  double dist(const Point& p, const Point& q) const;

  const FieldVariant& variant() const { return variant_; }

  const NormPlane* plane() const { return std::get_if<NormPlane>(&variant_); }
  const FlatTorus* torus() const { return std::get_if<FlatTorus>(&variant_); }
  bool is_cone() const { return std::holds_alternative<InfiniteCone>(variant_); }

  /// True for a normed plane whose norm is strictly convex.
  bool is_strict_plane() const { return plane() != nullptr && plane()->norm.strict(); }

  /// Chart vector from p to q along a shortest path (lattice-aware on tori).
  Point displacement(const Point& p, const Point& q) const {
    return torus() ? torus()->displacement(p, q) : Point(q - p);
  }

  /// Identical-point test modulo the lattice on tori.
  Point canonical(const Point& p) const { return torus() ? torus()->reduce(p) : p; }

  /// Rectangle holding the geometry of interest around the given points: their
  /// bounding box for planes and cones, one fundamental domain for tori.
  Rect bounding_hint(std::span<const Point> points) const;

  /// Constant L with |dist(p, s) - dist(q, s)| <= L * |p - q| (chart Euclidean
  /// length) for p, q inside the region.
  double lipschitz(const Rect& region) const;

 private:
  FieldVariant variant_;
};

}  // namespace intdist
