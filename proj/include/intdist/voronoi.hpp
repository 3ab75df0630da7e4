#pragma once

// Additively weighted Voronoi diagrams over a DistanceField. Cells are never
// stored; membership is evaluated pointwise.

#include "intdist/distance_field.hpp"

#include <cstddef>
#include <vector>

namespace intdist {

inline constexpr double kOwnerTolerance = 1e-9;

struct WeightedSite {
  Point point{0.0, 0.0};
  double weight = 0.0;
};

/// A distance field plus at least one site; site points are pairwise distinct.
class Diagram {
 public:
  Diagram(DistanceField field, std::vector<WeightedSite> sites);

  const DistanceField& field() const { return field_; }
  const std::vector<WeightedSite>& sites() const { return sites_; }
  std::size_t size() const { return sites_.size(); }

 private:
  DistanceField field_;
  std::vector<WeightedSite> sites_;
};

/// dist(p, s_i) + w_i. Throws Error(IndexOutOfRange).
double weighted_distance(const Diagram& diagram, std::size_t i, const Point& p);

/// Indices whose weighted distance is within tol of the minimum, ascending.
std::vector<std::size_t> owners(const Diagram& diagram, const Point& p, double tol = kOwnerTolerance);

struct SiteClass {
  enum class Kind { NonDegenerate, DegenerateRay, EmptyCell };
  Kind kind = Kind::NonDegenerate;
  /// Unit direction of the ray (DegenerateRay only).
  Point direction{0.0, 0.0};
  /// Site whose cell contains this one (DegenerateRay and EmptyCell).
  std::size_t host = 0;
};

/// Degenerate-site classification for strictly convex normed planes.
/// Throws Error(NonStrictNorm) for non-strict norms and Error(UnsupportedField)
/// for tori and cones.
std::vector<SiteClass> classify_sites(const Diagram& diagram, double tol = kOwnerTolerance);

/// Pixel-centre ownership labels, row-major with row 0 at bbox.lo.y().
struct OwnerGrid {
  Rect bbox;
  int resolution = 0;
  std::vector<int> labels;

  int at(int row, int col) const { return labels[static_cast<std::size_t>(row) * resolution + col]; }
  Point pixel_center(int row, int col) const {
    return {bbox.lo.x() + (col + 0.5) * bbox.width() / resolution,
            bbox.lo.y() + (row + 0.5) * bbox.height() / resolution};
  }
};

/// Labels each pixel with its lowest-index owner. Throws Error(InvalidArgument)
/// for resolution < 2 or an empty bbox.
OwnerGrid cell_raster(const Diagram& diagram, const Rect& bbox, int resolution, double tol = kOwnerTolerance);

}  // namespace intdist
