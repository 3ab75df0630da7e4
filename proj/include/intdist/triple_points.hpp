#pragma once

// Points with equal weighted distance to three sites (the triple intersection
// V1 & V2 & V3 of a three-site additively weighted diagram).

#include "intdist/distance_field.hpp"
#include "intdist/voronoi.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace intdist {

using SiteTriple = std::array<WeightedSite, 3>;

struct SolverOptions {
  /// Coarse seeding grid per axis over the search region.
  int coarse_grid = 64;
  /// Extra quadtree levels below the coarse grid before Newton starts.
  int leaf_depth = 10;
  /// Central finite-difference step for the Jacobian.
  double fd_step = 1e-6;
  /// Maximum weighted-distance disagreement accepted at a root.
  double residual_tol = 1e-9;
  /// Roots closer than this are merged.
  double dedup_radius = 1e-5;
  /// Search half-width = margin_factor * (max pairwise site distance + max |w|).
  double margin_factor = 4.0;
  int max_newton_iterations = 100;
  /// Also seed from a compactified polar grid outside the search square (planes only).
  bool far_field = true;
  int far_angles = 360;
  int far_shells = 96;
};

struct SolverStats {
  std::size_t seeds_tried = 0;
  std::size_t newton_iterations = 0;
};

struct TriplePointSet {
  std::vector<Point> points;
  std::vector<double> residuals;
  SolverStats stats;
};

/// Triangle area below 1e-9 * (longest side)^2.
bool is_collinear(const Point& a, const Point& b, const Point& c);

/// Max minus min of the three weighted distances at p.
double triple_residual(const DistanceField& field, const SiteTriple& sites, const Point& p);

/// The region scanned by the solver (and by brute-force cross-checks). For a
/// normed plane: a square centred at the site centroid with half-width
/// margin_factor * (max pairwise distance + max |w|). For a torus: the box
/// around one fundamental domain.
Rect triple_search_region(const DistanceField& field, const SiteTriple& sites, double margin_factor = 4.0);

/// Largest possible number of triple points: 2 on a strict plane, 2g + 2 = 6 on a torus.
std::size_t triple_point_cap(const DistanceField& field);

/// Finds all triple points, deduplicated and sorted by (x, y). Torus points
/// are reported as canonical representatives.
///
/// Throws Error(NonStrictNorm) for non-strict planes, Error(CollinearSites)
/// for collinear planar sites, Error(UnsupportedField) for the cone,
/// Error(DuplicatePoint) for coincident sites and Error(BoundViolation) if
/// more than triple_point_cap points survive deduplication.
TriplePointSet triple_points(const DistanceField& field, const SiteTriple& sites, const SolverOptions& options = {});

}  // namespace intdist
