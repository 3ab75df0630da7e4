#include "intdist/distance_field.hpp"

#include <limits>

namespace intdist {

double DistanceField::dist(const Point& p, const Point& q) const {
  if (const auto* np = plane()) return distance(np->norm, p, q);
  if (const auto* t = torus()) return t->distance(p, q);
  return cone_distance(ConePoint::from_chart(p), ConePoint::from_chart(q));
}

Rect DistanceField::bounding_hint(std::span<const Point> points) const {
  if (const auto* t = torus()) {
    // Parallelogram spanned by the reduced basis, as an axis-aligned box.
    const Eigen::Matrix2d& b = t->reduced_basis();
    Rect r{Point(0.0, 0.0), Point(0.0, 0.0)};
    for (const Point& corner : {Point(b.col(0)), Point(b.col(1)), Point(b.col(0) + b.col(1))}) {
      r.lo = r.lo.cwiseMin(corner);
      r.hi = r.hi.cwiseMax(corner);
    }
    return r;
  }
  Rect r{Point::Constant(std::numeric_limits<double>::infinity()),
         Point::Constant(-std::numeric_limits<double>::infinity())};
  for (const Point& p : points) {
    r.lo = r.lo.cwiseMin(p);
    r.hi = r.hi.cwiseMax(p);
  }
  if (points.empty()) r = Rect{};
  return r;
}

double DistanceField::lipschitz(const Rect& region) const {
  if (const auto* np = plane()) return 1.0 / np->norm.min_radial();
  if (torus()) return 1.0;
  // Cone chart (r, theta): ds^2 = dr^2 + r^2 dtheta^2.
  return std::max(1.0, std::max(std::abs(region.lo.x()), std::abs(region.hi.x())));
}

}  // namespace intdist
