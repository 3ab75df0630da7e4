#include "intdist/surfaces.hpp"

#include "intdist/error.hpp"

#include <algorithm>
#include <limits>

namespace intdist {

namespace {

// Lagrange-Gauss reduction: shortest basis of a 2D lattice.
Eigen::Matrix2d gauss_reduce(Point a, Point b) {
  if (a.squaredNorm() > b.squaredNorm()) std::swap(a, b);
  for (int guard = 0; guard < 1000; ++guard) {
    const double mu = std::round(a.dot(b) / a.squaredNorm());
    b -= mu * a;
    if (b.squaredNorm() >= a.squaredNorm()) break;
    std::swap(a, b);
  }
  Eigen::Matrix2d m;
  m.col(0) = a;
  m.col(1) = b;
  return m;
}

}  // namespace

FlatTorus::FlatTorus(const Point& u, const Point& v) : u_(u), v_(v) {
  if (!is_finite(u) || !is_finite(v) || std::abs(cross(u, v)) <= 1e-12) {
    throw Error(ErrorCode::DegenerateLattice, "torus basis vectors must be linearly independent");
  }
  reduced_ = gauss_reduce(u, v);
  reduced_inverse_ = reduced_.inverse();
}

Point FlatTorus::reduce(const Point& p) const {
  Eigen::Vector2d c = coordinates(p);
  for (int i = 0; i < 2; ++i) {
    c[i] -= std::floor(c[i]);
    if (c[i] >= 1.0) c[i] = 0.0;
  }
  return from_coordinates(c);
}

Point FlatTorus::displacement(const Point& p, const Point& q, int window) const {
  const Point diff = reduce(q) - reduce(p);
  Point best = diff;
  double best_sq = std::numeric_limits<double>::infinity();
  for (int i = -window; i <= window; ++i) {
    for (int j = -window; j <= window; ++j) {
      const Point shifted = diff + reduced_.col(0) * i + reduced_.col(1) * j;
      if (shifted.squaredNorm() < best_sq) {
        best_sq = shifted.squaredNorm();
        best = shifted;
      }
    }
  }
  return best;
}

double FlatTorus::distance(const Point& p, const Point& q, int window) const {
  return displacement(p, q, window).norm();
}

double torus_distance(const FlatTorus& torus, const Point& p, const Point& q) { return torus.distance(p, q); }

Point hexagon_vertex(double circumradius, int k) {
  const double a = kPi / 3.0 * k;
  return circumradius * unit_direction(a);
}

HexagonalTorus hexagonal_torus(double circumradius) {
  if (!(circumradius > 0.0) || !std::isfinite(circumradius)) {
    throw Error(ErrorCode::InvalidArgument, "hexagon circumradius must be positive");
  }
  // Edge k joins vertices k and k+1; its outward normal points at 30 + 60k degrees.
  const double apothem2 = std::sqrt(3.0) * circumradius;
  const Point t0 = apothem2 * unit_direction(kPi / 6.0);
  const Point t1 = apothem2 * unit_direction(kPi / 2.0);
  return HexagonalTorus{FlatTorus(t0, t1), Point(0.0, 0.0), hexagon_vertex(circumradius, 0),
                        hexagon_vertex(circumradius, 1)};
}

double cone_distance(const ConePoint& p, const ConePoint& q) {
  if (!(p.r > 0.0) || !(q.r > 0.0)) {
    throw Error(ErrorCode::NonPositiveRadius, "cone points need r > 0");
  }
  const double dtheta = std::abs(p.theta - q.theta);
  if (dtheta >= kPi) return p.r + q.r;
  const double sq = p.r * p.r + q.r * q.r - 2.0 * p.r * q.r * std::cos(dtheta);
  return std::sqrt(std::max(0.0, sq));
}

std::vector<ConePoint> cone_equilateral_set(int k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "equilateral cone set needs k >= 2");
  std::vector<ConePoint> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out.push_back({0.5, kPi * i});
  return out;
}

std::vector<ConePoint> cone_equilateral_set(std::span<const int> indices) {
  std::vector<int> seen(indices.begin(), indices.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw Error(ErrorCode::DuplicatePoint, "equilateral cone set needs distinct indices");
  }
  std::vector<ConePoint> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back({0.5, kPi * i});
  return out;
}

int max_equidistant_bound(int euler_genus) {
  if (euler_genus < 0) throw Error(ErrorCode::NegativeGenus, "Euler genus must be non-negative");
  return 2 * euler_genus + 2;
}

}  // namespace intdist
