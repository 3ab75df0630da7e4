#pragma once

// Flat tori and the infinite-angle cone: the non-planar metrics used to probe
// equidistance bounds on surfaces.

#include "intdist/types.hpp"

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace intdist {

/// Flat torus R^2 / L for the lattice L generated by u and v. Euler genus 2.
class FlatTorus {
 public:
  static constexpr int kEulerGenus = 2;

  /// Throws Error(DegenerateLattice) unless |det[u v]| > 1e-12.
  FlatTorus(const Point& u, const Point& v);

  const Point& u() const { return u_; }
  const Point& v() const { return v_; }
  /// Lagrange-Gauss reduced basis of the same lattice.
  const Eigen::Matrix2d& reduced_basis() const { return reduced_; }

  /// Lattice coordinates of p with respect to the reduced basis.
  Eigen::Vector2d coordinates(const Point& p) const { return reduced_inverse_ * p; }
  Point from_coordinates(const Eigen::Vector2d& c) const { return reduced_ * c; }

  /// Canonical representative: reduced-basis coefficients in [0, 1).
  Point reduce(const Point& p) const;

  /// Minimum Euclidean length of p - q + l over lattice vectors l with
  /// reduced-basis coefficients in [-window, window]^2.
  double distance(const Point& p, const Point& q, int window = 2) const;

  /// Shortest vector d with p + d equivalent to q (same window as distance).
  Point displacement(const Point& p, const Point& q, int window = 2) const;

 private:
  Point u_;
  Point v_;
  Eigen::Matrix2d reduced_;
  Eigen::Matrix2d reduced_inverse_;
};

double torus_distance(const FlatTorus& torus, const Point& p, const Point& q);

struct HexagonalTorus {
  FlatTorus torus;
  Point center;
  Point vclass1;
  Point vclass2;
};

/// Torus glued from the regular hexagon of the given circumradius centred at
/// the origin with vertices at angles k*60 degrees. Its lattice is generated by
/// two of the three opposite-edge translations (length sqrt(3)*R).
HexagonalTorus hexagonal_torus(double circumradius);

/// Hexagon vertex k (angle k*60 degrees) for the given circumradius.
Point hexagon_vertex(double circumradius, int k);

/// Point on the infinite-angle cone; theta is never reduced modulo 2*pi.
struct ConePoint {
  double r = 1.0;
  double theta = 0.0;

  Point chart() const { return {r, theta}; }
  static ConePoint from_chart(const Point& p) { return {p.x(), p.y()}; }
};

/// r1 + r2 once |dtheta| >= pi, law of cosines otherwise.
/// Throws Error(NonPositiveRadius) unless both radii are positive.
double cone_distance(const ConePoint& p, const ConePoint& q);

/// The k points (1/2, i*pi), i = 0..k-1. Throws Error(InvalidArgument) for k < 2.
std::vector<ConePoint> cone_equilateral_set(int k);

/// The points (1/2, i*pi) for the given indices. Throws Error(DuplicatePoint)
/// if an index repeats, since the set must consist of distinct points.
std::vector<ConePoint> cone_equilateral_set(std::span<const int> indices);

/// 2g + 2: the largest a with K_{3,a} embeddable on a surface of Euler genus g.
/// Throws Error(NegativeGenus) for g < 0.
int max_equidistant_bound(int euler_genus);

}  // namespace intdist
