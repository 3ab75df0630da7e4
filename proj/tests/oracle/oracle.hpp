#pragma once

// Reference implementations used only by the tests. They share no solver code
// with the library: brute-force scans, bisection and closed forms.

#include "intdist/triple_points.hpp"

#include <array>
#include <vector>

namespace oracle {

using intdist::Point;

/// Membership of v in the unit ball, from the defining inequality (L_p) or the
/// arc whose angular sector holds v (arc bodies).
bool in_unit_ball(const intdist::NormSpec& spec, const Point& v);

/// Smallest s with v in s*K, by bisection on s.
double norm_by_bisection(const intdist::NormSpec& spec, const Point& v);

/// Triple points by sign-change scanning of (D1 - D2, D1 - D3) on a grid in
/// compactified coordinates p = c + S * tan(pi/2 * (a, b)), refined by
/// quadrisection. Covers the whole plane; transversal roots only.
std::vector<Point> grid_scan_triples(const intdist::DistanceField& field, const intdist::SiteTriple& sites,
                                     int grid = 900);

/// Torus distance by scanning lattice vectors a*u + b*v with |a|, |b| <= window.
double torus_distance_brute(const intdist::FlatTorus& torus, const Point& p, const Point& q, int window = 5);

/// Euclidean points at integer distance from all three vertices with
/// d(p, v1) <= max_d1, from closed-form circle intersections.
std::vector<Point> euclidean_integer_points(const std::array<Point, 3>& v, int max_d1);

/// Same for any strict norm, by scanning the norm circle of radius d1 about v1.
std::vector<Point> norm_integer_points(const intdist::NormSpec& spec, const std::array<Point, 3>& v, int max_d1);

}  // namespace oracle
