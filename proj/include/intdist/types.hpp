#pragma once

#include <Eigen/Core>

#include <cmath>
#include <numbers>

namespace intdist {

template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;

/// A location in the coordinate chart of a 2D metric space. For the plane and
/// flat tori this is (x, y); for the infinite cone it is (r, theta).
using Point = Vec2<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Axis-aligned rectangle in chart coordinates.
struct Rect {
  Point lo{0.0, 0.0};
  Point hi{1.0, 1.0};

  double width() const { return hi.x() - lo.x(); }
  double height() const { return hi.y() - lo.y(); }
  Point center() const { return 0.5 * (lo + hi); }
  bool contains(const Point& p) const {
    return p.x() >= lo.x() && p.x() <= hi.x() && p.y() >= lo.y() && p.y() <= hi.y();
  }
};

template <typename Scalar>
Scalar cross(const Vec2<Scalar>& a, const Vec2<Scalar>& b) {
  return a.x() * b.y() - a.y() * b.x();
}

inline bool is_finite(const Point& p) { return std::isfinite(p.x()) && std::isfinite(p.y()); }

/// Angle wrapped into [0, 2*pi).
inline double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

inline Point unit_direction(double theta) { return {std::cos(theta), std::sin(theta)}; }

}  // namespace intdist
