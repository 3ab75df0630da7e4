#include "oracle.hpp"

#include <algorithm>
#include <cmath>

namespace oracle {

using namespace intdist;

namespace {

double polar(const Point& p) {
  double a = std::atan2(p.y(), p.x());
  return a < 0.0 ? a + kTwoPi : a;
}

bool angle_between(double a, double lo, double hi) {
  // Counterclockwise from lo to hi, all in [0, 2pi). The slack closes the
  // rounding gaps between adjacent arc endpoints.
  constexpr double kSlack = 1e-12;
  lo -= kSlack;
  hi += kSlack;
  if (lo <= hi) return (a >= lo && a <= hi) || a - kTwoPi >= lo || a + kTwoPi <= hi;
  return a >= lo || a <= hi;
}

void dedup_push(std::vector<Point>& out, const Point& p, double radius) {
  for (const Point& q : out) {
    if ((q - p).norm() <= radius) return;
  }
  out.push_back(p);
}

}  // namespace

bool in_unit_ball(const NormSpec& spec, const Point& v) {
  if (const auto* lp = std::get_if<LpNorm>(&spec.variant())) {
    return std::pow(std::abs(v.x()), lp->p) + std::pow(std::abs(v.y()), lp->p) <= 1.0;
  }
  if (std::holds_alternative<L1Norm>(spec.variant())) return std::abs(v.x()) + std::abs(v.y()) <= 1.0;
  if (std::holds_alternative<LinfNorm>(spec.variant())) return std::max(std::abs(v.x()), std::abs(v.y())) <= 1.0;
  const auto& body = std::get<ArcBody>(spec.variant());
  if (v.norm() == 0.0) return true;
  const double a = polar(v);
  for (const Arc& arc : body.arcs()) {
    if (angle_between(a, polar(arc.start_point()), polar(arc.end_point()))) return (v - arc.center).norm() <= arc.radius;
  }
  return false;
}

double norm_by_bisection(const NormSpec& spec, const Point& v) {
  if (v.norm() == 0.0) return 0.0;
  double lo = 0.0;
  double hi = 1.0;
  while (!in_unit_ball(spec, v / hi)) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (in_unit_ball(spec, v / mid) ? hi : lo) = mid;
  }
  return hi;
}

std::vector<Point> grid_scan_triples(const DistanceField& field, const SiteTriple& sites, int grid) {
  Point c = Point::Zero();
  double spread = 0.0;
  for (int i = 0; i < 3; ++i) {
    c += sites[i].point / 3.0;
    for (int j = 0; j < 3; ++j) spread = std::max(spread, (sites[i].point - sites[j].point).norm());
  }
  const double scale = 2.0 * spread;
  auto map = [&](double a, double b) {
    return Point(c + scale * Point(std::tan(0.5 * kPi * a), std::tan(0.5 * kPi * b)));
  };
  auto g = [&](double a, double b) {
    const Point p = map(a, b);
    const double d1 = field.dist(p, sites[0].point) + sites[0].weight;
    return Eigen::Vector2d(d1 - field.dist(p, sites[1].point) - sites[1].weight,
                           d1 - field.dist(p, sites[2].point) - sites[2].weight);
  };
  auto straddles = [](const std::array<Eigen::Vector2d, 4>& v, int k) {
    const double lo = std::min({v[0][k], v[1][k], v[2][k], v[3][k]});
    const double hi = std::max({v[0][k], v[1][k], v[2][k], v[3][k]});
    return lo <= 0.0 && hi >= 0.0;
  };

  const double h = 2.0 / grid;
  std::vector<Eigen::Vector2d> values(static_cast<std::size_t>(grid + 1) * (grid + 1));
  // The open square (-1, 1)^2; the outermost ring is pulled in slightly.
  auto coord = [&](int i) { return std::clamp(-1.0 + i * h, -1.0 + 1e-9, 1.0 - 1e-9); };
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; j <= grid; ++j) values[static_cast<std::size_t>(i) * (grid + 1) + j] = g(coord(i), coord(j));
  }

  struct Box {
    double a, b, w;
  };
  std::vector<Box> boxes;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const std::array<Eigen::Vector2d, 4> v{values[static_cast<std::size_t>(i) * (grid + 1) + j],
                                             values[static_cast<std::size_t>(i + 1) * (grid + 1) + j],
                                             values[static_cast<std::size_t>(i) * (grid + 1) + j + 1],
                                             values[static_cast<std::size_t>(i + 1) * (grid + 1) + j + 1]};
      if (straddles(v, 0) && straddles(v, 1)) boxes.push_back({coord(i), coord(j), coord(i + 1) - coord(i)});
    }
  }

  std::vector<Point> roots;
  while (!boxes.empty()) {
    std::vector<Box> next;
    for (const Box& bx : boxes) {
      const Point p0 = map(bx.a, bx.b);
      const Point p1 = map(bx.a + bx.w, bx.b + bx.w);
      if ((p1 - p0).norm() <= 1e-13 * std::max(1.0, p0.norm())) {
        dedup_push(roots, map(bx.a + 0.5 * bx.w, bx.b + 0.5 * bx.w), 1e-6 * std::max(1.0, p0.norm()));
        continue;
      }
      const double w = 0.5 * bx.w;
      for (const Box& child : {Box{bx.a, bx.b, w}, Box{bx.a + w, bx.b, w}, Box{bx.a, bx.b + w, w},
                               Box{bx.a + w, bx.b + w, w}}) {
        const std::array<Eigen::Vector2d, 4> v{g(child.a, child.b), g(child.a + w, child.b), g(child.a, child.b + w),
                                               g(child.a + w, child.b + w)};
        if (straddles(v, 0) && straddles(v, 1)) next.push_back(child);
      }
    }
    // Zero curves crossing at a shallow angle leave a long strip of boxes;
    // keep the part of the strip closest to a common zero.
    if (next.size() > 2048) {
      auto score = [&](const Box& bx) {
        const Eigen::Vector2d v = g(bx.a + 0.5 * bx.w, bx.b + 0.5 * bx.w);
        return std::max(std::abs(v[0]), std::abs(v[1]));
      };
      std::vector<std::pair<double, std::size_t>> ranked;
      for (std::size_t k = 0; k < next.size(); ++k) ranked.emplace_back(score(next[k]), k);
      std::sort(ranked.begin(), ranked.end());
      std::vector<Box> kept;
      for (std::size_t k = 0; k < 2048; ++k) kept.push_back(next[ranked[k].second]);
      next = std::move(kept);
    }
    boxes = std::move(next);
  }
  std::sort(roots.begin(), roots.end(), [](const Point& x, const Point& y) {
    return x.x() < y.x() || (x.x() == y.x() && x.y() < y.y());
  });
  return roots;
}

double torus_distance_brute(const FlatTorus& torus, const Point& p, const Point& q, int window) {
  double best = std::numeric_limits<double>::infinity();
  for (int a = -window; a <= window; ++a) {
    for (int b = -window; b <= window; ++b) {
      best = std::min(best, (q - p + a * torus.u() + b * torus.v()).norm());
    }
  }
  return best;
}

std::vector<Point> euclidean_integer_points(const std::array<Point, 3>& v, int max_d1) {
  const double d12 = (v[1] - v[0]).norm();
  const Point ex = (v[1] - v[0]) / d12;
  const Point ey(-ex.y(), ex.x());
  std::vector<Point> out;
  auto accept = [&](const Point& p) {
    for (const Point& s : v) {
      const double d = (p - s).norm();
      if (std::abs(d - std::round(d)) > 1e-6) return;
    }
    dedup_push(out, p, 1e-6);
  };
  for (int d1 = 0; d1 <= max_d1; ++d1) {
    for (int d2 = std::max(0, d1 - static_cast<int>(std::ceil(d12))); d2 <= d1 + static_cast<int>(std::ceil(d12)); ++d2) {
      // x along v1->v2: d1^2 - x^2 = d2^2 - (x - d12)^2.
      const double x = (static_cast<double>(d1) * d1 - static_cast<double>(d2) * d2 + d12 * d12) / (2.0 * d12);
      const double yy = static_cast<double>(d1) * d1 - x * x;
      if (yy < -1e-9) continue;
      const double y = std::sqrt(std::max(0.0, yy));
      accept(v[0] + x * ex + y * ey);
      if (y > 0.0) accept(v[0] + x * ex - y * ey);
    }
  }
  std::sort(out.begin(), out.end(), [](const Point& x, const Point& y) {
    return x.x() < y.x() || (x.x() == y.x() && x.y() < y.y());
  });
  return out;
}

std::vector<Point> norm_integer_points(const NormSpec& spec, const std::array<Point, 3>& v, int max_d1) {
  std::vector<Point> out;
  auto accept = [&](const Point& p) {
    for (const Point& s : v) {
      const double d = norm_by_bisection(spec, p - s);
      if (std::abs(d - std::round(d)) > 1e-6) return;
    }
    dedup_push(out, p, 1e-6);
  };
  const double d12 = norm_by_bisection(spec, v[1] - v[0]);
  for (int d1 = 0; d1 <= max_d1; ++d1) {
    if (d1 == 0) {
      accept(v[0]);
      continue;
    }
    auto circle = [&](double t) {
      const Point dir = unit_direction(t);
      return Point(v[0] + d1 / norm_by_bisection(spec, dir) * dir);
    };
    for (int d2 = std::max(0, d1 - static_cast<int>(std::ceil(d12))); d2 <= d1 + static_cast<int>(std::ceil(d12)); ++d2) {
      if (d2 == 0) {
        accept(v[1]);
        continue;
      }
      auto f = [&](double t) { return norm_by_bisection(spec, circle(t) - v[1]) - d2; };
      constexpr int kSamples = 2048;
      double t0 = 0.0;
      double f0 = f(t0);
      for (int k = 1; k <= kSamples; ++k) {
        const double t1 = kTwoPi * k / kSamples;
        const double f1 = f(t1);
        if ((f0 <= 0.0) != (f1 <= 0.0)) {
          double lo = t0, hi = t1, flo = f0;
          for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = f(mid);
            if ((fm <= 0.0) == (flo <= 0.0)) {
              lo = mid;
              flo = fm;
            } else {
              hi = mid;
            }
          }
          accept(circle(0.5 * (lo + hi)));
        }
        t0 = t1;
        f0 = f1;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Point& x, const Point& y) {
    return x.x() < y.x() || (x.x() == y.x() && x.y() < y.y());
  });
  return out;
}

}  // namespace oracle
