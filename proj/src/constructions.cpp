#include "intdist/constructions.hpp"

#include "intdist/error.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace intdist {

namespace mp = boost::multiprecision;

std::string to_string(const Rational& q) {
  const BigInt num = mp::numerator(q);
  const BigInt den = mp::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

// cpp_int reads a leading 0 as an octal prefix; strip it.
BigInt decimal(std::string s) {
  std::string sign;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    if (s[0] == '-') sign = "-";
    s.erase(0, 1);
  }
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw std::runtime_error("not a decimal integer");
  }
  const auto nz = s.find_first_not_of('0');
  s = nz == std::string::npos ? "0" : s.substr(nz);
  return BigInt(sign + s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto fail = [&text]() -> Rational { throw Error(ErrorCode::InvalidArgument, "not a rational: '" + text + "'"); };
  if (text.empty()) return fail();
  try {
    if (const auto slash = text.find('/'); slash != std::string::npos) {
      const BigInt den = decimal(text.substr(slash + 1));
      if (den == 0) return fail();
      return Rational(decimal(text.substr(0, slash)), den);
    }
    if (const auto dot = text.find('.'); dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      const std::size_t frac = text.size() - dot - 1;
      if (digits.empty() || digits == "-" || digits == "+") return fail();
      BigInt den = 1;
      for (std::size_t k = 0; k < frac; ++k) den *= 10;
      return Rational(decimal(digits), den);
    }
    return Rational(decimal(text));
  } catch (const std::runtime_error&) {
    return fail();
  }
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const BigInt num = mp::numerator(q);
  const BigInt den = mp::denominator(q);
  const BigInt rn = mp::sqrt(num);
  const BigInt rd = mp::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

std::vector<RationalPoint> RationalPointSet::scaled_points() const {
  std::vector<RationalPoint> out;
  out.reserve(points.size());
  const Rational s(scale);
  for (const RationalPoint& p : points) out.push_back({p.x * s, p.y * s});
  return out;
}

std::vector<Point> RationalPointSet::to_doubles(bool scaled) const {
  std::vector<Point> out;
  for (const RationalPoint& p : scaled ? scaled_points() : points) {
    out.emplace_back(static_cast<double>(p.x), static_cast<double>(p.y));
  }
  return out;
}

RationalPointSet pythagorean_circle_set(const PythagoreanTriple& t, int n, bool include_center) {
  if (t.a <= 0 || t.b <= 0 || t.c <= 0 || BigInt(t.a) * t.a + BigInt(t.b) * t.b != BigInt(t.c) * t.c) {
    std::ostringstream os;
    os << "(" << t.a << ", " << t.b << ", " << t.c << ") is not a Pythagorean triple";
    throw Error(ErrorCode::NotPythagorean, os.str());
  }
  if (n < 1 || n + (include_center ? 1 : 0) < 2) {
    throw Error(ErrorCode::InvalidArgument, "circle set needs at least two points");
  }

  // q^2 = ((a^2 - b^2) + 2ab i) / c^2, a rotation by twice the triangle angle.
  const Rational c2 = Rational(BigInt(t.c) * t.c);
  const Rational re = Rational(BigInt(t.a) * t.a - BigInt(t.b) * t.b) / c2;
  const Rational im = Rational(BigInt(2) * t.a * t.b) / c2;

  RationalPointSet set;
  RationalPoint cur{1, 0};
  for (int j = 0; j < n; ++j) {
    set.points.push_back(cur);
    cur = RationalPoint{cur.x * re - cur.y * im, cur.x * im + cur.y * re};
  }
  if (include_center) set.points.push_back(RationalPoint{0, 0});

  const std::size_t m = set.points.size();
  set.distances.assign(m, std::vector<Rational>(m, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Rational dx = set.points[i].x - set.points[j].x;
      const Rational dy = set.points[i].y - set.points[j].y;
      if (dx == 0 && dy == 0) throw Error(ErrorCode::DuplicatePoint, "circle set repeats a point");
      const auto d = exact_sqrt(dx * dx + dy * dy);
      if (!d) throw Error(ErrorCode::ConstructionFailed, "chord length is not rational");
      set.distances[i][j] = set.distances[j][i] = *d;
      set.scale = mp::lcm(set.scale, BigInt(mp::denominator(*d)));
    }
  }
  return set;
}

ExactDistanceCheck verify_integer_distances_exact(const RationalPointSet& set) {
  const std::vector<RationalPoint> pts = set.scaled_points();
  ExactDistanceCheck out{true, 0};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Rational dx = pts[i].x - pts[j].x;
      const Rational dy = pts[i].y - pts[j].y;
      const auto d = exact_sqrt(dx * dx + dy * dy);
      if (!d || mp::denominator(*d) != 1 || *d <= 0) {
        out.ok = false;
        continue;
      }
      out.diameter = std::max(out.diameter, BigInt(mp::numerator(*d)));
    }
  }
  return out;
}

std::vector<Point> grid_set(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "grid size must be at least 1");
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.emplace_back(i, j);
  }
  return out;
}

std::optional<ParallelPairs> slope_distinctness_check(std::span<const Point> points) {
  if (points.size() < 2) throw Error(ErrorCode::InvalidArgument, "slope check needs at least two points");
  struct Line {
    double angle;
    std::size_t i, j;
  };
  std::vector<Line> lines;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const Point d = points[j] - points[i];
      if (d.norm() == 0.0) {
        std::ostringstream os;
        os << "points " << i << " and " << j << " coincide";
        throw Error(ErrorCode::DuplicatePoint, os.str());
      }
      double a = std::atan2(d.y(), d.x());
      if (a < 0.0) a += kPi;
      if (a >= kPi) a -= kPi;
      lines.push_back({a, i, j});
    }
  }
  std::sort(lines.begin(), lines.end(), [](const Line& x, const Line& y) {
    if (x.angle != y.angle) return x.angle < y.angle;
    return x.i < y.i || (x.i == y.i && x.j < y.j);
  });
  constexpr double kSlopeTol = 1e-9;
  for (std::size_t k = 0; k + 1 < lines.size(); ++k) {
    if (lines[k + 1].angle - lines[k].angle < kSlopeTol) {
      return ParallelPairs{{lines[k].i, lines[k].j}, {lines[k + 1].i, lines[k + 1].j}};
    }
  }
  if (lines.size() >= 2 && lines.front().angle + kPi - lines.back().angle < kSlopeTol) {
    return ParallelPairs{{lines.front().i, lines.front().j}, {lines.back().i, lines.back().j}};
  }
  return std::nullopt;
}

namespace {

struct Direction {
  double angle;  // in [0, pi) for the stored half
  Point unit;
  std::size_t i, j;
};

// Radial position, along `mid`, of the line through `prev` and `next`.
// Infinite when the line does not cross the ray (the vertex cannot be cut off).
double chord_height(const Point& prev, const Point& mid, const Point& next) {
  const Point edge = next - prev;
  const double denom = cross(mid, edge);
  if (denom <= 0.0) return 0.0;
  const double h = cross(prev, edge) / denom;
  return h;
}

std::vector<Arc> arcs_through(const std::vector<Point>& vertices, double radius) {
  const std::size_t total = vertices.size();
  const std::size_t half = total / 2;
  std::vector<Arc> arcs(total);
  for (std::size_t k = 0; k < half; ++k) {
    const Point& a = vertices[k];
    const Point& b = vertices[(k + 1) % total];
    const Point chord = b - a;
    const double c = chord.norm();
    const Point inward = Point(-chord.y(), chord.x()) / c;
    const Point center = 0.5 * (a + b) + inward * std::sqrt(radius * radius - 0.25 * c * c);
    const double a0 = std::atan2(a.y() - center.y(), a.x() - center.x());
    double a1 = std::atan2(b.y() - center.y(), b.x() - center.x());
    while (a1 <= a0) a1 += kTwoPi;
    arcs[k] = Arc{center, radius, a0, a1};
    arcs[k + half] = Arc{-center, radius, a0 + kPi, a1 + kPi};
  }
  return arcs;
}

bool junctions_convex(const std::vector<Arc>& arcs) {
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const Arc& a = arcs[k];
    const Arc& b = arcs[(k + 1) % arcs.size()];
    const Point t_in(-std::sin(a.end_angle), std::cos(a.end_angle));
    const Point t_out(-std::sin(b.start_angle), std::cos(b.start_angle));
    if (cross(t_in, t_out) <= 0.0) return false;
  }
  return true;
}

}  // namespace

IntegralNorm norm_for_integer_distances(std::span<const Point> points) {
  const std::size_t n = points.size();
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "integral norm construction needs at least three points");
  if (const auto clash = slope_distinctness_check(points)) {
    std::ostringstream os;
    os << "lines (" << clash->first[0] << "," << clash->first[1] << ") and (" << clash->second[0] << ","
       << clash->second[1] << ") are parallel";
    throw Error(ErrorCode::SlopeCollision, os.str());
  }

  // One direction per pair, folded into [0, pi); the other half is its negation.
  std::vector<Direction> dirs;
  double min_len = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Point d = points[j] - points[i];
      min_len = std::min(min_len, d.norm());
      Point u = d.normalized();
      double a = std::atan2(u.y(), u.x());
      if (a < 0.0) {
        a += kPi;
        u = -u;
      }
      if (a >= kPi) {
        a -= kPi;
        u = -u;
      }
      dirs.push_back({a, u, i, j});
    }
  }
  std::sort(dirs.begin(), dirs.end(), [](const Direction& x, const Direction& y) { return x.angle < y.angle; });
  const std::size_t half = dirs.size();
  std::vector<Point> units(2 * half);
  for (std::size_t k = 0; k < half; ++k) {
    units[k] = dirs[k].unit;
    units[k + half] = -dirs[k].unit;
  }

  // Largest uniform expansion slack that keeps every vertex outside the chord
  // of its (expanded) neighbours, with a safety factor of 4.
  double slack = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < units.size(); ++k) {
    const Point& prev = units[(k + units.size() - 1) % units.size()];
    const Point& next = units[(k + 1) % units.size()];
    const double h = chord_height(prev, units[k], next);
    if (h > 0.0) slack = std::min(slack, (1.0 - h) / h);
  }
  const double epsilon = slack / 4.0;
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorCode::ConstructionFailed, "directions are not in strictly convex position");
  }

  // Every scaled distance must reach 1/eps + 1 so floor() shrinks by at most 1 + eps.
  const double scale = (1.0 / epsilon + 1.0) / min_len;
  double max_len = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) max_len = std::max(max_len, (points[j] - points[i]).norm());
  }
  if (!(scale * max_len <= 1e12)) {
    std::ostringstream os;
    os << "required scale " << scale << " exceeds the cap (epsilon = " << epsilon << ")";
    throw Error(ErrorCode::ConstructionFailed, os.str());
  }

  IntegralNorm out{ArcBody({Arc{{0.0, 0.0}, 1.0, 0.0, kPi}, Arc{{0.0, 0.0}, 1.0, kPi, kTwoPi}}),
                   {},
                   IntMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)),
                   epsilon,
                   scale};
  for (const Point& p : points) out.scaled_points.push_back(scale * p);

  std::vector<Point> vertices(2 * half);
  double longest = 0.0;
  for (std::size_t k = 0; k < half; ++k) {
    const Direction& d = dirs[k];
    const double dist = (out.scaled_points[d.j] - out.scaled_points[d.i]).norm();
    const double target = std::floor(dist);
    out.target_distances(static_cast<Eigen::Index>(d.i), static_cast<Eigen::Index>(d.j)) =
        out.target_distances(static_cast<Eigen::Index>(d.j), static_cast<Eigen::Index>(d.i)) =
            static_cast<long long>(target);
    vertices[k] = d.unit * (dist / target);
    vertices[k + half] = -vertices[k];
    longest = std::max(longest, vertices[k].norm());
  }

  // Large radii flatten the arcs toward their chords; double until every
  // junction turns left.
  double radius = 100.0 * longest;
  std::vector<Arc> arcs;
  for (int attempt = 0;; ++attempt) {
    arcs = arcs_through(vertices, radius);
    if (junctions_convex(arcs)) break;
    if (attempt == 60) throw Error(ErrorCode::ConstructionFailed, "no arc radius keeps the boundary convex");
    radius *= 2.0;
  }
  try {
    out.body = ArcBody(std::move(arcs));
  } catch (const Error& e) {
    throw Error(ErrorCode::ConstructionFailed, std::string("assembled body rejected: ") + e.what());
  }

  const NormSpec spec = NormSpec::arcs(out.body);
  if (!(strict_convexity_margin(spec) > 0.0)) {
    throw Error(ErrorCode::ConstructionFailed, "assembled body is not strictly convex");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = distance(spec, out.scaled_points[i], out.scaled_points[j]);
      const long long target = out.target_distances(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (std::abs(d - static_cast<double>(target)) > 1e-6) {
        std::ostringstream os;
        os << "pair (" << i << "," << j << ") has distance " << d << " instead of " << target;
        throw Error(ErrorCode::ConstructionFailed, os.str());
      }
    }
  }
  return out;
}

}  // namespace intdist
