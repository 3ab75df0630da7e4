#include "intdist/norm.hpp"

#include "intdist/error.hpp"

#include <numeric>
#include <sstream>

namespace intdist {

namespace {

// Relative tolerance for arc endpoint matching and symmetry checks.
constexpr double kArcTol = 1e-9;

double angle_between(const Point& a, const Point& b) {
  return std::atan2(cross(a, b), a.dot(b));
}

// Samples boundary points b_k = rho(theta_k) * u(theta_k), theta_k = 2*pi*k/N,
// and returns the smallest normalized sag.
template <typename Radial>
double sampled_margin(Radial&& rho, std::size_t samples) {
  std::vector<Point> pts(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    const double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(samples);
    pts[k] = rho(theta) * unit_direction(theta);
  }
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < samples; ++k) {
    const Point& prev = pts[(k + samples - 1) % samples];
    const Point& mid = pts[k];
    const Point& next = pts[(k + 1) % samples];
    const Point chord = next - prev;
    const double len = chord.norm();
    // Counterclockwise boundary: a convex middle point lies right of the chord.
    const double sag = -cross(chord, Point(mid - prev)) / len;
    margin = std::min(margin, sag / len);
  }
  return margin;
}

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::InvalidSpec, msg); }

}  // namespace

ArcBody::ArcBody(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
  const std::size_t n = arcs_.size();
  if (n < 2 || n % 2 != 0) invalid("arc body needs an even number (>= 2) of arcs");

  double scale = 0.0;
  for (const Arc& a : arcs_) {
    if (!is_finite(a.center) || !std::isfinite(a.radius) || !std::isfinite(a.start_angle) ||
        !std::isfinite(a.end_angle)) {
      invalid("non-finite arc field");
    }
    if (a.radius <= 0.0) invalid("arc radius must be positive");
    if (!(a.end_angle > a.start_angle) || a.end_angle - a.start_angle >= kTwoPi) {
      invalid("arc must sweep counterclockwise by less than a full turn");
    }
    if (a.center.norm() >= a.radius) invalid("origin must lie strictly inside every arc circle");
    scale = std::max(scale, a.start_point().norm());
  }
  const double tol = kArcTol * std::max(scale, 1.0);

  // Closed, connected, counterclockwise, winding once.
  double winding = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Arc& a = arcs_[k];
    const Arc& b = arcs_[(k + 1) % n];
    if ((a.end_point() - b.start_point()).norm() > tol) {
      std::ostringstream os;
      os << "arc " << k << " does not end where arc " << (k + 1) % n << " starts";
      invalid(os.str());
    }
    const double sweep = angle_between(a.start_point(), a.end_point());
    if (!(sweep > 0.0)) invalid("arcs must advance counterclockwise around the origin");
    winding += sweep;
    // Convex junction: the tangent turns left (or continues straight).
    const Point t_in(-std::sin(a.end_angle), std::cos(a.end_angle));
    const Point t_out(-std::sin(b.start_angle), std::cos(b.start_angle));
    if (cross(t_in, t_out) < -1e-12) invalid("reflex corner between consecutive arcs");
  }
  if (std::abs(winding - kTwoPi) > 1e-9) invalid("boundary must wind exactly once around the origin");

  // Central symmetry: arc k + n/2 is the reflection of arc k through the origin.
  const std::size_t half = n / 2;
  for (std::size_t k = 0; k < half; ++k) {
    const Arc& a = arcs_[k];
    const Arc& b = arcs_[k + half];
    if ((a.center + b.center).norm() > tol || std::abs(a.radius - b.radius) > tol ||
        (a.start_point() + b.start_point()).norm() > tol || (a.end_point() + b.end_point()).norm() > tol) {
      invalid("boundary is not centrally symmetric");
    }
  }

  polar_order_.resize(n);
  std::iota(polar_order_.begin(), polar_order_.end(), std::size_t{0});
  std::vector<double> polar(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Point s = arcs_[k].start_point();
    polar[k] = wrap_angle(std::atan2(s.y(), s.x()));
  }
  std::sort(polar_order_.begin(), polar_order_.end(),
            [&](std::size_t a, std::size_t b) { return polar[a] < polar[b]; });
  polar_starts_.resize(n);
  for (std::size_t k = 0; k < n; ++k) polar_starts_[k] = polar[polar_order_[k]];

  const double margin = sampled_margin([this](double t) { return radial(t); }, kMarginSamples);
  if (!(margin > kMarginTolerance)) invalid("arc body is not strictly convex (sampled margin too small)");
}

std::size_t ArcBody::arc_index(double theta) const {
  const double t = wrap_angle(theta);
  auto it = std::upper_bound(polar_starts_.begin(), polar_starts_.end(), t);
  // Before the first start angle: the span wraps from the last arc.
  const std::size_t slot = it == polar_starts_.begin() ? polar_starts_.size() - 1
                                                       : static_cast<std::size_t>(it - polar_starts_.begin()) - 1;
  return polar_order_[slot];
}

double ArcBody::radial(double theta) const {
  const Arc& a = arcs_[arc_index(theta)];
  const Point u = unit_direction(theta);
  // |t*u - c|^2 = r^2, origin inside the circle so exactly one positive root.
  const double uc = u.dot(a.center);
  const double disc = uc * uc - a.center.squaredNorm() + a.radius * a.radius;
  return uc + std::sqrt(disc);
}

NormSpec NormSpec::lp(double p) {
  if (!std::isfinite(p) || !(p > 1.0) || p > kMaxLpExponent) {
    std::ostringstream os;
    os << "L_p exponent must satisfy 1 < p <= " << kMaxLpExponent << ", got " << p;
    throw Error(ErrorCode::InvalidSpec, os.str());
  }
  return NormSpec(LpNorm{p});
}

NormSpec::NormSpec(NormVariant v) : variant_(std::move(v)) {
  if (const auto* lp = std::get_if<LpNorm>(&variant_)) {
    const double diag = std::pow(2.0, 0.5 - 1.0 / lp->p);
    min_radial_ = std::min(1.0, diag);
    max_radial_ = std::max(1.0, diag);
  } else if (std::holds_alternative<L1Norm>(variant_)) {
    min_radial_ = std::sqrt(0.5);
    max_radial_ = 1.0;
  } else if (std::holds_alternative<LinfNorm>(variant_)) {
    min_radial_ = 1.0;
    max_radial_ = std::sqrt(2.0);
  } else {
    const auto& body = std::get<ArcBody>(variant_);
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t k = 0; k < kMarginSamples; ++k) {
      const double r = body.radial(kTwoPi * static_cast<double>(k) / kMarginSamples);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    for (const Arc& a : body.arcs()) {
      lo = std::min(lo, a.start_point().norm());
      hi = std::max(hi, a.start_point().norm());
    }
    // Sampling can miss the exact extremes between samples.
    min_radial_ = lo * (1.0 - 1e-3);
    max_radial_ = hi * (1.0 + 1e-3);
  }
}

double radial(const NormSpec& spec, double theta) {
  return std::visit(
      [theta](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ArcBody>) {
          return v.radial(theta);
        } else {
          const Point u = unit_direction(theta);
          if constexpr (std::is_same_v<T, LpNorm>) return 1.0 / lp_norm<double>(u, v.p);
          if constexpr (std::is_same_v<T, L1Norm>) return 1.0 / l1_norm<double>(u);
          if constexpr (std::is_same_v<T, LinfNorm>) return 1.0 / linf_norm<double>(u);
        }
      },
      spec.variant());
}

double norm(const NormSpec& spec, const Point& v) {
  if (v.x() == 0.0 && v.y() == 0.0) return 0.0;
  return std::visit(
      [&v](const auto& body) -> double {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, LpNorm>) {
          return body.p == 2.0 ? std::hypot(v.x(), v.y()) : lp_norm<double>(v, body.p);
        } else if constexpr (std::is_same_v<T, L1Norm>) {
          return l1_norm<double>(v);
        } else if constexpr (std::is_same_v<T, LinfNorm>) {
          return linf_norm<double>(v);
        } else {
          return std::hypot(v.x(), v.y()) / body.radial(std::atan2(v.y(), v.x()));
        }
      },
      spec.variant());
}

double distance(const NormSpec& spec, const Point& p, const Point& q) { return norm(spec, q - p); }

double strict_convexity_margin(const NormSpec& spec, std::size_t samples) {
  if (!spec.strict()) return 0.0;
  if (samples < 3) throw Error(ErrorCode::InvalidArgument, "margin needs at least 3 samples");
  return sampled_margin([&spec](double t) { return radial(spec, t); }, samples);
}

}  // namespace intdist
