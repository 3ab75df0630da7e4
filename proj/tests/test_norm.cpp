#include "intdist/error.hpp"
#include "intdist/norm.hpp"
#include "intdist/random.hpp"
#include "oracle/oracle.hpp"

#include <doctest.h>

using namespace intdist;

namespace {

// Boundary through (+-1, 0), (0, +-1) joined by arcs of radius 2.
ArcBody rounded_diamond() {
  const std::vector<Point> v{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::vector<Arc> arcs;
  for (std::size_t k = 0; k < 4; ++k) {
    const Point a = v[k], b = v[(k + 1) % 4];
    const Point chord = b - a;
    const Point inward = Point(-chord.y(), chord.x()) / chord.norm();
    const double r = 2.0;
    const Point c = 0.5 * (a + b) + inward * std::sqrt(r * r - 0.25 * chord.squaredNorm());
    double a0 = std::atan2(a.y() - c.y(), a.x() - c.x());
    double a1 = std::atan2(b.y() - c.y(), b.x() - c.x());
    while (a1 <= a0) a1 += kTwoPi;
    arcs.push_back(Arc{c, r, a0, a1});
  }
  return ArcBody(arcs);
}

}  // namespace

TEST_CASE("closed-form norms") {
  CHECK(norm(NormSpec::euclidean(), Point(3, 4)) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(norm(NormSpec::l1(), Point(2, 3)) == 5.0);
  CHECK(norm(NormSpec::linf(), Point(-2, 3)) == 3.0);
  CHECK(distance(NormSpec::euclidean(), Point(0, 0), Point(3, 4)) == doctest::Approx(5.0));
  CHECK(distance(NormSpec::l1(), Point(0, 0), Point(2, 3)) == 5.0);
  CHECK(norm(NormSpec::lp(3.0), Point(0, 0)) == 0.0);
}

TEST_CASE("L4 norm of (1,1) agrees with bisection on the scale factor") {
  const NormSpec l4 = NormSpec::lp(4.0);
  const double closed = norm(l4, Point(1, 1));
  CHECK(std::abs(closed - std::pow(2.0, 0.25)) < 1e-15);
  CHECK(std::abs(closed - oracle::norm_by_bisection(l4, Point(1, 1))) < 1e-12);
  CHECK(closed == doctest::Approx(1.189207).epsilon(1e-6));
}

TEST_CASE("radial function") {
  CHECK(radial(NormSpec::euclidean(), 0.7) == doctest::Approx(1.0));
  CHECK(radial(NormSpec::l1(), 0.0) == doctest::Approx(1.0));
  CHECK(radial(NormSpec::l1(), kPi / 4) == doctest::Approx(1.0 / std::sqrt(2.0)));
  const NormSpec l4 = NormSpec::lp(4.0);
  const double r = radial(l4, kPi / 4);
  // |(1,1)| / ||(1,1)||_4 = sqrt(2) / 2^(1/4) = 2^(1/4).
  CHECK(std::abs(r - std::pow(2.0, 0.25)) < 1e-12);
  CHECK(std::abs(r - 1.0 / norm(l4, unit_direction(kPi / 4))) < 1e-12);
  for (double t : {0.0, 0.3, 1.0, 2.0, 4.0}) CHECK(radial(l4, t) == doctest::Approx(radial(l4, t + kPi)));
}

TEST_CASE("strictness margin") {
  CHECK(strict_convexity_margin(NormSpec::euclidean()) > kMarginTolerance);
  CHECK(strict_convexity_margin(NormSpec::l1()) == 0.0);
  CHECK(strict_convexity_margin(NormSpec::linf()) == 0.0);
  CHECK(strict_convexity_margin(NormSpec::arcs(rounded_diamond())) > 0.0);
  CHECK(NormSpec::lp(1.5).strict());
  CHECK_FALSE(NormSpec::l1().strict());
}

TEST_CASE("arc body agrees with the membership oracle") {
  const NormSpec spec = NormSpec::arcs(rounded_diamond());
  CHECK(radial(spec, 0.0) == doctest::Approx(1.0));
  CHECK(radial(spec, kPi / 2) == doctest::Approx(1.0));
  Rng rng(3);
  for (int k = 0; k < 500; ++k) {
    const Point v = rng.point_in(Rect{Point(-3, -3), Point(3, 3)});
    CHECK(std::abs(norm(spec, v) - oracle::norm_by_bisection(spec, v)) < 1e-12 * std::max(1.0, v.norm()));
  }
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(NormSpec::lp(1.0), Error);
  CHECK_THROWS_AS(NormSpec::lp(65.0), Error);
  CHECK_THROWS_AS(NormSpec::lp(std::nan("")), Error);
  // Odd arc count and a non-closing boundary.
  CHECK_THROWS_AS(ArcBody({Arc{{0, 0}, 1, 0, kPi}}), Error);
  CHECK_THROWS_AS(ArcBody({Arc{{0, 0}, 1, 0, 3.0}, Arc{{0, 0}, 1, kPi, kTwoPi}}), Error);
  // Not centrally symmetric.
  CHECK_THROWS_AS(ArcBody({Arc{{0.1, 0}, 1.0, -kPi / 2, kPi / 2}, Arc{{0, 0}, 1.0, kPi / 2, 3 * kPi / 2}}), Error);
  try {
    NormSpec::lp(0.5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidSpec);
  }
}

TEST_CASE("homogeneity, symmetry and the strict triangle inequality") {
  Rng rng(11);
  for (int k = 0; k < 2000; ++k) {
    const NormSpec spec = k % 2 ? NormSpec::lp(rng.uniform(1.2, 8.0)) : NormSpec::arcs(rounded_diamond());
    const Point v = rng.point_in(Rect{Point(-5, -5), Point(5, 5)});
    const double c = rng.uniform(-3.0, 3.0);
    CHECK(norm(spec, c * v) == doctest::Approx(std::abs(c) * norm(spec, v)).epsilon(1e-12));
    CHECK(norm(spec, -v) == doctest::Approx(norm(spec, v)).epsilon(1e-14));
    const Point p = rng.point_in(Rect{Point(-5, -5), Point(5, 5)});
    const Point q = rng.point_in(Rect{Point(-5, -5), Point(5, 5)});
    const Point r = rng.point_in(Rect{Point(-5, -5), Point(5, 5)});
    const double slack = distance(spec, p, q) + distance(spec, q, r) - distance(spec, p, r);
    if (std::abs(cross(Point(q - p), Point(r - p))) > 1e-3) CHECK(slack > 0.0);
  }
}
