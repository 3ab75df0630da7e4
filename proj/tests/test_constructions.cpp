#include "intdist/constructions.hpp"
#include "intdist/enumerator.hpp"
#include "intdist/error.hpp"
#include "intdist/random.hpp"
#include "oracle/oracle.hpp"

#include <doctest.h>

using namespace intdist;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/5") == Rational(3, 5));
  CHECK(parse_rational("-0.28") == Rational(-7, 25));
  CHECK(parse_rational("12") == Rational(12));
  CHECK(to_string(Rational(-7, 25)) == "-7/25");
  CHECK(to_string(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK(exact_sqrt(Rational(9, 16)) == Rational(3, 4));
  CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
}

TEST_CASE("Pythagorean circle sets") {
  const RationalPointSet two = pythagorean_circle_set({3, 4, 5}, 2, false);
  REQUIRE(two.points.size() == 2);
  CHECK(two.points[1].x == Rational(-7, 25));
  CHECK(two.points[1].y == Rational(24, 25));
  CHECK(two.distances[0][1] == Rational(8, 5));
  CHECK(two.scale == 5);

  const RationalPointSet one = pythagorean_circle_set({3, 4, 5}, 1, true);
  CHECK(one.distances[0][1] == 1);

  for (const PythagoreanTriple& t : {PythagoreanTriple{3, 4, 5}, PythagoreanTriple{5, 12, 13}, PythagoreanTriple{8, 15, 17}}) {
    for (int n = 2; n <= 6; ++n) {
      const RationalPointSet set = pythagorean_circle_set(t, n, true);
      for (std::size_t k = 0; k + 1 < set.points.size(); ++k) {
        const RationalPoint& p = set.points[k];
        CHECK(p.x * p.x + p.y * p.y == 1);
      }
      const ExactDistanceCheck check = verify_integer_distances_exact(set);
      CHECK(check.ok);
      CHECK(check.diameter > 0);
      CHECK(verify_integer_distances(DistanceField::euclidean(), set.to_doubles(true)).ok);
    }
  }
  const RationalPointSet big = pythagorean_circle_set({3, 4, 5}, 4, true);
  CHECK(big.scale == 125);

  CHECK_THROWS_AS(pythagorean_circle_set({3, 4, 6}, 3, false), Error);
  CHECK_THROWS_AS(pythagorean_circle_set({3, 4, 5}, 0, false), Error);
  CHECK_THROWS_AS(pythagorean_circle_set({3, 4, 5}, 1, false), Error);
}

TEST_CASE("grid sets under L1 and L_inf") {
  CHECK(grid_set(1).size() == 1);
  const std::vector<Point> g2 = grid_set(2);
  CHECK(g2.size() == 4);
  const IntegerDistanceCheck l1 = verify_integer_distances(NormSpec::l1(), g2, 0.0);
  CHECK(l1.ok);
  CHECK(l1.matrix(0, 3) == 2.0);
  const IntegerDistanceCheck linf = verify_integer_distances(NormSpec::linf(), grid_set(3), 0.0);
  CHECK(linf.ok);
  CHECK(linf.matrix.maxCoeff() == 2.0);
  CHECK_FALSE(verify_integer_distances(DistanceField::euclidean(), g2).ok);
  CHECK_THROWS_AS(grid_set(0), Error);
}

TEST_CASE("slope distinctness") {
  const std::vector<Point> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const auto clash = slope_distinctness_check(square);
  REQUIRE(clash.has_value());
  CHECK(clash->first == std::array<std::size_t, 2>{0, 1});
  CHECK(clash->second == std::array<std::size_t, 2>{2, 3});

  const std::vector<Point> line{{0, 0}, {1, 1}, {3, 3}};
  CHECK(slope_distinctness_check(line).has_value());
  const std::vector<Point> tri{{0, 0}, {1, 0}, {0, 2}};
  CHECK_FALSE(slope_distinctness_check(tri).has_value());
  const std::vector<Point> dup{{0, 0}, {0, 0}};
  CHECK_THROWS_AS(slope_distinctness_check(dup), Error);
}

namespace {

void check_integral_norm(const std::vector<Point>& pts, const IntegralNorm& r) {
  const NormSpec spec = NormSpec::arcs(r.body);
  CHECK(strict_convexity_margin(spec) > 1e-9);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const auto t = static_cast<double>(r.target_distances(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
      CHECK(t >= 1.0);
      CHECK(std::abs(distance(spec, r.scaled_points[i], r.scaled_points[j]) - t) <= 1e-6);
      // Boundary vector of the pair lies on the body, checked independently.
      const Point b = (r.scaled_points[j] - r.scaled_points[i]) / t;
      CHECK(oracle::norm_by_bisection(spec, b) == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
  const IntegerDistanceCheck check = verify_integer_distances(spec, r.scaled_points);
  CHECK(check.ok);
  CHECK(check_diameter_bound(spec, r.scaled_points).n == static_cast<long>(pts.size()));
}

}  // namespace

TEST_CASE("strictly convex norm for a right triangle") {
  const std::vector<Point> pts{{0, 0}, {1, 0}, {0, 2}};
  const IntegralNorm r = norm_for_integer_distances(pts);
  // Golden values recorded from this construction.
  CHECK(r.target_distances(0, 1) == 12);
  CHECK(r.target_distances(0, 2) == 25);
  CHECK(r.target_distances(1, 2) == 28);
  CHECK(r.epsilon == doctest::Approx(0.0854102).epsilon(1e-6));
  CHECK(r.scale == doctest::Approx(12.7082).epsilon(1e-5));
  check_integral_norm(pts, r);
}

TEST_CASE("strictly convex norm for random four-point sets") {
  Rng rng(42);
  int built = 0;
  for (int attempt = 0; attempt < 20 && built < 3; ++attempt) {
    std::vector<Point> pts;
    for (int k = 0; k < 4; ++k) pts.push_back(rng.point_in(Rect{Point(0, 0), Point(1, 1)}));
    if (slope_distinctness_check(pts)) continue;
    try {
      const IntegralNorm r = norm_for_integer_distances(pts);
      check_integral_norm(pts, r);
      ++built;
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ConstructionFailed);
    }
  }
  CHECK(built >= 1);
}

TEST_CASE("norm construction refusals") {
  const std::vector<Point> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  try {
    norm_for_integer_distances(square);
    FAIL("expected a slope collision");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SlopeCollision);
  }
  const std::vector<Point> two{{0, 0}, {1, 0}};
  CHECK_THROWS_AS(norm_for_integer_distances(two), Error);
}
