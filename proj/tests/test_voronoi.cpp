#include "intdist/error.hpp"
#include "intdist/voronoi.hpp"

#include <doctest.h>

using namespace intdist;

namespace {

// The figure configuration: yellow (-1,0) and blue (1,0) non-degenerate, red
// (-2,0) on a ray, green (2,0) empty.
std::vector<WeightedSite> figure_sites() {
  return {{{-1, 0}, 0.0}, {{1, 0}, 0.0}, {{-2, 0}, 1.0}, {{2, 0}, 2.0}};
}

}  // namespace

TEST_CASE("weighted distance") {
  const Diagram d(DistanceField::euclidean(), {{{0, 0}, 1.0}});
  CHECK(weighted_distance(d, 0, {3, 4}) == doctest::Approx(6.0));
  CHECK_THROWS_AS(weighted_distance(d, 1, {0, 0}), Error);
  const Diagram t(FlatTorus({1, 0}, {0, 1}), {{{0.1, 0.1}, 0.5}});
  CHECK(weighted_distance(t, 0, {0.9, 0.1}) == doctest::Approx(0.7));
  const Diagram z(DistanceField::euclidean(), {{{1, 1}, 0.0}});
  CHECK(weighted_distance(z, 0, {4, 5}) == doctest::Approx(5.0));
}

TEST_CASE("owners") {
  const Diagram d(DistanceField::euclidean(), {{{0, 0}, 0.0}, {{2, 0}, 0.0}});
  CHECK(owners(d, {1, 0}) == std::vector<std::size_t>{0, 1});
  CHECK(owners(d, {0.5, 0}) == std::vector<std::size_t>{0});
  const Diagram f(DistanceField::euclidean(), figure_sites());
  for (double x : {-2.0, -2.5, -3.0, -7.0}) {
    const auto o = owners(f, {x, 0.0});
    CHECK(std::find(o.begin(), o.end(), 2) != o.end());
  }
  const auto off = owners(f, {-3.0, 0.01});
  CHECK(std::find(off.begin(), off.end(), 2) == off.end());
  CHECK_THROWS_AS(Diagram(DistanceField::euclidean(), {{{0, 0}, 0.0}, {{0, 0}, 1.0}}), Error);
  CHECK_THROWS_AS(Diagram(DistanceField::euclidean(), {}), Error);
}

TEST_CASE("site classification") {
  const Diagram f(DistanceField::euclidean(), figure_sites());
  const auto cls = classify_sites(f);
  REQUIRE(cls.size() == 4);
  CHECK(cls[0].kind == SiteClass::Kind::NonDegenerate);
  CHECK(cls[1].kind == SiteClass::Kind::NonDegenerate);
  CHECK(cls[2].kind == SiteClass::Kind::DegenerateRay);
  CHECK(cls[2].direction.x() == doctest::Approx(-1.0));
  CHECK(cls[2].direction.y() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(cls[2].host == 0);
  CHECK(cls[3].kind == SiteClass::Kind::EmptyCell);

  // Each class by definition, on a dense sample around the sites.
  for (int i = -40; i <= 40; ++i) {
    for (int j = -40; j <= 40; ++j) {
      const Point p(0.1 * i, 0.1 * j + 0.0037);
      const auto o = owners(f, p);
      CHECK(std::find(o.begin(), o.end(), 3) == o.end());
      CHECK(std::find(o.begin(), o.end(), 2) == o.end());
    }
  }

  CHECK(classify_sites(Diagram(DistanceField::euclidean(), {{{0, 0}, 0.0}}))[0].kind ==
        SiteClass::Kind::NonDegenerate);
  const auto two = classify_sites(Diagram(DistanceField::euclidean(), {{{0, 0}, 1.0}, {{3, 1}, 1.0}}));
  CHECK(two[0].kind == SiteClass::Kind::NonDegenerate);
  CHECK(two[1].kind == SiteClass::Kind::NonDegenerate);
  CHECK_THROWS_AS(classify_sites(Diagram(NormSpec::l1(), {{{0, 0}, 0.0}})), Error);
  CHECK_THROWS_AS(classify_sites(Diagram(FlatTorus({1, 0}, {0, 1}), {{{0, 0}, 0.0}})), Error);
}

TEST_CASE("cell raster") {
  const Rect box{Point(-4, -4), Point(4, 4)};
  const OwnerGrid one = cell_raster(Diagram(DistanceField::euclidean(), {{{0, 0}, 0.0}}), box, 32);
  CHECK(std::all_of(one.labels.begin(), one.labels.end(), [](int l) { return l == 0; }));

  // Two symmetric sites: labels split at the bisector column.
  const OwnerGrid two = cell_raster(Diagram(DistanceField::euclidean(), {{{-1, 0}, 0.0}, {{1, 0}, 0.0}}), box, 64);
  for (int row = 0; row < 64; ++row) {
    for (int col = 0; col < 64; ++col) CHECK(two.at(row, col) == (col < 32 ? 0 : 1));
  }

  // Figure configuration with the red site first, so ties on its ray label it.
  // Resolution 81 puts the centre of row 40 exactly on y = 0.
  std::vector<WeightedSite> sites = figure_sites();
  std::swap(sites[0], sites[2]);
  const OwnerGrid fig = cell_raster(Diagram(DistanceField::euclidean(), sites), box, 81);
  int red = 0;
  for (int row = 0; row < 81; ++row) {
    for (int col = 0; col < 81; ++col) {
      if (fig.at(row, col) != 0) continue;
      ++red;
      CHECK(row == 40);
      CHECK(fig.pixel_center(row, col).x() <= -2.0 + 1e-12);
    }
  }
  CHECK(red == 20);
  CHECK_THROWS_AS(cell_raster(Diagram(DistanceField::euclidean(), {{{0, 0}, 0.0}}), box, 1), Error);
}
