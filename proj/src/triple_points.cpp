#include "intdist/triple_points.hpp"

#include "intdist/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace intdist {

namespace {

using Vec = Eigen::Vector2d;

// Root function (D1 - D2, D1 - D3).
struct Equations {
  const DistanceField& field;
  const SiteTriple& sites;

  Vec operator()(const Point& p) const {
    const double d1 = field.dist(p, sites[0].point) + sites[0].weight;
    const double d2 = field.dist(p, sites[1].point) + sites[1].weight;
    const double d3 = field.dist(p, sites[2].point) + sites[2].weight;
    return {d1 - d2, d1 - d3};
  }
};

double residual_of(const Vec& g) { return std::max({std::abs(g[0]), std::abs(g[1]), std::abs(g[0] - g[1])}); }

struct NewtonResult {
  Point point;
  double residual = std::numeric_limits<double>::infinity();
  int iterations = 0;
};

// Damped Newton with a Levenberg-Marquardt fallback for near-singular
// Jacobians (tangential or one-sided zero sets).
NewtonResult newton(const Equations& eq, Point p, const SolverOptions& opt) {
  Vec g = eq(p);
  double f = g.squaredNorm();
  NewtonResult out{p, residual_of(g), 0};
  const double h = opt.fd_step;
  for (int it = 0; it < opt.max_newton_iterations; ++it) {
    out.iterations = it + 1;
    if (residual_of(g) <= 1e-15 * (1.0 + p.norm())) break;
    Eigen::Matrix2d jac;
    for (int k = 0; k < 2; ++k) {
      Point step = Point::Zero();
      step[k] = h;
      jac.col(k) = (eq(p + step) - eq(p - step)) / (2.0 * h);
    }
    Vec delta;
    const double scale = jac.squaredNorm();
    if (scale == 0.0) break;
    if (std::abs(jac.determinant()) > 1e-12 * scale) {
      delta = -jac.partialPivLu().solve(g);
    } else {
      const Eigen::Matrix2d normal = jac.transpose() * jac + 1e-10 * scale * Eigen::Matrix2d::Identity();
      delta = -normal.ldlt().solve(jac.transpose() * g);
    }
    if (!delta.allFinite()) break;
    double alpha = 1.0;
    bool improved = false;
    for (int ls = 0; ls < 40; ++ls, alpha *= 0.5) {
      const Point trial = p + alpha * delta;
      const Vec gt = eq(trial);
      if (gt.squaredNorm() < f) {
        p = trial;
        g = gt;
        f = gt.squaredNorm();
        improved = true;
        break;
      }
    }
    if (!improved) break;
    if ((alpha * delta).norm() <= 1e-16 * (1.0 + p.norm())) break;
  }
  out.point = p;
  out.residual = residual_of(g);
  return out;
}

// Chart over the search region: planes use Cartesian coordinates of the
// square; tori use lattice coordinates in [0, 1]^2.
struct Chart {
  Point origin;
  Eigen::Matrix2d basis;  // chart (a, b) -> origin + basis * (a, b)
  double lipschitz;       // bound for each component of the equations in chart units

  Point map(double a, double b) const { return origin + basis * Vec(a, b); }
};

struct Cell {
  double a, b, w, h;
};

constexpr std::size_t kMaxLeaves = 20000;
constexpr std::size_t kSeedsPerComponent = 64;

class Searcher {
 public:
  Searcher(const DistanceField& field, const SiteTriple& sites, const SolverOptions& opt)
      : field_(field), sites_(sites), opt_(opt), eq_{field, sites} {}

  TriplePointSet run();

 private:
  Chart make_chart() const;
  bool may_hold_root(const Cell& c) const;
  std::vector<Cell> split(const std::vector<Cell>& cells, std::size_t cap) const;
  void try_seed(const Point& seed);
  void descend(const Cell& leaf);
  void far_field_seeds();
  void seed_components(const std::vector<Cell>& leaves, long cells_per_side);
  void add_root(const Point& p, double residual);
  std::vector<std::pair<Point, double>> merged_roots() const;

  const DistanceField& field_;
  const SiteTriple& sites_;
  const SolverOptions& opt_;
  Equations eq_;
  Chart chart_;
  std::vector<std::pair<Point, double>> roots_;
  SolverStats stats_;
};

Chart Searcher::make_chart() const {
  const Rect region = triple_search_region(field_, sites_, opt_.margin_factor);
  if (const auto* t = field_.torus()) {
    const Eigen::Matrix2d& b = t->reduced_basis();
    // Spectral norm is bounded by the Frobenius norm.
    return Chart{Point::Zero(), b, 2.0 * field_.lipschitz(region) * b.norm()};
  }
  Eigen::Matrix2d b;
  b << region.width(), 0.0, 0.0, region.height();
  return Chart{region.lo, b, 2.0 * field_.lipschitz(region) * std::max(region.width(), region.height())};
}

bool Searcher::may_hold_root(const Cell& c) const {
  const Vec g = eq_(chart_.map(c.a + 0.5 * c.w, c.b + 0.5 * c.h));
  const double bound = chart_.lipschitz * 0.5 * std::hypot(c.w, c.h) * (1.0 + 1e-9) + 1e-12;
  return std::abs(g[0]) <= bound && std::abs(g[1]) <= bound;
}

std::vector<Cell> Searcher::split(const std::vector<Cell>& cells, std::size_t cap) const {
  std::vector<Cell> out;
  for (const Cell& c : cells) {
    const double w = 0.5 * c.w;
    const double h = 0.5 * c.h;
    for (const Cell& child : {Cell{c.a, c.b, w, h}, Cell{c.a + w, c.b, w, h}, Cell{c.a, c.b + h, w, h},
                              Cell{c.a + w, c.b + h, w, h}}) {
      if (may_hold_root(child)) out.push_back(child);
    }
    if (out.size() > cap) break;
  }
  return out;
}

void Searcher::add_root(const Point& p, double residual) { roots_.emplace_back(field_.canonical(p), residual); }

void Searcher::try_seed(const Point& seed) {
  ++stats_.seeds_tried;
  const NewtonResult r = newton(eq_, seed, opt_);
  stats_.newton_iterations += static_cast<std::size_t>(r.iterations);
  if (r.residual < opt_.residual_tol) add_root(r.point, r.residual);
}

// Fallback for leaves where Newton stalls (roots on kinks of the distance):
// keep subdividing with the exclusion test until the cell is tiny.
void Searcher::descend(const Cell& leaf) {
  std::vector<Cell> cells{leaf};
  for (int level = 0; level < 36 && !cells.empty(); ++level) {
    cells = split(cells, 4096);
    if (cells.size() > 64) {
      std::vector<std::pair<double, Cell>> ranked;
      for (const Cell& c : cells) {
        ranked.emplace_back(residual_of(eq_(chart_.map(c.a + 0.5 * c.w, c.b + 0.5 * c.h))), c);
      }
      std::sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      cells.clear();
      for (std::size_t k = 0; k < 64; ++k) cells.push_back(ranked[k].second);
    }
  }
  for (const Cell& c : cells) {
    const Point p = chart_.map(c.a + 0.5 * c.w, c.b + 0.5 * c.h);
    const double r = residual_of(eq_(p));
    if (r < opt_.residual_tol) add_root(p, r);
  }
}

void Searcher::far_field_seeds() {
  const Rect region = triple_search_region(field_, sites_, opt_.margin_factor);
  const Point center = region.center();
  const double inner = 0.5 * std::min(region.width(), region.height());
  const int na = opt_.far_angles;
  const int ns = opt_.far_shells;
  // rho = inner / s with s in (0, 1]; s spaced geometrically down to 1e-4.
  std::vector<double> shells(static_cast<std::size_t>(ns) + 1);
  for (int k = 0; k <= ns; ++k) shells[k] = std::pow(1e-4, static_cast<double>(k) / ns);
  auto at = [&](int ia, int ks) {
    const double theta = kTwoPi * ia / na;
    return Point(center + inner / shells[ks] * unit_direction(theta));
  };
  std::vector<Vec> values(static_cast<std::size_t>(na) * (ns + 1));
  for (int ia = 0; ia < na; ++ia) {
    for (int ks = 0; ks <= ns; ++ks) values[static_cast<std::size_t>(ia) * (ns + 1) + ks] = eq_(at(ia, ks));
  }
  for (int ia = 0; ia < na; ++ia) {
    const int ib = (ia + 1) % na;
    for (int ks = 0; ks < ns; ++ks) {
      const Vec c[4] = {values[static_cast<std::size_t>(ia) * (ns + 1) + ks],
                        values[static_cast<std::size_t>(ib) * (ns + 1) + ks],
                        values[static_cast<std::size_t>(ia) * (ns + 1) + ks + 1],
                        values[static_cast<std::size_t>(ib) * (ns + 1) + ks + 1]};
      bool changes[2] = {false, false};
      for (int comp = 0; comp < 2; ++comp) {
        double lo = c[0][comp], hi = c[0][comp];
        for (const Vec& v : c) {
          lo = std::min(lo, v[comp]);
          hi = std::max(hi, v[comp]);
        }
        changes[comp] = lo <= 0.0 && hi >= 0.0;
      }
      if (changes[0] && changes[1]) {
        const double theta = kTwoPi * (ia + 0.5) / na;
        const double s = std::sqrt(shells[ks] * shells[ks + 1]);
        try_seed(center + inner / s * unit_direction(theta));
      }
    }
  }
}

// Leaves that touch form one component (a root blob, or a strip along which
// two zero sets run close together). Newton starts from the best-residual
// leaves plus a spread of others; the deep descent runs only when all fail.
void Searcher::seed_components(const std::vector<Cell>& leaves, long cells_per_side) {
  if (leaves.empty()) return;
  const double side = 1.0 / static_cast<double>(cells_per_side);
  std::map<std::pair<long, long>, std::size_t> index;
  std::vector<std::pair<long, long>> ij(leaves.size());
  for (std::size_t k = 0; k < leaves.size(); ++k) {
    ij[k] = {std::lround(leaves[k].a / side), std::lround(leaves[k].b / side)};
    index[ij[k]] = k;
  }
  std::vector<std::size_t> parent(leaves.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t k = 0; k < leaves.size(); ++k) {
    for (long di = -1; di <= 1; ++di) {
      for (long dj = -1; dj <= 1; ++dj) {
        const auto it = index.find({ij[k].first + di, ij[k].second + dj});
        if (it != index.end()) parent[find(it->second)] = find(k);
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> components;
  for (std::size_t k = 0; k < leaves.size(); ++k) components[find(k)].push_back(k);

  auto center = [&](std::size_t k) {
    const Cell& c = leaves[k];
    return chart_.map(c.a + 0.5 * c.w, c.b + 0.5 * c.h);
  };
  for (auto& [root, members] : components) {
    std::vector<std::pair<double, std::size_t>> ranked;
    for (std::size_t k : members) ranked.emplace_back(residual_of(eq_(center(k))), k);
    std::sort(ranked.begin(), ranked.end());
    std::vector<std::size_t> seeds;
    const std::size_t best = std::min(ranked.size(), kSeedsPerComponent / 4);
    for (std::size_t r = 0; r < best; ++r) seeds.push_back(ranked[r].second);
    if (members.size() > best) {
      // Spread the remaining starts over the component in grid order.
      const std::size_t rest = kSeedsPerComponent - best;
      const double stride = std::max(1.0, static_cast<double>(members.size()) / static_cast<double>(rest));
      for (double r = 0.0; r < static_cast<double>(members.size()); r += stride) {
        seeds.push_back(members[static_cast<std::size_t>(r)]);
      }
    }
    const std::size_t before = roots_.size();
    for (std::size_t k : seeds) try_seed(center(k));
    if (roots_.size() == before) {
      for (std::size_t r = 0; r < std::min<std::size_t>(4, ranked.size()); ++r) descend(leaves[ranked[r].second]);
    }
  }
}

std::vector<std::pair<Point, double>> Searcher::merged_roots() const {
  auto sorted = roots_;
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    return x.first.x() < y.first.x() || (x.first.x() == y.first.x() && x.first.y() < y.first.y());
  });
  std::vector<std::pair<Point, double>> kept;
  for (const auto& cand : sorted) {
    bool merged = false;
    for (auto& k : kept) {
      const Point d = field_.displacement(k.first, cand.first);
      bool same = d.norm() < opt_.dedup_radius;
      if (!same && d.norm() < 1e-3) {
        // Two ends of one root blob: the whole segment between them is a root.
        same = true;
        for (int s = 1; s < 8 && same; ++s) {
          same = residual_of(eq_(k.first + d * (s / 8.0))) < opt_.residual_tol;
        }
      }
      if (same) {
        if (cand.second < k.second) k = cand;
        merged = true;
        break;
      }
    }
    if (!merged) kept.push_back(cand);
  }
  std::sort(kept.begin(), kept.end(), [](const auto& x, const auto& y) {
    return x.first.x() < y.first.x() || (x.first.x() == y.first.x() && x.first.y() < y.first.y());
  });
  return kept;
}

TriplePointSet Searcher::run() {
  chart_ = make_chart();

  // Sites are kinks of the distance; test them directly.
  for (const WeightedSite& s : sites_) {
    const double r = residual_of(eq_(s.point));
    if (r < opt_.residual_tol) add_root(s.point, r);
  }

  const int n = opt_.coarse_grid;
  const double step = 1.0 / n;
  std::vector<Cell> cells;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Cell c{i * step, j * step, step, step};
      if (may_hold_root(c)) cells.push_back(c);
    }
  }
  int level = 0;
  for (; level < opt_.leaf_depth && !cells.empty(); ++level) {
    auto next = split(cells, kMaxLeaves);
    if (next.size() > kMaxLeaves) break;
    cells = std::move(next);
  }
  seed_components(cells, n << level);

  if (opt_.far_field && field_.plane() != nullptr) far_field_seeds();

  TriplePointSet out;
  for (const auto& [p, r] : merged_roots()) {
    out.points.push_back(p);
    out.residuals.push_back(r);
  }
  out.stats = stats_;
  return out;
}

}  // namespace

bool is_collinear(const Point& a, const Point& b, const Point& c) {
  const double longest = std::max({(b - a).squaredNorm(), (c - b).squaredNorm(), (a - c).squaredNorm()});
  const double area = 0.5 * std::abs(cross(Point(b - a), Point(c - a)));
  return area < 1e-9 * longest;
}

double triple_residual(const DistanceField& field, const SiteTriple& sites, const Point& p) {
  return residual_of(Equations{field, sites}(p));
}

Rect triple_search_region(const DistanceField& field, const SiteTriple& sites, double margin_factor) {
  if (field.torus() != nullptr) {
    const std::array<Point, 3> pts{sites[0].point, sites[1].point, sites[2].point};
    return field.bounding_hint(pts);
  }
  double spread = 0.0;
  double wmax = 0.0;
  Point centroid = Point::Zero();
  for (std::size_t i = 0; i < 3; ++i) {
    centroid += sites[i].point / 3.0;
    wmax = std::max(wmax, std::abs(sites[i].weight));
    for (std::size_t j = i + 1; j < 3; ++j) spread = std::max(spread, field.dist(sites[i].point, sites[j].point));
  }
  const double half = margin_factor * (spread + wmax);
  return Rect{centroid - Point::Constant(half), centroid + Point::Constant(half)};
}

std::size_t triple_point_cap(const DistanceField& field) {
  if (field.torus() != nullptr) return static_cast<std::size_t>(max_equidistant_bound(FlatTorus::kEulerGenus));
  return static_cast<std::size_t>(max_equidistant_bound(0));
}

TriplePointSet triple_points(const DistanceField& field, const SiteTriple& sites, const SolverOptions& options) {
  if (field.is_cone()) throw Error(ErrorCode::UnsupportedField, "triple points are solved on planes and tori only");
  if (const auto* np = field.plane(); np != nullptr && !np->norm.strict()) {
    throw Error(ErrorCode::NonStrictNorm, "triple points need a strictly convex norm");
  }
  for (const WeightedSite& s : sites) {
    if (!is_finite(s.point) || !std::isfinite(s.weight)) {
      throw Error(ErrorCode::InvalidArgument, "site fields must be finite");
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (field.dist(sites[i].point, sites[j].point) <= 1e-9) {
        throw Error(ErrorCode::DuplicatePoint, "triple-point sites must be pairwise distinct");
      }
    }
  }
  if (field.plane() != nullptr && is_collinear(sites[0].point, sites[1].point, sites[2].point)) {
    throw Error(ErrorCode::CollinearSites, "planar triple-point sites must not be collinear");
  }

  TriplePointSet out = Searcher(field, sites, options).run();
  const std::size_t cap = triple_point_cap(field);
  if (out.points.size() > cap) {
    std::ostringstream os;
    os << out.points.size() << " triple points exceed the cap of " << cap;
    throw Error(ErrorCode::BoundViolation, os.str());
  }
  return out;
}

}  // namespace intdist
