#include "intdist/voronoi.hpp"

#include "intdist/error.hpp"

#include <limits>
#include <sstream>

namespace intdist {

Diagram::Diagram(DistanceField field, std::vector<WeightedSite> sites)
    : field_(std::move(field)), sites_(std::move(sites)) {
  if (sites_.empty()) throw Error(ErrorCode::InvalidArgument, "diagram needs at least one site");
  for (const WeightedSite& s : sites_) {
    if (!is_finite(s.point) || !std::isfinite(s.weight)) {
      throw Error(ErrorCode::InvalidArgument, "site fields must be finite");
    }
    if (field_.is_cone() && !(s.point.x() > 0.0)) {
      throw Error(ErrorCode::NonPositiveRadius, "cone sites need r > 0");
    }
  }
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    for (std::size_t j = i + 1; j < sites_.size(); ++j) {
      if (field_.dist(sites_[i].point, sites_[j].point) <= 1e-9) {
        std::ostringstream os;
        os << "sites " << i << " and " << j << " coincide";
        throw Error(ErrorCode::DuplicatePoint, os.str());
      }
    }
  }
}

double weighted_distance(const Diagram& diagram, std::size_t i, const Point& p) {
  if (i >= diagram.size()) {
    std::ostringstream os;
    os << "site index " << i << " out of range (" << diagram.size() << " sites)";
    throw Error(ErrorCode::IndexOutOfRange, os.str());
  }
  const WeightedSite& s = diagram.sites()[i];
  return diagram.field().dist(p, s.point) + s.weight;
}

std::vector<std::size_t> owners(const Diagram& diagram, const Point& p, double tol) {
  std::vector<double> d(diagram.size());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < d.size(); ++i) {
    d[i] = weighted_distance(diagram, i, p);
    best = std::min(best, d[i]);
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] <= best + tol) out.push_back(i);
  }
  return out;
}

std::vector<SiteClass> classify_sites(const Diagram& diagram, double tol) {
  const auto* np = diagram.field().plane();
  if (np == nullptr) throw Error(ErrorCode::UnsupportedField, "site classification needs a normed plane");
  if (!np->norm.strict()) throw Error(ErrorCode::NonStrictNorm, "site classification needs a strict norm");

  const auto& sites = diagram.sites();
  std::vector<SiteClass> out(sites.size());
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const double own = sites[i].weight;
    bool empty = false;
    double nearest_tie = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < sites.size() && !empty; ++j) {
      if (j == i) continue;
      const double dij = diagram.field().dist(sites[i].point, sites[j].point);
      const double other = dij + sites[j].weight;
      if (other < own - tol) {
        out[i] = SiteClass{SiteClass::Kind::EmptyCell, Point(0.0, 0.0), j};
        empty = true;
      } else if (std::abs(other - own) <= tol && dij < nearest_tie) {
        nearest_tie = dij;
        const Point away = (sites[i].point - sites[j].point).normalized();
        out[i] = SiteClass{SiteClass::Kind::DegenerateRay, away, j};
      }
    }
  }
  return out;
}

OwnerGrid cell_raster(const Diagram& diagram, const Rect& bbox, int resolution, double tol) {
  if (resolution < 2) throw Error(ErrorCode::InvalidArgument, "raster resolution must be at least 2");
  if (!(bbox.width() > 0.0) || !(bbox.height() > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "raster bbox must have positive extent");
  }
  OwnerGrid grid{bbox, resolution, std::vector<int>(static_cast<std::size_t>(resolution) * resolution, 0)};
  for (int row = 0; row < resolution; ++row) {
    for (int col = 0; col < resolution; ++col) {
      const auto who = owners(diagram, grid.pixel_center(row, col), tol);
      grid.labels[static_cast<std::size_t>(row) * resolution + col] = static_cast<int>(who.front());
    }
  }
  return grid;
}

}  // namespace intdist
