#include "intdist/svg.hpp"

#include "intdist/error.hpp"

#include <cstdio>
#include <sstream>

namespace intdist {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

const std::string& color(const RenderSpec& spec, int label) {
  return spec.palette[static_cast<std::size_t>(label) % spec.palette.size()];
}

// Parameter where the ray from p along d leaves the bbox.
double exit_parameter(const Point& p, const Point& d, const Rect& box) {
  double t = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 2; ++k) {
    if (d[k] > 0.0) t = std::min(t, (box.hi[k] - p[k]) / d[k]);
    if (d[k] < 0.0) t = std::min(t, (box.lo[k] - p[k]) / d[k]);
  }
  return std::max(0.0, t);
}

}  // namespace

void validate(const RenderSpec& spec) {
  if (spec.resolution < 16 || spec.resolution > 8192) {
    throw Error(ErrorCode::InvalidArgument, "render resolution must lie in [16, 8192]");
  }
  if (!(spec.bbox.width() > 0.0) || !(spec.bbox.height() > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "render bbox must have positive area");
  }
  if (spec.palette.empty()) throw Error(ErrorCode::InvalidArgument, "render palette is empty");
}

Point ray_end(const Diagram& diagram, std::size_t site, const Point& direction, const Rect& bbox) {
  const Point start = diagram.sites()[site].point;
  auto owns = [&](double t) {
    const auto o = owners(diagram, Point(start + t * direction), 1e-7);
    return std::find(o.begin(), o.end(), site) != o.end();
  };
  const double t_max = exit_parameter(start, direction, bbox);
  if (!std::isfinite(t_max) || t_max == 0.0) return start;
  // March to the first loss of ownership, then bisect.
  constexpr int kSteps = 1024;
  double lo = 0.0;
  for (int k = 1; k <= kSteps; ++k) {
    const double t = t_max * k / kSteps;
    if (!owns(t)) {
      double hi = t;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (owns(mid) ? lo : hi) = mid;
      }
      return start + lo * direction;
    }
    lo = t;
  }
  return start + t_max * direction;
}

std::string render_svg(const Diagram& diagram, const RenderSpec& spec, std::span<const Point> triple_points) {
  validate(spec);
  const Rect& box = spec.bbox;
  const int n = spec.resolution;
  const double px = box.width() / n;
  const double py = box.height() / n;
  const double mark = 0.006 * std::max(box.width(), box.height());

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(box.lo.x()) << ' ' << fmt(box.lo.y()) << ' '
     << fmt(box.width()) << ' ' << fmt(box.height()) << "\" width=\"" << n << "\" height=\"" << n << "\">\n";
  // Flip y inside the viewBox so larger y is drawn higher.
  os << "<g transform=\"matrix(1 0 0 -1 0 " << fmt(box.lo.y() + box.hi.y()) << ")\">\n";

  const OwnerGrid grid = cell_raster(diagram, box, n);
  os << "<g id=\"cells\" shape-rendering=\"crispEdges\">\n";
  for (int row = 0; row < n; ++row) {
    int col = 0;
    while (col < n) {
      const int label = grid.at(row, col);
      int end = col + 1;
      while (end < n && grid.at(row, end) == label) ++end;
      os << "<rect x=\"" << fmt(box.lo.x() + col * px) << "\" y=\"" << fmt(box.lo.y() + row * py) << "\" width=\""
         << fmt((end - col) * px) << "\" height=\"" << fmt(py) << "\" fill=\"" << color(spec, label) << "\"/>\n";
      col = end;
    }
  }
  os << "</g>\n";

  if (spec.show.grid) {
    os << "<g id=\"grid\" stroke=\"#000000\" stroke-opacity=\"0.15\" stroke-width=\"" << fmt(0.5 * px) << "\">\n";
    for (double x = std::ceil(box.lo.x()); x <= box.hi.x(); x += 1.0) {
      os << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(box.lo.y()) << "\" x2=\"" << fmt(x) << "\" y2=\""
         << fmt(box.hi.y()) << "\"/>\n";
    }
    for (double y = std::ceil(box.lo.y()); y <= box.hi.y(); y += 1.0) {
      os << "<line x1=\"" << fmt(box.lo.x()) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(box.hi.x()) << "\" y2=\""
         << fmt(y) << "\"/>\n";
    }
    os << "</g>\n";
  }

  if (spec.show.rays && diagram.field().is_strict_plane()) {
    const std::vector<SiteClass> classes = classify_sites(diagram);
    os << "<g id=\"rays\" stroke-linecap=\"butt\">\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (classes[i].kind != SiteClass::Kind::DegenerateRay) continue;
      const Point a = diagram.sites()[i].point;
      const Point b = ray_end(diagram, i, classes[i].direction, box);
      os << "<line x1=\"" << fmt(a.x()) << "\" y1=\"" << fmt(a.y()) << "\" x2=\"" << fmt(b.x()) << "\" y2=\""
         << fmt(b.y()) << "\" stroke=\"" << color(spec, static_cast<int>(i)) << "\" stroke-width=\""
         << fmt(std::min(px, py)) << "\"/>\n";
    }
    os << "</g>\n";
  }

  if (spec.show.sites) {
    os << "<g id=\"sites\" stroke=\"#000000\" stroke-width=\"" << fmt(0.3 * mark) << "\">\n";
    for (std::size_t i = 0; i < diagram.size(); ++i) {
      const Point p = diagram.sites()[i].point;
      os << "<circle cx=\"" << fmt(p.x()) << "\" cy=\"" << fmt(p.y()) << "\" r=\"" << fmt(mark) << "\" fill=\""
         << color(spec, static_cast<int>(i)) << "\"/>\n";
    }
    os << "</g>\n";
  }

  if (spec.show.triple_points && !triple_points.empty()) {
    os << "<g id=\"triple-points\" fill=\"#000000\">\n";
    for (const Point& p : triple_points) {
      os << "<rect x=\"" << fmt(p.x() - mark) << "\" y=\"" << fmt(p.y() - mark) << "\" width=\"" << fmt(2 * mark)
         << "\" height=\"" << fmt(2 * mark) << "\"/>\n";
    }
    os << "</g>\n";
  }

  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace intdist
