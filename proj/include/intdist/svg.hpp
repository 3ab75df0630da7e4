#pragma once

// Static SVG output: ownership raster merged into run-length rectangles, with
// optional sites, triple points and degenerate rays on top.

#include "intdist/voronoi.hpp"

#include <string>
#include <vector>

namespace intdist {

struct RenderSpec {
  Rect bbox{Point(-1.0, -1.0), Point(1.0, 1.0)};
  int resolution = 800;
  std::vector<std::string> palette{"#f2c14e", "#3d7dd8", "#e0403a", "#49a84c", "#9b59b6", "#e67e22", "#1abc9c",
                                   "#7f8c8d"};
  struct Show {
    bool sites = true;
    bool triple_points = true;
    bool rays = true;
    bool grid = false;
  } show;
};

/// Throws Error(InvalidArgument) unless resolution is in [16, 8192], the bbox
/// has positive area and the palette is non-empty.
void validate(const RenderSpec& spec);

/// Endpoint of a degenerate site's ray cell inside the bbox: the ray leaves the
/// host cell there, or it reaches the bbox edge.
Point ray_end(const Diagram& diagram, std::size_t site, const Point& direction, const Rect& bbox);

/// Well-formed SVG document whose viewBox equals spec.bbox (y axis pointing up).
std::string render_svg(const Diagram& diagram, const RenderSpec& spec, std::span<const Point> triple_points = {});

}  // namespace intdist
