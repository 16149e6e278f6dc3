#pragma once

// SVG output for coronas.

#include "corona/bruteforce.hpp"

#include <array>
#include <string>

namespace corona {

struct StyleConfig {
  double scale = 40.0;        // pixels per lattice unit
  double stroke_width = 1.0;  // user units
  double margin = 10.0;       // user units around the drawing
  // Indexed by LozengeOrientation: left-tilted, right-tilted, vertical.
  std::array<std::string, 3> fills{"#d95f02", "#1b9e77", "#7570b3"};
  std::string outline_color = "#000000";
};

/// Lattice vertex (x, y) to SVG user coordinates: plane point
/// (x + y/2, y*sqrt(3)/2) times scale, y axis flipped, then shifted so that
/// the bounding box starts at the margin.
struct SvgFrame {
  double min_x = 0, max_y = 0, margin = 0, scale = 1;
  double width = 0, height = 0;
  std::array<double, 2> map(Vertex v) const;
};

/// Well-formed SVG 1.1 with one polygon per lozenge followed by the region
/// outline. Throws std::invalid_argument if the corona is not valid for r.
std::string render_corona(const Region& r, const Corona& c, const StyleConfig& style = {});

/// "<shape>_<s1-s2-...>_<index>.svg", e.g. "gen-diamond_1-2_7.svg".
std::string corona_file_name(const Shape& shape, std::size_t index);

}  // namespace corona
