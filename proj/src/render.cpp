#include "corona/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace corona {

namespace {

constexpr double kRowHeight = 0.86602540378443864676;  // sqrt(3)/2

double plane_x(Vertex v) { return v.x + 0.5 * v.y; }
double plane_y(Vertex v) { return kRowHeight * v.y; }

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

template <typename Range>
std::string points_attr(const SvgFrame& frame, const Range& vs) {
  std::string out;
  for (const auto& v : vs) {
    if (!out.empty()) out += ' ';
    const auto p = frame.map(v);
    out += fixed6(p[0]) + "," + fixed6(p[1]);
  }
  return out;
}

}  // namespace

std::array<double, 2> SvgFrame::map(Vertex v) const {
  return {(plane_x(v) - min_x) * scale + margin, (max_y - plane_y(v)) * scale + margin};
}

std::string render_corona(const Region& r, const Corona& c, const StyleConfig& style) {
  if (auto check = is_valid_corona(r, c.lozenges); !check)
    throw std::invalid_argument("cannot render invalid corona: " + to_string(check.violation) + " " + check.detail);

  double min_x = std::numeric_limits<double>::max(), max_x = std::numeric_limits<double>::lowest();
  double min_y = std::numeric_limits<double>::max(), max_y = std::numeric_limits<double>::lowest();
  auto extend = [&](Vertex v) {
    min_x = std::min(min_x, plane_x(v));
    max_x = std::max(max_x, plane_x(v));
    min_y = std::min(min_y, plane_y(v));
    max_y = std::max(max_y, plane_y(v));
  };
  for (const auto& v : r.corners) extend(v);
  for (const auto& l : c.lozenges)
    for (const auto& v : l.outline()) extend(v);

  SvgFrame frame;
  frame.min_x = min_x;
  frame.max_y = max_y;
  frame.margin = style.margin;
  frame.scale = style.scale;
  frame.width = (max_x - min_x) * style.scale + 2 * style.margin;
  frame.height = (max_y - min_y) * style.scale + 2 * style.margin;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed6(frame.width) << "\" height=\""
     << fixed6(frame.height) << "\" viewBox=\"0 0 " << fixed6(frame.width) << ' ' << fixed6(frame.height) << "\">\n";
  os << "<g stroke=\"" << style.outline_color << "\" stroke-width=\"" << fixed6(style.stroke_width)
     << "\" stroke-linejoin=\"round\">\n";
  for (const auto& l : c.lozenges) {
    const auto& fill = style.fills[static_cast<std::size_t>(l.orientation())];
    os << "<polygon class=\"" << to_string(l.orientation()) << "\" fill=\"" << fill << "\" points=\""
       << points_attr(frame, l.outline()) << "\"/>\n";
  }
  os << "<polygon class=\"region\" fill=\"none\" stroke-width=\"" << fixed6(2 * style.stroke_width) << "\" points=\""
     << points_attr(frame, r.corners) << "\"/>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string corona_file_name(const Shape& shape, std::size_t index) {
  std::string sides;
  for (int s : shape.declared_sides()) {
    if (!sides.empty()) sides += '-';
    sides += std::to_string(s);
  }
  return to_string(shape.kind) + "_" + sides + "_" + std::to_string(index) + ".svg";
}

}  // namespace corona
