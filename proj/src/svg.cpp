#include "sqc/svg.hpp"

#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

namespace sqc {

namespace {

const char* color_of(int layer) {
  static const char* const palette[] = {"#4a7fd4", "#d4824a", "#7b4ad4", "#d44a6e", "#3fa66b",
                                        "#c9b22e", "#8a8a8a", "#2eb6c9", "#a64a3f", "#5d6f2e"};
  const int n = static_cast<int>(std::size(palette));
  return palette[((layer % n) + n) % n];
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

void points(std::ostringstream& os, const std::vector<Point>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << num(pts[i].x) << ',' << num(pts[i].y);
}

}  // namespace

std::string export_svg(const ChipLayout& layout, const SvgOptions& opt) {
  std::map<int, std::ostringstream> groups;
  for (const auto& [l, role] : layout.layers) groups[l];
  for (const auto& c : layout.components)
    for (const auto& s : c.footprint) {
      auto& os = groups[s.layer];
      os << "    <polygon data-owner=\"" << c.id << "\" points=\"";
      points(os, c.absolute(s));
      os << "\"/>\n";
    }
  for (const auto& p : layout.pins) {
    auto& os = groups[p.layer];
    os << "    <polygon data-owner=\"" << p.id << "\" points=\"";
    points(os, rect_polygon(p.rect()));
    os << "\"/>\n";
  }
  if (opt.show_paths)
    for (const auto& p : layout.paths) {
      auto& os = groups[p.layer];
      os << "    <polyline data-owner=\"" << p.net << "\" fill=\"none\" stroke-width=\"" << num(p.width)
         << "\" points=\"";
      points(os, p.centerline());
      os << "\"/>\n";
    }

  std::ostringstream svg;
  const double w = layout.width * opt.scale, h = layout.height * opt.scale;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(w) << "\" height=\"" << num(h)
      << "\" viewBox=\"0 0 " << num(layout.width) << ' ' << num(layout.height) << "\">\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << num(layout.width) << "\" height=\"" << num(layout.height)
      << "\" fill=\"#ffffff\" stroke=\"#000000\"/>\n"
      << "  <g transform=\"translate(0," << num(layout.height) << ") scale(1,-1)\">\n";
  for (auto& [l, os] : groups) {
    auto it = layout.layers.find(l);
    const std::string role = it == layout.layers.end() ? "unassigned" : to_string(it->second);
    svg << "  <g id=\"layer-" << l << "\" data-role=\"" << role << "\" fill=\"" << color_of(l) << "\" stroke=\""
        << color_of(l) << "\" fill-opacity=\"0.6\">\n"
        << os.str() << "  </g>\n";
  }
  svg << "  </g>\n</svg>\n";
  return svg.str();
}

}  // namespace sqc
