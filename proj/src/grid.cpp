#include "sqc/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "sqc/error.hpp"

namespace sqc {

GridGraph::GridGraph(int c, int r, double cs, Point o)
    : cell_size(cs), origin(o), cols(c), rows(r),
      blocked(static_cast<std::size_t>(c) * r, 0), occupancy(static_cast<std::size_t>(c) * r, 0) {}

Point GridGraph::center(Cell c) const {
  return {origin.x + (c.x + 0.5) * cell_size, origin.y + (c.y + 0.5) * cell_size};
}

Cell GridGraph::cell_of(Point p) const {
  const int x = static_cast<int>(std::floor((p.x - origin.x) / cell_size));
  const int y = static_cast<int>(std::floor((p.y - origin.y) / cell_size));
  return {std::clamp(x, 0, cols - 1), std::clamp(y, 0, rows - 1)};
}

GridGraph build_grid(const ChipLayout& layout, double cell_size, double clearance, bool allow_diagonal,
                     Point origin) {
  if (!(cell_size > 0.0)) fail(ErrorCode::InvalidArguments, "cell size must be positive");
  if (!(clearance >= 0.0)) fail(ErrorCode::InvalidArguments, "clearance must be non-negative");
  const int cols = static_cast<int>(std::floor((layout.width - origin.x) / cell_size + 1e-9));
  const int rows = static_cast<int>(std::floor((layout.height - origin.y) / cell_size + 1e-9));
  if (cols < 1 || rows < 1)
    fail(ErrorCode::DegenerateGrid, "die is smaller than one " + std::to_string(cell_size) + " um cell");
  GridGraph g(cols, rows, cell_size, origin);
  g.allow_diagonal = allow_diagonal;

  for (const auto& comp : layout.components) {
    for (const auto& shape : comp.footprint) {
      const Polygon poly = comp.absolute(shape);
      const Rect box = bounding_box(poly).inflated(clearance);
      const Cell lo = g.cell_of({box.x0, box.y0}), hi = g.cell_of({box.x1, box.y1});
      const bool is_rect = poly.size() == 4 && rect_polygon(bounding_box(poly)) == poly;
      for (int y = lo.y; y <= hi.y; ++y) {
        for (int x = lo.x; x <= hi.x; ++x) {
          const Cell c{x, y};
          if (g.is_blocked(c)) continue;
          const Rect cell{origin.x + x * cell_size, origin.y + y * cell_size, origin.x + (x + 1) * cell_size,
                          origin.y + (y + 1) * cell_size};
          bool hit;
          if (is_rect) {
            const Rect r = bounding_box(poly);
            const double dx = std::max({0.0, r.x0 - cell.x1, cell.x0 - r.x1});
            const double dy = std::max({0.0, r.y0 - cell.y1, cell.y0 - r.y1});
            hit = std::hypot(dx, dy) <= clearance;
          } else {
            // The centre distance brackets the cell distance within half a diagonal.
            const double dc = point_polygon_distance({(cell.x0 + cell.x1) / 2, (cell.y0 + cell.y1) / 2}, poly);
            if (dc <= clearance)
              hit = true;
            else if (dc - cell_size * 0.7072 > clearance)
              hit = false;
            else
              hit = polygon_distance(rect_polygon(cell), poly) <= clearance;
          }
          if (hit) g.set_blocked(c);
        }
      }
    }
  }
  return g;
}

std::vector<Cell> GridPath::expanded() const {
  std::vector<Cell> out;
  if (nodes.empty()) return out;
  out.push_back(nodes.front());
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const Cell a = nodes[i - 1], b = nodes[i];
    const int dx = (b.x > a.x) - (b.x < a.x), dy = (b.y > a.y) - (b.y < a.y);
    const int n = std::max(std::abs(b.x - a.x), std::abs(b.y - a.y));
    for (int k = 1; k <= n; ++k) out.push_back({a.x + k * dx, a.y + k * dy});
  }
  return out;
}

std::size_t GridPath::steps() const {
  std::size_t s = 0;
  for (std::size_t i = 1; i < nodes.size(); ++i)
    s += static_cast<std::size_t>(std::max(std::abs(nodes[i].x - nodes[i - 1].x), std::abs(nodes[i].y - nodes[i - 1].y)));
  return s;
}

std::vector<Cell> compress_path(const std::vector<Cell>& nodes) {
  std::vector<Cell> out;
  for (const auto& c : nodes) {
    if (!out.empty() && out.back() == c) continue;
    if (out.size() >= 2) {
      const Cell a = out[out.size() - 2], b = out.back();
      const int ux = (b.x > a.x) - (b.x < a.x), uy = (b.y > a.y) - (b.y < a.y);
      const int vx = (c.x > b.x) - (c.x < b.x), vy = (c.y > b.y) - (c.y < b.y);
      if (ux == vx && uy == vy) out.pop_back();
    }
    out.push_back(c);
  }
  return out;
}

std::size_t RoutingResult::routed_count() const {
  return static_cast<std::size_t>(std::count_if(nets.begin(), nets.end(), [](const NetRoute& n) { return n.routed; }));
}

void commit_routes(ChipLayout& layout, const RoutingResult& result, double width) {
  std::vector<RoutedPath> fresh;
  for (const auto& net : result.nets) {
    if (!net.routed) continue;
    RoutedPath p;
    p.net = net.net;
    p.layer = net.layer;
    p.width = width;
    p.endpoints = net.endpoints;
    p.spine.push_back(net.start_anchor);
    for (const auto& c : compress_path(net.path.nodes)) p.spine.push_back(result.grid.center(c));
    p.spine.push_back(net.end_anchor);
    p.spine = simplify_polyline(p.spine);
    fresh.push_back(std::move(p));
  }
  std::erase_if(layout.paths, [&](const RoutedPath& old) {
    return std::any_of(fresh.begin(), fresh.end(), [&](const RoutedPath& p) { return p.net == old.net; });
  });
  for (auto& p : fresh) layout.paths.push_back(std::move(p));
}

Cell escape_cell(const GridGraph& g, Point p, Point dir) {
  // Nudge inside so a point on a cell boundary resolves to the cell it faces.
  Cell c = g.cell_of(p + dir * (g.cell_size * 1e-6));
  const int dx = static_cast<int>(std::lround(dir.x)), dy = static_cast<int>(std::lround(dir.y));
  while (g.in_bounds(c) && g.is_blocked(c)) c = {c.x + dx, c.y + dy};
  if (!g.in_bounds(c)) fail(ErrorCode::BlockedEndpoint, "no free cell in front of the port");
  return c;
}

}  // namespace sqc
