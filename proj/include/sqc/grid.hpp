#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sqc/geometry.hpp"
#include "sqc/layout.hpp"

namespace sqc {

struct Cell {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Routing grid over the die. Cell (i, j) covers
/// [origin.x + i*cs, origin.x + (i+1)*cs) x [origin.y + j*cs, ...).
struct GridGraph {
  double cell_size = 50.0;
  Point origin;
  int cols = 0;
  int rows = 0;
  std::vector<std::uint8_t> blocked;
  std::vector<std::uint8_t> occupancy;  // M: 0 free, 1 routed
  bool allow_diagonal = false;

  GridGraph() = default;
  GridGraph(int cols, int rows, double cell_size = 1.0, Point origin = {});

  bool in_bounds(Cell c) const { return c.x >= 0 && c.y >= 0 && c.x < cols && c.y < rows; }
  std::size_t index(Cell c) const { return static_cast<std::size_t>(c.y) * cols + c.x; }
  Cell cell_at(std::size_t i) const { return {static_cast<int>(i % cols), static_cast<int>(i / cols)}; }
  bool is_blocked(Cell c) const { return blocked[index(c)] != 0; }
  bool is_occupied(Cell c) const { return occupancy[index(c)] != 0; }
  void set_blocked(Cell c, bool v = true) { blocked[index(c)] = v ? 1 : 0; }
  void set_occupied(Cell c, bool v = true) { occupancy[index(c)] = v ? 1 : 0; }
  Point center(Cell c) const;
  /// Cell containing p (clamped to the grid).
  Cell cell_of(Point p) const;
};

/// Cells blocked when within `clearance` of any component footprint.
GridGraph build_grid(const ChipLayout& layout, double cell_size, double clearance, bool allow_diagonal = false,
                     Point origin = {});

/// Grid path stored as vertices joined by straight 8-direction runs. A fully
/// expanded path (every node listed) is a valid special case.
struct GridPath {
  std::vector<Cell> nodes;
  int corners = 0;
  int crossings = 0;
  double cost = 0.0;

  friend bool operator==(const GridPath&, const GridPath&) = default;
  /// Every grid node along the path, in order.
  std::vector<Cell> expanded() const;
  /// Number of unit steps.
  std::size_t steps() const;
};

/// Drop interior vertices that continue straight on.
std::vector<Cell> compress_path(const std::vector<Cell>& nodes);

struct NetRoute {
  std::string net;
  GridPath path;
  bool routed = false;
  std::string failure;
  int layer = layer::kRouting;
  std::vector<std::string> endpoints;  // pin id, target id
  Point start_anchor;                  // exact attach points in um
  Point end_anchor;
};

struct RoutingResult {
  std::vector<NetRoute> nets;
  int total_corners = 0;
  int total_crossings = 0;
  std::vector<std::string> failures;
  GridGraph grid;  // occupancy snapshot after routing

  std::size_t routed_count() const;
};

/// Convert routed nets to layout paths: node centres joined and extended to
/// the anchors. Existing paths with the same net names are replaced.
void commit_routes(ChipLayout& layout, const RoutingResult& result, double width);

/// Nearest unblocked cell stepping from `p` along `dir` (unit axis vector).
Cell escape_cell(const GridGraph& g, Point p, Point dir);

}  // namespace sqc
