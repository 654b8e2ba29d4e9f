#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sqc/grid.hpp"

namespace sqc {

enum class Metric { Manhattan, Euclidean };
enum class EstimateMode { Zero, LowerBound };

struct HeuristicConfig {
  Metric metric = Metric::Manhattan;
  double k = 0.0;
  EstimateMode corner_mode = EstimateMode::Zero;
  EstimateMode crossing_mode = EstimateMode::Zero;
  /// Penalties for corners/crossings taken so far go into h instead of g.
  bool literal_costs = false;
};

/// d(n, g) + k * (corner estimate + crossing estimate).
double heuristic(Cell n, Cell g, const HeuristicConfig& cfg);

/// Number of direction changes between consecutive steps.
int count_corners(const GridPath& path);
/// Number of path nodes already marked in the occupancy grid.
int count_crossings(const GridPath& path, const GridGraph& grid);

struct SearchStats {
  std::size_t expanded = 0;       // states closed
  std::size_t reexpanded = 0;     // closed states popped again and skipped
  std::size_t max_open = 0;
};

/// A* from start to goal. Step cost is the move length plus k per corner and
/// k per occupied cell entered. On success the path is marked in the grid's
/// occupancy.
GridPath route_net(GridGraph& grid, Cell start, Cell goal, const HeuristicConfig& cfg, SearchStats* stats = nullptr);

struct NetRequest {
  std::string name;
  Cell start;
  Cell goal;
  std::vector<std::string> endpoints;
  Point start_anchor;
  Point end_anchor;
};

/// Routes nets in order with accumulating occupancy; failures are recorded.
RoutingResult route_all(GridGraph& grid, const std::vector<NetRequest>& nets, const HeuristicConfig& cfg);

}  // namespace sqc
