#include "sqc/maze_router.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <queue>

#include "sqc/error.hpp"

namespace sqc {

namespace {

constexpr int kDx[8] = {1, 0, -1, 0, 1, -1, -1, 1};
constexpr int kDy[8] = {0, 1, 0, -1, 1, 1, -1, -1};

int sgn(int v) { return (v > 0) - (v < 0); }

double metric_distance(Cell n, Cell g, Metric m) {
  const double dx = std::abs(n.x - g.x), dy = std::abs(n.y - g.y);
  return m == Metric::Manhattan ? dx + dy : std::hypot(dx, dy);
}

bool on_ray(int dx, int dy, int hx, int hy) {
  // (dx, dy) == s * (hx, hy) for some integer s > 0
  if (hx == 0 && dx != 0) return false;
  if (hy == 0 && dy != 0) return false;
  const int s = hx != 0 ? dx / hx : dy / hy;
  return s > 0 && dx == s * hx && dy == s * hy;
}

/// Fewest direction changes from n (arriving with `heading`, -1 for none) to
/// g on an obstacle-free grid where reversing also counts as one change.
int min_turns(Cell n, Cell g, int heading, int dirs) {
  const int dx = g.x - n.x, dy = g.y - n.y;
  if (dx == 0 && dy == 0) return 0;
  if (heading < 0) {
    for (int d = 0; d < dirs; ++d)
      if (on_ray(dx, dy, kDx[d], kDy[d])) return 0;
    return 1;
  }
  const int hx = kDx[heading], hy = kDy[heading];
  if (on_ray(dx, dy, hx, hy)) return 0;
  if (dirs == 4) {
    const bool aligned = dx == 0 || dy == 0;
    if (aligned) return 1;
    const bool goalward = (hx != 0 && sgn(dx) == hx) || (hy != 0 && sgn(dy) == hy);
    return goalward ? 1 : 2;
  }
  // 8 directions: one change suffices iff (dx, dy) = s*h + a*u with s >= 0, a > 0.
  for (int u = 0; u < dirs; ++u) {
    if (u == heading) continue;
    const int ux = kDx[u], uy = kDy[u];
    const int det = hx * uy - hy * ux;
    if (det == 0) {
      if (on_ray(dx, dy, ux, uy)) return 1;
      continue;
    }
    // Cramer's rule; both coefficients must be non-negative integers.
    const int s_num = dx * uy - dy * ux, a_num = hx * dy - hy * dx;
    if (s_num % det != 0 || a_num % det != 0) continue;
    const int s = s_num / det, a = a_num / det;
    if (s >= 0 && a > 0) return 1;
  }
  return 2;
}

struct Workspace {
  std::vector<double> g;
  std::vector<int> parent;
  std::vector<std::uint32_t> seen;
  std::vector<std::uint32_t> closed;
  std::vector<int> corners;  // literal cost bookkeeping
  std::vector<int> crossings;
  std::uint32_t stamp = 0;

  void prepare(std::size_t states) {
    if (g.size() < states) {
      g.resize(states);
      parent.resize(states);
      seen.assign(states, 0);
      closed.assign(states, 0);
      corners.resize(states);
      crossings.resize(states);
      stamp = 0;
    }
    if (++stamp == 0) {
      std::fill(seen.begin(), seen.end(), 0);
      std::fill(closed.begin(), closed.end(), 0);
      stamp = 1;
    }
  }
};

struct OpenEntry {
  double f;
  double h;
  int y;
  int x;
  int heading;
  int state;
  double g;
};

struct OpenOrder {
  bool operator()(const OpenEntry& a, const OpenEntry& b) const {
    if (a.f != b.f) return a.f > b.f;
    if (a.h != b.h) return a.h > b.h;
    if (a.y != b.y) return a.y > b.y;
    if (a.x != b.x) return a.x > b.x;
    return a.heading > b.heading;
  }
};

void check_config(const GridGraph& grid, const HeuristicConfig& cfg) {
  if (!(cfg.k >= 0.0) || !std::isfinite(cfg.k)) fail(ErrorCode::InvalidConfig, "tuning factor k must be >= 0");
  if (cfg.metric == Metric::Euclidean && !grid.allow_diagonal)
    fail(ErrorCode::InvalidConfig, "euclidean distance requires diagonal moves");
}

}  // namespace

double heuristic(Cell n, Cell g, const HeuristicConfig& cfg) {
  double est = 0.0;
  if (cfg.corner_mode == EstimateMode::LowerBound) est += (n.x != g.x && n.y != g.y) ? 1.0 : 0.0;
  // Crossing lower bound is 0 in either mode.
  return metric_distance(n, g, cfg.metric) + cfg.k * est;
}

int count_corners(const GridPath& path) {
  const auto nodes = path.expanded();
  int corners = 0;
  for (std::size_t i = 2; i < nodes.size(); ++i) {
    const int ax = nodes[i - 1].x - nodes[i - 2].x, ay = nodes[i - 1].y - nodes[i - 2].y;
    const int bx = nodes[i].x - nodes[i - 1].x, by = nodes[i].y - nodes[i - 1].y;
    if (ax != bx || ay != by) ++corners;
  }
  return corners;
}

int count_crossings(const GridPath& path, const GridGraph& grid) {
  int n = 0;
  for (const auto& c : path.expanded())
    if (grid.in_bounds(c) && grid.is_occupied(c)) ++n;
  return n;
}

GridPath route_net(GridGraph& grid, Cell start, Cell goal, const HeuristicConfig& cfg, SearchStats* stats) {
  check_config(grid, cfg);
  for (const Cell c : {start, goal})
    if (!grid.in_bounds(c) || grid.is_blocked(c))
      fail(ErrorCode::BlockedEndpoint,
           "endpoint (" + std::to_string(c.x) + "," + std::to_string(c.y) + ") is blocked or off-grid");
  if (start == goal) fail(ErrorCode::InvalidArguments, "start and goal coincide");

  const int dirs = grid.allow_diagonal ? 8 : 4;
  const bool literal = cfg.literal_costs;
  const bool headed = cfg.k > 0.0 && !literal;  // costs depend on arrival heading
  const int per_cell = headed ? dirs + 1 : 1;
  const std::size_t cells = static_cast<std::size_t>(grid.cols) * grid.rows;

  thread_local Workspace ws;
  ws.prepare(cells * per_cell);
  // Heading is part of the state when headed, otherwise recovered from the parent.

  auto state_of = [&](std::size_t cell, int heading) {
    return static_cast<int>(cell * per_cell + (headed ? (heading < 0 ? dirs : heading) : 0));
  };
  auto heading_of_state = [&](int s) -> int {
    if (headed) {
      const int h = s % per_cell;
      return h == dirs ? -1 : h;
    }
    const int p = ws.parent[s];
    if (p < 0) return -1;
    const Cell a = grid.cell_at(static_cast<std::size_t>(p)), b = grid.cell_at(static_cast<std::size_t>(s));
    for (int d = 0; d < dirs; ++d)
      if (b.x - a.x == kDx[d] && b.y - a.y == kDy[d]) return d;
    return -1;
  };
  auto estimate = [&](Cell n, int heading) {
    double est = 0.0;
    if (cfg.corner_mode == EstimateMode::LowerBound)
      est += headed ? min_turns(n, goal, heading, dirs) : min_turns(n, goal, -1, dirs);
    return metric_distance(n, goal, cfg.metric) + cfg.k * est;
  };

  std::priority_queue<OpenEntry, std::vector<OpenEntry>, OpenOrder> open;
  const int s0 = state_of(grid.index(start), -1);
  ws.seen[s0] = ws.stamp;
  ws.g[s0] = 0.0;
  ws.parent[s0] = -1;
  ws.corners[s0] = 0;
  ws.crossings[s0] = 0;
  {
    const double h = estimate(start, -1);
    open.push({h, h, start.y, start.x, -1, s0, 0.0});
  }

  int found = -1;
  SearchStats local;
  while (!open.empty()) {
    local.max_open = std::max(local.max_open, open.size());
    const OpenEntry top = open.top();
    open.pop();
    const int s = top.state;
    if (ws.closed[s] == ws.stamp) {
      ++local.reexpanded;
      continue;
    }
    if (top.g > ws.g[s]) continue;  // stale entry
    ws.closed[s] = ws.stamp;
    ++local.expanded;
    const std::size_t ci = headed ? static_cast<std::size_t>(s / per_cell) : static_cast<std::size_t>(s);
    const Cell cur = grid.cell_at(ci);
    if (cur == goal) {
      found = s;
      break;
    }
    const int heading = heading_of_state(s);
    for (int d = 0; d < dirs; ++d) {
      const Cell nb{cur.x + kDx[d], cur.y + kDy[d]};
      if (!grid.in_bounds(nb) || grid.is_blocked(nb)) continue;
      const std::size_t ni = grid.index(nb);
      const int ns = state_of(ni, d);
      if (ws.seen[ns] == ws.stamp && ws.closed[ns] == ws.stamp) continue;
      const double step = d < 4 ? 1.0 : std::numbers::sqrt2;
      const int turn = (heading >= 0 && heading != d) ? 1 : 0;
      const int cross = grid.occupancy[ni] ? 1 : 0;
      double g = ws.g[s] + step;
      if (!literal) g += cfg.k * (turn + cross);
      if (ws.seen[ns] == ws.stamp && g >= ws.g[ns]) continue;
      ws.seen[ns] = ws.stamp;
      ws.g[ns] = g;
      ws.parent[ns] = s;
      ws.corners[ns] = ws.corners[s] + turn;
      ws.crossings[ns] = ws.crossings[s] + cross;
      double h = estimate(nb, d);
      if (literal) h += cfg.k * (ws.corners[ns] + ws.crossings[ns]);
      open.push({g + h, h, nb.y, nb.x, d, ns, g});
    }
  }
  if (stats) *stats = local;
  if (found < 0)
    fail(ErrorCode::NoPath, "no path from (" + std::to_string(start.x) + "," + std::to_string(start.y) + ") to (" +
                                std::to_string(goal.x) + "," + std::to_string(goal.y) + ")");

  GridPath path;
  for (int s = found; s >= 0; s = ws.parent[s])
    path.nodes.push_back(grid.cell_at(headed ? static_cast<std::size_t>(s / per_cell) : static_cast<std::size_t>(s)));
  std::reverse(path.nodes.begin(), path.nodes.end());
  path.cost = ws.g[found];
  path.corners = count_corners(path);
  path.crossings = count_crossings(path, grid);
  for (const auto& c : path.nodes) grid.set_occupied(c);
  return path;
}

RoutingResult route_all(GridGraph& grid, const std::vector<NetRequest>& nets, const HeuristicConfig& cfg) {
  check_config(grid, cfg);
  RoutingResult out;
  for (const auto& n : nets) {
    NetRoute r;
    r.net = n.name;
    r.endpoints = n.endpoints;
    r.start_anchor = n.start_anchor;
    r.end_anchor = n.end_anchor;
    try {
      r.path = route_net(grid, n.start, n.goal, cfg);
      r.routed = true;
      out.total_corners += r.path.corners;
      out.total_crossings += r.path.crossings;
    } catch (const Error& e) {
      r.failure = e.what();
      out.failures.push_back(n.name + ": " + e.what());
    }
    out.nets.push_back(std::move(r));
  }
  out.grid = grid;
  return out;
}

}  // namespace sqc
