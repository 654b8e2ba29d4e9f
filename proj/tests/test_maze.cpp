#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "sqc/layout.hpp"
#include "sqc/maze_router.hpp"
#include "test_util.hpp"

using namespace sqc;

namespace {

GridPath path_of(std::vector<Cell> nodes) {
  GridPath p;
  p.nodes = std::move(nodes);
  return p;
}

// Random grid with roughly `density` blocked cells.
GridGraph random_grid(std::mt19937& rng, int cols, int rows, double density) {
  GridGraph g(cols, rows);
  std::bernoulli_distribution b(density);
  for (auto& v : g.blocked) v = b(rng) ? 1 : 0;
  return g;
}

Cell random_free(std::mt19937& rng, const GridGraph& g) {
  for (;;) {
    const Cell c{static_cast<int>(rng() % g.cols), static_cast<int>(rng() % g.rows)};
    if (!g.is_blocked(c)) return c;
  }
}

void check_path_invariants(const GridPath& p, const GridGraph& g) {
  const auto nodes = p.expanded();
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    ASSERT_TRUE(g.in_bounds(nodes[i]));
    ASSERT_FALSE(g.is_blocked(nodes[i]));
    ASSERT_TRUE(seen.insert({nodes[i].x, nodes[i].y}).second) << "node repeats";
    if (i) {
      ASSERT_EQ(std::abs(nodes[i].x - nodes[i - 1].x) + std::abs(nodes[i].y - nodes[i - 1].y), 1);
    }
  }
  ASSERT_EQ(p.corners, oracle::corners(nodes));
}

// Own crossing-number test and segment distance so the blocking oracle does
// not share code with the library.
bool inside(Point p, const Polygon& poly) {
  bool in = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const Point a = poly[i], b = poly[j];
    if ((a.y > p.y) != (b.y > p.y) && p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) in = !in;
  }
  return in;
}

double seg_dist(Point p, Point a, Point b) {
  const double dx = b.x - a.x, dy = b.y - a.y, l2 = dx * dx + dy * dy;
  const double t = l2 == 0 ? 0 : std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / l2, 0.0, 1.0);
  return std::hypot(p.x - a.x - t * dx, p.y - a.y - t * dy);
}

}  // namespace

TEST(Heuristic, Examples) {
  HeuristicConfig m;
  EXPECT_DOUBLE_EQ(heuristic({0, 0}, {3, 4}, m), 7);
  HeuristicConfig e;
  e.metric = Metric::Euclidean;
  EXPECT_DOUBLE_EQ(heuristic({0, 0}, {3, 4}, e), 5);
  HeuristicConfig lb;
  lb.k = 2;
  lb.corner_mode = EstimateMode::LowerBound;
  EXPECT_DOUBLE_EQ(heuristic({0, 0}, {3, 4}, lb), 9);
  EXPECT_DOUBLE_EQ(heuristic({0, 0}, {0, 4}, lb), 4);
  lb.crossing_mode = EstimateMode::LowerBound;
  EXPECT_DOUBLE_EQ(heuristic({0, 0}, {3, 4}, lb), 9);
}

TEST(Counting, Corners) {
  EXPECT_EQ(count_corners(path_of({{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}})), 0);
  EXPECT_EQ(count_corners(path_of({{0, 0}, {0, 1}, {1, 1}})), 1);
  // Compressed storage gives the same count.
  EXPECT_EQ(count_corners(path_of({{0, 0}, {0, 9}})), 0);
  for (int s = 1; s <= 12; ++s) {
    std::vector<Cell> stair{{0, 0}};
    for (int i = 0; i < s; ++i) {
      Cell c = stair.back();
      (i % 2 ? c.y : c.x) += 1;
      stair.push_back(c);
    }
    EXPECT_EQ(count_corners(path_of(stair)), s - 1);
    EXPECT_EQ(oracle::corners(stair), s - 1);
  }
}

TEST(Counting, Crossings) {
  GridGraph g(6, 6);
  const GridPath any = path_of({{0, 0}, {0, 5}, {5, 5}});
  EXPECT_EQ(count_crossings(any, g), 0);
  // Occupy an L, then cross it once with a perpendicular L.
  const GridPath first = path_of({{0, 2}, {3, 2}, {3, 0}});
  for (const auto& c : first.expanded()) g.set_occupied(c);
  const GridPath second = path_of({{1, 0}, {1, 4}, {5, 4}});
  std::set<std::pair<int, int>> a, shared;
  for (const auto& c : first.expanded()) a.insert({c.x, c.y});
  for (const auto& c : second.expanded())
    if (a.count({c.x, c.y})) shared.insert({c.x, c.y});
  EXPECT_EQ(shared.size(), 1u);
  EXPECT_EQ(count_crossings(second, g), 1);
  // Retracing the occupied horizontal run counts every node.
  EXPECT_EQ(count_crossings(path_of({{0, 2}, {3, 2}}), g), 4);
}

TEST(RouteNet, EmptyFiveByFive) {
  GridGraph g(5, 5);
  const GridPath p = route_net(g, {0, 0}, {4, 4}, {});
  EXPECT_EQ(p.expanded().size(), 9u);
  EXPECT_DOUBLE_EQ(p.cost, 8);
  EXPECT_EQ(*oracle::bfs(g.blocked, 5, 5, {0, 0}, {4, 4}), 8);
  check_path_invariants(p, g);
  // Marked in M.
  for (const auto& c : p.expanded()) EXPECT_TRUE(g.is_occupied(c));
}

TEST(RouteNet, Errors) {
  GridGraph g(5, 5);
  for (Cell c : {Cell{1, 1}, Cell{2, 1}, Cell{3, 1}, Cell{1, 2}, Cell{3, 2}, Cell{1, 3}, Cell{2, 3}, Cell{3, 3}})
    g.set_blocked(c);
  EXPECT_EQ(code_of([&] { route_net(g, {0, 0}, {2, 2}, {}); }), ErrorCode::NoPath);
  EXPECT_EQ(code_of([&] { route_net(g, {0, 0}, {1, 1}, {}); }), ErrorCode::BlockedEndpoint);
  EXPECT_EQ(code_of([&] { route_net(g, {0, 0}, {9, 0}, {}); }), ErrorCode::BlockedEndpoint);
  HeuristicConfig bad;
  bad.k = -1;
  EXPECT_EQ(code_of([&] { route_net(g, {0, 0}, {4, 4}, bad); }), ErrorCode::InvalidConfig);
  // Failure leaves M untouched.
  for (auto v : g.occupancy) EXPECT_EQ(v, 0);
}

TEST(RouteNet, PenaltyAvoidsOccupiedCorridor) {
  GridGraph g(7, 7);
  for (int x = 1; x <= 5; ++x) g.set_occupied({x, 3});
  GridGraph straight = g;
  HeuristicConfig zero;
  EXPECT_GT(route_net(straight, {0, 3}, {6, 3}, zero).crossings, 0);
  HeuristicConfig heavy;
  heavy.k = 100;
  std::vector<std::uint8_t> avoid(g.blocked.size());
  for (std::size_t i = 0; i < avoid.size(); ++i) avoid[i] = g.occupancy[i];
  ASSERT_TRUE(oracle::bfs(avoid, 7, 7, {0, 3}, {6, 3}));
  const GridPath p = route_net(g, {0, 3}, {6, 3}, heavy);
  EXPECT_EQ(p.crossings, 0);
}

// k = 0, manhattan: cost equals BFS distance, NoPath iff BFS says unreachable.
TEST(RouteNet, OptimalityAgainstBfs) {
  std::mt19937 rng(2024);
  int found = 0;
  for (int trial = 0; trial < 200; ++trial) {
    GridGraph g = random_grid(rng, 10, 10, 0.2);
    const Cell s = random_free(rng, g);
    Cell t = random_free(rng, g);
    while (t == s) t = random_free(rng, g);
    const auto ref = oracle::bfs(g.blocked, 10, 10, s, t);
    if (!ref) {
      EXPECT_EQ(code_of([&] { route_net(g, s, t, {}); }), ErrorCode::NoPath);
      continue;
    }
    ++found;
    SearchStats st;
    HeuristicConfig cfg;
    const GridPath p = route_net(g, s, t, cfg, &st);
    ASSERT_DOUBLE_EQ(p.cost, *ref);
    ASSERT_EQ(p.steps(), static_cast<std::size_t>(*ref));
    check_path_invariants(p, g);
    // Closed list: each cell expanded at most once.
    std::size_t free_cells = 0;
    for (auto b : g.blocked) free_cells += b == 0;
    ASSERT_LE(st.expanded, free_cells);
    // Admissible: h never exceeds the remaining steps along the path.
    const auto nodes = p.expanded();
    for (std::size_t i = 0; i < nodes.size(); ++i)
      ASSERT_LE(heuristic(nodes[i], t, cfg), static_cast<double>(nodes.size() - 1 - i));
  }
  EXPECT_GT(found, 100);
}

// With penalties the cost matches an exhaustive (cell, heading) Dijkstra,
// and E_c + E_x never grows when k grows.
TEST(RouteNet, PenalizedOptimumAndMonotoneK) {
  std::mt19937 rng(77);
  const double ks[] = {0, 0.25, 0.5, 1, 2, 4, 8, 100};
  int instances = 0;
  while (instances < 50) {
    GridGraph g = random_grid(rng, 7, 7, 0.15);
    // A few prior wires as random occupied cells.
    for (int i = 0; i < 10; ++i) {
      const Cell c = random_free(rng, g);
      g.set_occupied(c);
    }
    Cell s = random_free(rng, g), t = random_free(rng, g);
    if (s == t || g.is_occupied(s) || g.is_occupied(t) || !oracle::bfs(g.blocked, 7, 7, s, t)) continue;
    ++instances;
    int prev = 1 << 30;
    for (double k : ks) {
      for (auto mode : {EstimateMode::Zero, EstimateMode::LowerBound}) {
        GridGraph work = g;
        HeuristicConfig cfg;
        cfg.k = k;
        cfg.corner_mode = mode;
        const GridPath p = route_net(work, s, t, cfg);
        const auto best = oracle::penalized_cost(g.blocked, g.occupancy, 7, 7, s, t, k);
        ASSERT_TRUE(best);
        ASSERT_NEAR(p.cost, *best, 1e-9) << "k=" << k;
        ASSERT_EQ(p.crossings, oracle::crossings(p.expanded(), g.occupancy, 7));
        check_path_invariants(p, g);
        if (mode == EstimateMode::Zero) {
          ASSERT_LE(p.corners + p.crossings, prev) << "k=" << k;
          prev = p.corners + p.crossings;
        }
      }
    }
  }
}

TEST(RouteNet, Deterministic) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    GridGraph g = random_grid(rng, 12, 12, 0.1);
    const Cell s = random_free(rng, g), t = random_free(rng, g);
    if (s == t || !oracle::bfs(g.blocked, 12, 12, s, t)) continue;
    GridGraph a = g, b = g;
    HeuristicConfig cfg;
    cfg.k = 1.5;
    EXPECT_EQ(route_net(a, s, t, cfg), route_net(b, s, t, cfg));
  }
}

TEST(RouteAll, Examples) {
  GridGraph empty(6, 6);
  const RoutingResult none = route_all(empty, {}, {});
  EXPECT_TRUE(none.nets.empty());
  EXPECT_EQ(none.total_crossings, 0);

  GridGraph g(6, 6);
  const RoutingResult two = route_all(g, {{"a", {0, 0}, {5, 0}}, {"b", {0, 5}, {5, 5}}}, {});
  EXPECT_EQ(two.routed_count(), 2u);
  EXPECT_EQ(two.total_crossings, 0);
  std::vector<std::vector<Cell>> paths;
  for (const auto& n : two.nets) paths.push_back(n.path.expanded());
  EXPECT_TRUE(oracle::node_disjoint(paths));
}

TEST(RouteAll, ForcedCrossingMatchesMinimum) {
  GridGraph g(3, 3);
  HeuristicConfig cfg;
  cfg.k = 100;
  const RoutingResult r = route_all(g, {{"h", {0, 1}, {2, 1}}, {"v", {1, 0}, {1, 2}}}, cfg);
  ASSERT_EQ(r.routed_count(), 2u);
  EXPECT_GE(r.total_crossings, 1);
  // Brute force: after the first net, fewest occupied cells any second path must enter.
  GridGraph after(3, 3);
  for (const auto& c : r.nets[0].path.expanded()) after.set_occupied(c);
  const auto best = oracle::penalized_cost(after.blocked, after.occupancy, 3, 3, {1, 0}, {1, 2}, 100);
  ASSERT_TRUE(best);
  const int min_cross = static_cast<int>(std::floor(*best / 100));
  EXPECT_EQ(r.total_crossings, min_cross);
  EXPECT_EQ(r.total_crossings, r.nets[0].path.crossings + r.nets[1].path.crossings);

  // A failing net is recorded, not thrown.
  GridGraph walled(3, 3);
  walled.set_blocked({1, 0});
  walled.set_blocked({1, 1});
  walled.set_blocked({1, 2});
  const RoutingResult f = route_all(walled, {{"x", {0, 0}, {2, 2}}}, {});
  EXPECT_EQ(f.routed_count(), 0u);
  ASSERT_EQ(f.failures.size(), 1u);
}

TEST(BuildGrid, EmptyAndDegenerate) {
  ChipLayout l;
  l.width = 1000;
  l.height = 500;
  const GridGraph g = build_grid(l, 50, 20);
  EXPECT_EQ(g.cols, 20);
  EXPECT_EQ(g.rows, 10);
  for (auto b : g.blocked) EXPECT_EQ(b, 0);
  for (auto m : g.occupancy) EXPECT_EQ(m, 0);
  EXPECT_EQ(code_of([&] { build_grid(l, 600, 20); }), ErrorCode::DegenerateGrid);
}

// Blocked cells match a brute-force sampled distance test against the
// inflated footprint.
TEST(BuildGrid, CentredComponentRasterization) {
  for (auto kind : {ComponentKind::Xmon, ComponentKind::TransmonFloating}) {
    ChipLayout l;
    l.width = l.height = 1200;
    QubitStyle st;
    st.kind = kind;
    l.components.push_back(make_qubit("Q0", {600, 600}, st));
    const double cs = 25, clearance = 20;
    const GridGraph g = build_grid(l, cs, clearance);
    const int samples = 100;
    const double step = cs / samples;
    int blocked = 0;
    for (int y = 0; y < g.rows; ++y)
      for (int x = 0; x < g.cols; ++x) {
        double d = 1e300;
        for (const auto& sh : l.components[0].footprint) {
          const Polygon poly = l.components[0].absolute(sh);
          const double x0 = x * cs, y0 = y * cs;
          std::vector<Point> pts;
          for (int i = 0; i <= samples; ++i) {
            pts.push_back({x0 + i * step, y0});
            pts.push_back({x0 + i * step, y0 + cs});
            pts.push_back({x0, y0 + i * step});
            pts.push_back({x0 + cs, y0 + i * step});
          }
          for (const auto& v : poly)
            if (v.x >= x0 && v.x <= x0 + cs && v.y >= y0 && v.y <= y0 + cs) d = 0;
          for (const auto& p : pts) {
            if (inside(p, poly)) d = 0;
            for (std::size_t i = 0; i < poly.size(); ++i)
              d = std::min(d, seg_dist(p, poly[i], poly[(i + 1) % poly.size()]));
          }
        }
        const bool b = g.is_blocked({x, y});
        blocked += b;
        if (d <= clearance) EXPECT_TRUE(b) << x << "," << y;
        if (d - step > clearance) EXPECT_FALSE(b) << x << "," << y;
      }
    EXPECT_GT(blocked, 0);
  }
}
