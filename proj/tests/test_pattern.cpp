#include <map>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "sqc/pattern_router.hpp"
#include "sqc/pipeline.hpp"
#include "test_util.hpp"

using namespace sqc;

namespace {

struct Routed {
  ChipLayout layout;
  PinAssignment pins;
  RoutingResult result;
};

Routed route_grid(int m, int n, bool flip = false) {
  PipelineConfig cfg;
  cfg.rows = m;
  cfg.cols = n;
  cfg.flip_chip = flip;
  Routed r;
  r.layout = build_chip(generate_grid(m, n), cfg);
  r.pins = prepare_die(r.layout, cfg);
  r.result = route_chip(r.layout, r.pins, cfg);
  return r;
}

// Pads keep pitch spacing and a full gap to both die corners.
void check_edge_fit(const PinAssignment& a) {
  const PinSpec& spec = a.spec;
  for (const auto& [edge, slots] : a.edges) {
    if (slots.empty()) continue;
    const bool horiz = edge == EdgeSide::Bottom || edge == EdgeSide::Top;
    const double len = horiz ? a.width : a.height;
    ASSERT_GE(len + 1e-9, slots.size() * spec.pitch() + spec.pad_gap) << to_string(edge);
    std::vector<double> along;
    for (const auto& s : slots) along.push_back(s.along);
    std::sort(along.begin(), along.end());
    for (std::size_t i = 1; i < along.size(); ++i) ASSERT_GE(along[i] - along[i - 1], spec.pitch() - 1e-9);
    ASSERT_GE(along.front() - spec.pad_width / 2, spec.pad_gap - 1e-9) << to_string(edge);
    ASSERT_LE(along.back() + spec.pad_width / 2, len - spec.pad_gap + 1e-9) << to_string(edge);
  }
}

void check_complete(const Routed& r, int m, int n) {
  ASSERT_EQ(r.pins.total(), total_pins(m, n));
  ASSERT_EQ(r.result.nets.size(), r.pins.total());
  ASSERT_EQ(r.result.routed_count(), r.pins.total());
  ASSERT_EQ(r.result.total_crossings, 0);
  std::vector<std::vector<Cell>> paths;
  std::map<std::string, int> pin_use, control, transmission;
  for (const auto& net : r.result.nets) {
    paths.push_back(net.path.expanded());
    ASSERT_FALSE(net.endpoints.empty());
    ++pin_use[net.endpoints[0]];
    const PinSlot* slot = r.pins.find(net.endpoints[0]);
    ASSERT_NE(slot, nullptr);
    (slot->role == PinRole::Control ? control : transmission)[slot->target]++;
  }
  std::pair<int, int> clash;
  ASSERT_TRUE(oracle::node_disjoint(paths, &clash)) << m << "x" << n << " share node " << clash.first << ","
                                                    << clash.second;
  for (const auto& [edge, slots] : r.pins.edges)
    for (const auto& s : slots) ASSERT_EQ(pin_use[s.id], 1) << s.id;
  ASSERT_EQ(control.size(), static_cast<std::size_t>(m * n));
  for (const auto& [q, k] : control) ASSERT_EQ(k, 1) << q;
  ASSERT_EQ(transmission.size(), static_cast<std::size_t>(m));
  for (const auto& [b, k] : transmission) ASSERT_EQ(k, 2) << b;
  check_edge_fit(r.pins);
}

}  // namespace

TEST(TotalPins, Formula) {
  EXPECT_EQ(total_pins(22, 22), 528u);
  EXPECT_EQ(total_pins(1, 1), 3u);
  EXPECT_EQ(total_pins(8, 8), 80u);
  EXPECT_EQ(code_of([] { total_pins(0, 4); }), ErrorCode::InvalidDimension);
  for (int m = 1; m <= 24; ++m)
    for (int n = 1; n <= 24; ++n) {
      std::size_t sum = 0;
      for (auto c : edge_counts(m, n)) sum += c;
      ASSERT_EQ(sum, total_pins(m, n));
    }
}

TEST(AllocatePins, Examples) {
  const PinSpec spec;
  const PinAssignment two = allocate_pins(2, 2, 5000, 5000, spec);
  EXPECT_EQ(two.total(), 8u);
  for (auto e : {EdgeSide::Bottom, EdgeSide::Right, EdgeSide::Top, EdgeSide::Left}) EXPECT_EQ(two.edges.at(e).size(), 2u);

  const PinAssignment one = allocate_pins(1, 1, 5000, 5000, spec);
  EXPECT_EQ(one.total(), 3u);
  const auto c = edge_counts(1, 1);
  EXPECT_LE(*std::max_element(c.begin(), c.end()) - *std::min_element(c.begin(), c.end()), 1u);

  EXPECT_EQ(code_of([&] {
              PinSpec bad;
              bad.pad_width = 0;
              allocate_pins(2, 2, 5000, 5000, bad);
            }),
            ErrorCode::SpecInfeasible);
}

// Side edges stay within one pin of each other, top equals bottom.
TEST(AllocatePins, SideBalance) {
  for (int m = 1; m <= 24; ++m)
    for (int n = 1; n <= 24; ++n) {
      const auto c = edge_counts(m, n);  // bottom, right, top, left
      ASSERT_LE(c[1] > c[3] ? c[1] - c[3] : c[3] - c[1], 1u) << m << "x" << n;
      if (m >= 2) ASSERT_EQ(c[0], c[2]);
    }
}

// A tight die grows until every edge holds its pins at pitch.
TEST(AllocatePins, TightDieGrows) {
  const PinSpec spec;
  const PinAssignment a = allocate_pins(22, 22, 100, 100, spec);
  EXPECT_EQ(a.total(), 528u);
  check_edge_fit(a);
  // Every tight die from 1x1 to 24x24 as well.
  for (int m = 1; m <= 24; ++m)
    for (int n = 1; n <= 24; ++n) {
      SCOPED_TRACE(std::to_string(m) + "x" + std::to_string(n));
      check_edge_fit(allocate_pins(m, n, 1, 1, spec));
    }
}

// Odd and even column counts both come out centred on the bottom edge.
TEST(AllocatePins, ParityCentring) {
  const PinSpec spec;
  for (int n = 1; n <= 12; ++n) {
    const PinAssignment a = allocate_pins(2, n, 6000, 6000, spec);
    const auto& s = a.edges.at(EdgeSide::Bottom);
    const double mid = (std::min_element(s.begin(), s.end(), [](auto& l, auto& r) { return l.along < r.along; })->along +
                        std::max_element(s.begin(), s.end(), [](auto& l, auto& r) { return l.along < r.along; })->along) /
                       2;
    EXPECT_LE(std::abs(mid - a.width / 2), spec.lane_pitch) << n;
  }
}

TEST(MapPins, Examples) {
  const std::vector<std::string> s{"s0", "s1", "s2"}, q{"q0", "q1", "q2"};
  EXPECT_EQ(map_pins(s, q, EdgeSide::Left), (std::vector<std::string>{"q0", "q1", "q2"}));
  EXPECT_EQ(map_pins(s, q, EdgeSide::Right), (std::vector<std::string>{"q2", "q1", "q0"}));
  EXPECT_EQ(map_pins(s, q, EdgeSide::Top), (std::vector<std::string>{"q2", "q1", "q0"}));
  EXPECT_EQ(map_pins(s, q, EdgeSide::Bottom), (std::vector<std::string>{"q0", "q1", "q2"}));
  for (auto e : {EdgeSide::Bottom, EdgeSide::Right, EdgeSide::Top, EdgeSide::Left})
    EXPECT_EQ(map_pins({"p"}, {"x"}, e), std::vector<std::string>{"x"});
  EXPECT_EQ(code_of([&] { map_pins(s, {"q0"}, EdgeSide::Left); }), ErrorCode::LengthMismatch);
}

TEST(MapPins, BijectiveUpTo64) {
  MappingRules flipped;
  flipped.top_reverse = false;
  flipped.left_reverse = true;
  for (std::size_t k = 1; k <= 64; ++k) {
    std::vector<std::string> s, q;
    for (std::size_t i = 0; i < k; ++i) {
      s.push_back("s" + std::to_string(i));
      q.push_back("q" + std::to_string(i));
    }
    for (const auto& rules : {MappingRules{}, flipped})
      for (auto e : {EdgeSide::Bottom, EdgeSide::Right, EdgeSide::Top, EdgeSide::Left}) {
        const auto m = map_pins(s, q, e, rules);
        ASSERT_EQ(std::set<std::string>(m.begin(), m.end()), std::set<std::string>(q.begin(), q.end()));
        ASSERT_EQ(m.size(), k);
      }
  }
}

TEST(RoutePattern, SingleQubit) {
  const Routed r = route_grid(1, 1);
  check_complete(r, 1, 1);
}

TEST(RoutePattern, EightByEight) {
  const Routed r = route_grid(8, 8);
  check_complete(r, 8, 8);
  EXPECT_EQ(r.result.nets.size(), 80u);
  for (const auto& net : r.result.nets) EXPECT_EQ(net.layer, layer::kRouting);
}

TEST(RoutePattern, FlipChipTagsOppositeLayer) {
  const Routed r = route_grid(3, 4, true);
  check_complete(r, 3, 4);
  for (const auto& net : r.result.nets) EXPECT_EQ(net.layer, layer::kOpposite);
  for (const auto& p : r.layout.paths) EXPECT_EQ(p.layer, layer::kOpposite);
}

TEST(RoutePattern, FourHundredEightyFourQubits) {
  const Routed r = route_grid(22, 22);
  check_complete(r, 22, 22);
  EXPECT_EQ(r.result.nets.size(), 528u);
}

// Small sweep here; the acceptance binary covers every m, n up to 24.
TEST(RoutePattern, CrossingFreeSweep) {
  for (int m = 1; m <= 9; ++m)
    for (int n = 1; n <= 9; ++n) {
      SCOPED_TRACE(std::to_string(m) + "x" + std::to_string(n));
      check_complete(route_grid(m, n), m, n);
    }
}

TEST(RoutePattern, PathsAvoidBlockedCells) {
  const Routed r = route_grid(4, 5);
  for (const auto& net : r.result.nets)
    for (const auto& c : net.path.expanded()) ASSERT_FALSE(r.result.grid.is_blocked(c)) << net.net;
}

TEST(RoutePattern, MismatchedAssignmentRejected) {
  Routed r = route_grid(2, 3);
  PinAssignment wrong = allocate_pins(2, 4, r.layout.width, r.layout.height, r.pins.spec);
  EXPECT_EQ(code_of([&] { route_pattern(r.layout, wrong); }), ErrorCode::InvalidArguments);
}
