#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "sqc/grid.hpp"
#include "sqc/layout.hpp"

namespace sqc {

struct PinSpec {
  double distance_to_chip = 50.0;  // die edge to pad
  double pad_width = 100.0;        // pads are square
  double pad_gap = 50.0;
  double lane_pitch = 50.0;        // routing grid cell

  double pitch() const { return pad_width + pad_gap; }
  /// Grid nodes between consecutive pins on an edge.
  int pin_step() const;
  /// Depth (in nodes from the die edge) of the node where a pin's wire starts.
  int pin_node_depth() const;
};

struct PinSlot {
  std::string id;
  EdgeSide edge = EdgeSide::Bottom;
  double along = 0.0;  // um along the edge, x for bottom/top, y for left/right
  PinRole role = PinRole::Control;
  std::string target;
};

/// Order in which pins of one edge are listed: from the corner nearest the
/// bottom-left (bottom, left edges) or the top-right (top, right edges).
struct PinAssignment {
  int rows = 0;
  int cols = 0;
  double width = 0.0;   // die size the pins were placed on
  double height = 0.0;
  PinSpec spec;
  std::map<EdgeSide, std::vector<PinSlot>> edges;

  std::size_t total() const;
  std::vector<Pin> to_pins() const;
  const PinSlot* find(const std::string& pin_id) const;
};

struct MappingRules {
  bool top_reverse = true;
  bool bottom_reverse = false;
  bool left_reverse = false;
  bool right_reverse = true;
  bool reverse(EdgeSide e) const;
};

std::size_t total_pins(int rows, int cols);

/// Row the middle-row qubit at column c is escaped to: true = left edge.
bool escapes_left(int row, int col, int cols);

/// Targets per edge in increasing coordinate order (the Q lists).
std::map<EdgeSide, std::vector<std::string>> edge_targets(int rows, int cols);
std::array<std::size_t, 4> edge_counts(int rows, int cols);  // bottom, right, top, left

std::string bus_id(int row);

/// M[S[i]] = Q[i] (forward) or Q[|S|-1-i] (reverse) per the edge rule.
std::vector<std::string> map_pins(const std::vector<std::string>& pins, const std::vector<std::string>& targets,
                                  EdgeSide edge, const MappingRules& rules = {});

/// Distribute 2m + mn pins around a die of (width, height); the die grows when
/// an edge cannot hold its pins. Pins sit on routing-grid node centres.
PinAssignment allocate_pins(int rows, int cols, double width, double height, const PinSpec& spec,
                            const MappingRules& rules = {});

/// One planned connection: pin node to target node plus exact anchors.
struct NetPlan {
  std::string net;
  std::string pin;
  std::string target;
  PinRole role = PinRole::Control;
  EdgeSide edge = EdgeSide::Bottom;
  Cell start;
  Cell goal;
  Point start_anchor;
  Point end_anchor;
};

struct PatternOptions {
  double clearance = 20.0;
  bool flip_chip = false;
};

/// Net endpoints for every pin in the assignment on the layout's grid.
std::vector<NetPlan> plan_nets(const ChipLayout& layout, const GridGraph& grid, const PinAssignment& a,
                               double clearance = 20.0);

/// Crossing-free escape routing: every pin gets a dedicated lane in its edge
/// fan, so no search is needed.
RoutingResult route_pattern(const ChipLayout& layout, const PinAssignment& a, const PatternOptions& opt = {});

/// Grow and recentre the die so the fans have room, then allocate pins on
/// the final die. Qubit origins end up on grid node centres.
PinAssignment prepare_pattern_die(ChipLayout& layout, int rows, int cols, const PinSpec& spec,
                                  const PatternOptions& opt = {}, const MappingRules& rules = {});

}  // namespace sqc
