#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqc/document.hpp"
#include "sqc/gds.hpp"
#include "sqc/maze_router.hpp"
#include "sqc/pattern_router.hpp"
#include "sqc/process.hpp"

namespace sqc {

enum class RouteStrategy { Pattern, Maze };
std::string to_string(RouteStrategy s);
RouteStrategy route_strategy_from_string(const std::string& s);

struct PipelineConfig {
  std::string name = "chip";
  int rows = 2;
  int cols = 2;
  PlaceOptions place{};
  std::vector<double> qubit_frequencies{4.17e9, 4.5e9};  // Hz palette
  double e_c = 2.98e8;                                   // Hz
  double coupling_g = 10e6;                              // Hz
  double readout_start = 6.535e9;
  double readout_stop = 7.246e9;
  BusOptions bus{};
  PinSpec pins{};
  double clearance = 20.0;
  double route_width = 10.0;
  RouteStrategy strategy = RouteStrategy::Pattern;
  HeuristicConfig maze{Metric::Manhattan, 1.0, EstimateMode::LowerBound, EstimateMode::Zero, false};
  std::optional<unsigned> net_order_seed;  // maze only: shuffle the net order
  bool flip_chip = false;
  std::string process = "generic-10um";
  std::optional<ProcessRules> custom_rules;  // overrides `process`
  GdsOptions gds{};
};

struct StageTiming {
  std::string stage;
  double seconds = 0.0;
};

struct PipelineResult {
  DesignDocument doc;
  std::vector<std::uint8_t> gds;
  DrcReport drc;
  std::size_t pins = 0;
  std::size_t nets = 0;
  std::size_t nets_routed = 0;
  std::size_t node_crossings = 0;  // occupancy-grid crossings reported by the router
  std::size_t bridges = 0;         // geometric crossings, one bridge each
  std::size_t indium_columns = 0;
  std::vector<StageTiming> timings;
};

/// topology -> params -> layout -> readout -> route -> procmap -> bridges ->
/// [indium] -> drc -> gds. Errors come out as StageError naming the stage.
PipelineResult run_pipeline(const PipelineConfig& cfg);

/// Placed qubits with readout buses on every row.
ChipLayout build_chip(const Topology& t, const PipelineConfig& cfg);

/// Grow the die for escape fans and allocate pins on it.
PinAssignment prepare_die(ChipLayout& layout, const PipelineConfig& cfg);

/// Route every pin with the configured strategy and commit the paths.
RoutingResult route_chip(ChipLayout& layout, const PinAssignment& a, const PipelineConfig& cfg);

ProcessRules resolve_rules(const PipelineConfig& cfg);

}  // namespace sqc
