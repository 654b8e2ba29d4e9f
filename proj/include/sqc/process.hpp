#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sqc/layout.hpp"

namespace sqc {

struct ProcessRules {
  std::string name;
  double min_line_width = 10.0;
  double corner_radius = 20.0;
  double pad_width = 100.0;
  double pad_gap = 50.0;
  double min_spacing = 10.0;
  double bridge_span = 40.0;
  double bridge_width = 10.0;
  double indium_pitch = 300.0;
  double indium_diameter = 50.0;

  friend bool operator==(const ProcessRules&, const ProcessRules&) = default;
};

/// Throws InvalidArguments when a dimension is non-positive or the corner
/// radius is below half the line width.
void validate_rules(const ProcessRules& r);

std::vector<std::string> builtin_process_names();
ProcessRules builtin_process(const std::string& name);

/// Widen thin paths, set corner radii and resize pads. Idempotent.
ChipLayout apply_rules(const ChipLayout& layout, const ProcessRules& rules);

/// One crossing between two same-layer paths (one per connected piece of
/// their intersection).
struct Crossing {
  std::size_t path_a = 0;
  std::size_t path_b = 0;
  Point location;
  Point direction;  // unit direction of path_b at the crossing
};

/// Pairwise segment-intersection sweep over path spines.
std::vector<Crossing> find_crossings(const ChipLayout& layout);

struct BridgeResult {
  ChipLayout layout;
  std::vector<Crossing> crossings;                         // one bridge each
  std::vector<std::pair<std::size_t, std::size_t>> collisions;  // bridge index pairs
};

/// Add one air bridge per crossing. Bridges closer than min_spacing are
/// reported in `collisions`; with `strict` they raise BridgeCollision.
BridgeResult insert_air_bridges(const ChipLayout& layout, const ProcessRules& rules, bool strict = false);

/// Indium columns on the indium_pitch lattice, keeping only sites whose
/// footprint stays min_spacing away from the die edge and all geometry.
ChipLayout place_indium_columns(const ChipLayout& layout, const ProcessRules& rules);

struct DrcViolation {
  std::string rule;
  std::string subject;  // "a" or "a|b"; paths appear as "net:<name>"
  Point location;
  double measured = 0.0;
  double limit = 0.0;
};

struct DrcReport {
  std::vector<DrcViolation> violations;
  bool clean() const { return violations.empty(); }
  std::size_t count(const std::string& rule) const;
};

DrcReport drc(const ChipLayout& layout, const ProcessRules& rules);

struct WeightedProcess {
  ProcessRules rules;
  double weight = 1.0;
};

struct ProcessScore {
  std::string name;
  std::size_t violations = 0;
  double score = 0.0;
};

struct ProcessSelection {
  std::string name;
  std::vector<ProcessScore> scores;
};

/// Argmin over candidates of weight * (violations after apply_rules); ties go
/// to the lexicographically smaller name.
ProcessSelection select_process(const ChipLayout& layout, const std::vector<WeightedProcess>& candidates);

std::string format_drc_text(const DrcReport& r);
std::string format_drc_csv(const DrcReport& r);

}  // namespace sqc
