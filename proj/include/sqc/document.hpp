#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqc/circuit.hpp"
#include "sqc/layout.hpp"
#include "sqc/process.hpp"
#include "sqc/topology.hpp"

namespace sqc {

inline constexpr const char* kSchemaVersion = "sqd-1";
inline constexpr const char* kEpochTimestamp = "1970-01-01T00:00:00Z";

struct ProvenanceRecord {
  std::string operation;
  std::string timestamp = kEpochTimestamp;
  std::string digest;  // 16 hex digits
  friend bool operator==(const ProvenanceRecord&, const ProvenanceRecord&) = default;
};

struct DesignDocument {
  std::string name = "design";
  std::string version = kSchemaVersion;
  std::optional<Topology> topology;
  std::optional<EquivalentCircuit> circuit;
  std::optional<ChipLayout> layout;
  std::optional<std::string> layout_ref;  // GDS written alongside, by path
  std::optional<ProcessRules> process_rules;
  std::vector<ProvenanceRecord> provenance;

  friend bool operator==(const DesignDocument&, const DesignDocument&) = default;
};

/// Self-contained copy of some sub-entities. Present members are what
/// inject replaces.
struct ParameterBundle {
  std::string version = kSchemaVersion;
  std::optional<Topology> topology;
  std::optional<EquivalentCircuit> circuit;
  std::optional<ChipLayout> layout;
  std::optional<ProcessRules> process_rules;

  friend bool operator==(const ParameterBundle&, const ParameterBundle&) = default;
  bool empty() const { return !topology && !circuit && !layout && !process_rules; }
};

/// Selectors: "topology", "circuit", "layout", "process_rules", "all".
/// "all" returns whatever is present. Throws UnknownSelector / MissingSubEntity.
ParameterBundle extract(const DesignDocument& doc, const std::string& selector);

/// Replace the bundle's sub-entities and append a provenance record. The
/// input is never modified; throws VersionMismatch / CrossEntityViolation.
DesignDocument inject(const DesignDocument& doc, const ParameterBundle& bundle, const std::string& operation = "inject",
                      const std::string& args_canonical = "");

/// Throws CrossEntityViolation when circuit or layout name qubits the
/// topology lacks.
void check_cross_entity(const DesignDocument& doc);

std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t v);

/// Canonical design-file text: JSON, sorted keys, two-space indent.
std::string save(const DesignDocument& doc);
/// Throws ParseFailure(ParseError) with offset or field path, or VersionMismatch.
DesignDocument load(std::string_view text);

DesignDocument load_file(const std::string& path);
void save_file(const std::string& path, const DesignDocument& doc);

/// Canonical JSON text of single entities (used for digests and CLI output).
std::string to_json_text(const Topology& t);
std::string to_json_text(const EquivalentCircuit& c);
std::string to_json_text(const ChipLayout& l);
std::string to_json_text(const ProcessRules& r);
std::string to_json_text(const ParameterBundle& b);
ProcessRules process_rules_from_json(std::string_view text);

}  // namespace sqc
