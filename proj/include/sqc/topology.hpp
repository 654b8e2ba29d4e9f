#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sqc {

/// Integer lattice position of a qubit; physical pitch is applied by the layout.
struct LatticeCoord {
  int col = 0;
  int row = 0;
  friend auto operator<=>(const LatticeCoord&, const LatticeCoord&) = default;
};

struct GridDims {
  int rows = 0;  // m
  int cols = 0;  // n
  friend bool operator==(const GridDims&, const GridDims&) = default;
};

/// Unordered qubit pair, stored with a <= b.
struct Edge {
  std::string a;
  std::string b;

  Edge() = default;
  Edge(std::string x, std::string y);
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Topology {
  std::map<std::string, LatticeCoord> qubits;
  std::vector<Edge> edges;  // kept sorted by the constructors
  std::optional<GridDims> grid;

  friend bool operator==(const Topology&, const Topology&) = default;

  bool has_edge(const std::string& a, const std::string& b) const;
  /// Qubit ids in row-major lattice order (row, then column).
  std::vector<std::string> row_major_ids() const;
  /// Ids of row `r` sorted by column.
  std::vector<std::string> row_ids(int r) const;
};

struct GateRecord {
  std::string a;
  std::string b;
};
using GateList = std::vector<GateRecord>;

/// Default id of the qubit at `index` in row-major order.
std::string qubit_id(int index);

/// Compare ids treating embedded digit runs numerically ("Q2" < "Q10").
bool natural_less(std::string_view a, std::string_view b);

/// m x n lattice with nearest-neighbour couplings.
Topology generate_grid(int rows, int cols);

/// Interaction graph of a gate list, greedily embedded row-major onto the
/// smallest square lattice that holds every qubit (ids in natural order).
Topology from_gate_list(const GateList& gates);

struct Violation {
  std::string invariant;
  std::vector<std::string> ids;
};

/// Reports every broken Topology invariant; never throws.
std::vector<Violation> validate(const Topology& t);

/// Parse "idA idB" lines (blank lines and '#' comments skipped) into edges.
/// Qubits referenced by edges are added and embedded like from_gate_list.
Topology parse_edge_list(std::string_view text);

}  // namespace sqc
