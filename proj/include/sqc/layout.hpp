#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqc/geometry.hpp"
#include "sqc/topology.hpp"

namespace sqc {

enum class LayerRole { MetalQubit, MetalRouting, OppositeFace, Airbridge, Pin, Junction, Indium };

namespace layer {
inline constexpr int kQubit = 1;
inline constexpr int kRouting = 2;
inline constexpr int kOpposite = 3;
inline constexpr int kAirbridge = 4;
inline constexpr int kPin = 5;
inline constexpr int kJunction = 6;
inline constexpr int kIndium = 7;
}  // namespace layer

std::map<int, LayerRole> default_layers();
std::string to_string(LayerRole r);
LayerRole layer_role_from_string(const std::string& s);

enum class ComponentKind { Xmon, TransmonFloating, ReadoutResonator, Pad, Airbridge, IndiumColumn };
std::string to_string(ComponentKind k);
ComponentKind component_kind_from_string(const std::string& s);

/// Anchor point relative to the component origin; `direction` points away
/// from the component.
struct Port {
  std::string name;
  Point position;
  Point direction;
  friend bool operator==(const Port&, const Port&) = default;
};

struct Shape {
  int layer = layer::kQubit;
  Polygon polygon;  // relative to the component origin
  friend bool operator==(const Shape&, const Shape&) = default;
};

struct PlacedComponent {
  std::string id;
  ComponentKind kind = ComponentKind::Xmon;
  Point origin;
  std::map<std::string, double> params;
  std::vector<Port> ports;
  std::vector<Shape> footprint;
  std::optional<LatticeCoord> lattice;  // qubits only
  std::string attached_to;              // component this one is electrically joined to

  friend bool operator==(const PlacedComponent&, const PlacedComponent&) = default;

  Polygon absolute(const Shape& s) const { return translated(s.polygon, origin); }
  Point port(const std::string& name) const;
  const Port* find_port(const std::string& name) const;
  Rect bbox() const;
  bool is_qubit() const { return kind == ComponentKind::Xmon || kind == ComponentKind::TransmonFloating; }
};

/// Routed wire: a centreline plus width and corner radius. The drawn outline
/// is always re-derived from the spine, so re-applying rules is stable.
struct RoutedPath {
  std::string net;
  int layer = layer::kRouting;
  double width = 10.0;
  double corner_radius = 0.0;
  Polyline spine;
  std::vector<std::string> endpoints;  // ids of components/pins the path touches

  friend bool operator==(const RoutedPath&, const RoutedPath&) = default;
  Polyline centerline() const { return round_corners(spine, corner_radius); }
};

enum class EdgeSide { Bottom, Right, Top, Left };
std::string to_string(EdgeSide e);
EdgeSide edge_side_from_string(const std::string& s);

enum class PinRole { Transmission, Control };

struct Pin {
  std::string id;
  EdgeSide edge = EdgeSide::Bottom;
  Point position;      // centre of the pad's inner edge
  double width = 100;  // along the die edge
  double depth = 50;   // into the die
  PinRole role = PinRole::Control;
  std::string target;  // qubit id or bus id
  int layer = layer::kPin;

  friend bool operator==(const Pin&, const Pin&) = default;
  Rect rect() const;
};

struct ChipLayout {
  double width = 0.0;
  double height = 0.0;
  std::map<int, LayerRole> layers = default_layers();
  std::vector<PlacedComponent> components;
  std::vector<RoutedPath> paths;
  std::vector<Pin> pins;

  friend bool operator==(const ChipLayout&, const ChipLayout&) = default;

  Rect die() const { return {0.0, 0.0, width, height}; }
  const PlacedComponent* find(const std::string& id) const;
  PlacedComponent* find(const std::string& id);
  std::vector<std::string> qubit_ids() const;
};

struct QubitStyle {
  ComponentKind kind = ComponentKind::Xmon;
  double arm_length = 200.0;  // xmon, centre to tip
  double arm_width = 24.0;
  double pad_length = 300.0;  // transmon-floating
  double pad_height = 120.0;
  double pad_gap = 30.0;
  double junction_width = 4.0;
};

PlacedComponent make_qubit(const std::string& id, Point origin, const QubitStyle& style);

struct PlaceOptions {
  double pitch = 2000.0;
  double border = 500.0;
  QubitStyle style{};
};

/// Largest extent of a qubit footprint along x or y.
double qubit_span(const QubitStyle& style);

ChipLayout place_qubits(const Topology& t, const PlaceOptions& opt = {});

using FrequencyPlan = std::map<std::string, double>;

/// Parity colouring on grid topologies, greedy colouring (natural id order)
/// otherwise.
FrequencyPlan allocate_frequencies(const Topology& t, const std::vector<double>& freq_set);

enum class ResonatorMode { QuarterWave, HalfWave };

struct ResonatorSpec {
  std::string qubit_id;
  ResonatorMode mode = ResonatorMode::QuarterWave;
  double target_frequency = 0.0;
  double length = 0.0;
  double w = 10.0;
  double g = 6.0;
  double eps_r = 11.45;
  double coupling_length = 0.0;

  friend bool operator==(const ResonatorSpec&, const ResonatorSpec&) = default;
};

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

double resonator_length(const ResonatorSpec& spec);

struct BusOptions {
  double w = 10.0;
  double g = 6.0;
  double eps_r = 11.45;
  double cell_width = 1900.0;   // horizontal room per qubit
  double max_height = 600.0;    // vertical room between qubit and feedline
  bool downward = false;        // resonators hang below their qubits
  std::string port = "north";   // qubit port the resonator attaches to
};

/// Serpentine centreline of the given length starting at the origin heading
/// +y (or -y when `downward`), inside a band of `cell_width` centred on x=0.
Polyline meander_centerline(double length, double w, double cell_width, double max_height, bool downward);

/// Evenly spaced quarter-wave resonators along one qubit row; components are
/// appended to the layout.
std::vector<ResonatorSpec> generate_readout_bus(ChipLayout& layout, const std::vector<std::string>& qubit_row,
                                                double f_start, double f_stop, const BusOptions& opt = {});

/// Grow the die to at least (width, height) and move everything so the old
/// content sits centred in it. The shift is rounded so that qubit origins fall
/// on `align`/2 offsets when align > 0.
void fit_die(ChipLayout& layout, double width, double height, double align = 0.0);

/// Move every geometric entity of the layout by `d`.
void shift_layout(ChipLayout& layout, Point d);

}  // namespace sqc
