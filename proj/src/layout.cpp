#include "sqc/layout.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "sqc/error.hpp"

namespace sqc {

namespace {
constexpr double kPi = std::numbers::pi;

template <typename E>
struct Names {
  E value;
  const char* name;
};

constexpr Names<LayerRole> kLayerNames[] = {
    {LayerRole::MetalQubit, "metal-qubit"}, {LayerRole::MetalRouting, "metal-routing"},
    {LayerRole::OppositeFace, "opposite-face-routing"}, {LayerRole::Airbridge, "airbridge"},
    {LayerRole::Pin, "pin"}, {LayerRole::Junction, "junction"}, {LayerRole::Indium, "indium"},
};
constexpr Names<ComponentKind> kKindNames[] = {
    {ComponentKind::Xmon, "xmon"}, {ComponentKind::TransmonFloating, "transmon-floating"},
    {ComponentKind::ReadoutResonator, "readout-resonator"}, {ComponentKind::Pad, "pad"},
    {ComponentKind::Airbridge, "airbridge"}, {ComponentKind::IndiumColumn, "indium-column"},
};
constexpr Names<EdgeSide> kEdgeNames[] = {
    {EdgeSide::Bottom, "bottom"}, {EdgeSide::Right, "right"}, {EdgeSide::Top, "top"}, {EdgeSide::Left, "left"}};

template <typename E, std::size_t N>
std::string name_of(const Names<E> (&table)[N], E v) {
  for (const auto& n : table)
    if (n.value == v) return n.name;
  return "?";
}

template <typename E, std::size_t N>
E value_of(const Names<E> (&table)[N], const std::string& s, const char* what) {
  for (const auto& n : table)
    if (s == n.name) return n.value;
  fail(ErrorCode::ParseError, std::string("unknown ") + what + " '" + s + "'");
}

}  // namespace

std::map<int, LayerRole> default_layers() {
  return {{layer::kQubit, LayerRole::MetalQubit},       {layer::kRouting, LayerRole::MetalRouting},
          {layer::kOpposite, LayerRole::OppositeFace}, {layer::kAirbridge, LayerRole::Airbridge},
          {layer::kPin, LayerRole::Pin},               {layer::kJunction, LayerRole::Junction},
          {layer::kIndium, LayerRole::Indium}};
}

std::string to_string(LayerRole r) { return name_of(kLayerNames, r); }
LayerRole layer_role_from_string(const std::string& s) { return value_of(kLayerNames, s, "layer role"); }
std::string to_string(ComponentKind k) { return name_of(kKindNames, k); }
ComponentKind component_kind_from_string(const std::string& s) {
  return value_of(kKindNames, s, "component kind");
}
std::string to_string(EdgeSide e) { return name_of(kEdgeNames, e); }
EdgeSide edge_side_from_string(const std::string& s) { return value_of(kEdgeNames, s, "edge"); }

const Port* PlacedComponent::find_port(const std::string& name) const {
  for (const auto& p : ports)
    if (p.name == name) return &p;
  return nullptr;
}

Point PlacedComponent::port(const std::string& name) const {
  const Port* p = find_port(name);
  if (!p) fail(ErrorCode::InvalidArguments, "component " + id + " has no port '" + name + "'");
  return origin + p->position;
}

Rect PlacedComponent::bbox() const {
  std::vector<Point> pts;
  for (const auto& s : footprint)
    for (const auto& p : s.polygon) pts.push_back(p + origin);
  return bounding_box(pts);
}

Rect Pin::rect() const {
  const double hw = width / 2.0;
  switch (edge) {
    case EdgeSide::Bottom: return {position.x - hw, position.y - depth, position.x + hw, position.y};
    case EdgeSide::Top: return {position.x - hw, position.y, position.x + hw, position.y + depth};
    case EdgeSide::Left: return {position.x - depth, position.y - hw, position.x, position.y + hw};
    case EdgeSide::Right: return {position.x, position.y - hw, position.x + depth, position.y + hw};
  }
  return {};
}

const PlacedComponent* ChipLayout::find(const std::string& id) const {
  for (const auto& c : components)
    if (c.id == id) return &c;
  return nullptr;
}

PlacedComponent* ChipLayout::find(const std::string& id) {
  for (auto& c : components)
    if (c.id == id) return &c;
  return nullptr;
}

std::vector<std::string> ChipLayout::qubit_ids() const {
  std::vector<std::string> ids;
  for (const auto& c : components)
    if (c.is_qubit()) ids.push_back(c.id);
  return ids;
}

PlacedComponent make_qubit(const std::string& id, Point origin, const QubitStyle& s) {
  PlacedComponent c;
  c.id = id;
  c.kind = s.kind;
  c.origin = origin;
  if (s.kind == ComponentKind::Xmon) {
    if (!(s.arm_length > 0 && s.arm_width > 0 && s.arm_width < 2 * s.arm_length))
      fail(ErrorCode::InvalidArguments, "xmon arms need positive length and width < span");
    const double L = s.arm_length, a = s.arm_width / 2.0;
    c.params = {{"arm_length", L}, {"arm_width", s.arm_width}};
    c.footprint.push_back({layer::kQubit,
                           {{L, -a}, {L, a}, {a, a}, {a, L}, {-a, L}, {-a, a},
                            {-L, a}, {-L, -a}, {-a, -a}, {-a, -L}, {a, -L}, {a, -a}}});
    c.ports = {{"north", {0, L}, {0, 1}}, {"south", {0, -L}, {0, -1}},
               {"east", {L, 0}, {1, 0}},  {"west", {-L, 0}, {-1, 0}}};
  } else if (s.kind == ComponentKind::TransmonFloating) {
    if (!(s.pad_length > 0 && s.pad_height > 0 && s.pad_gap > 0 && s.junction_width > 0))
      fail(ErrorCode::InvalidArguments, "transmon pads need positive dimensions");
    const double hx = s.pad_length / 2.0, g = s.pad_gap / 2.0, top = g + s.pad_height;
    const double jw = s.junction_width / 2.0;
    c.params = {{"pad_length", s.pad_length}, {"pad_height", s.pad_height}, {"pad_gap", s.pad_gap},
                {"junction_width", s.junction_width}};
    c.footprint.push_back({layer::kQubit, rect_polygon({-hx, g, hx, top})});
    c.footprint.push_back({layer::kQubit, rect_polygon({-hx, -top, hx, -g})});
    c.footprint.push_back({layer::kJunction, rect_polygon({-jw, -g, jw, g})});
    const double mid = g + s.pad_height / 2.0;
    c.ports = {{"north", {0, top}, {0, 1}}, {"south", {0, -top}, {0, -1}},
               {"east", {hx, mid}, {1, 0}}, {"west", {-hx, -mid}, {-1, 0}}};
  } else {
    fail(ErrorCode::InvalidArguments, "qubit kind must be xmon or transmon-floating");
  }
  return c;
}

double qubit_span(const QubitStyle& style) {
  const Rect b = make_qubit("probe", {}, style).bbox();
  return std::max(b.width(), b.height());
}

ChipLayout place_qubits(const Topology& t, const PlaceOptions& opt) {
  if (!(opt.border >= 0.0)) fail(ErrorCode::InvalidArguments, "border must be non-negative");
  const double span = qubit_span(opt.style);
  if (!(opt.pitch > span))
    fail(ErrorCode::PitchTooSmall,
         "pitch " + std::to_string(opt.pitch) + " um does not exceed component span " + std::to_string(span));
  if (t.qubits.empty()) fail(ErrorCode::InvalidArguments, "topology has no qubits");

  int cols = 0, rows = 0;
  for (const auto& [id, c] : t.qubits) {
    cols = std::max(cols, c.col + 1);
    rows = std::max(rows, c.row + 1);
  }
  if (t.grid) {
    cols = std::max(cols, t.grid->cols);
    rows = std::max(rows, t.grid->rows);
  }

  ChipLayout out;
  out.width = span + (cols - 1) * opt.pitch + 2.0 * opt.border;
  out.height = span + (rows - 1) * opt.pitch + 2.0 * opt.border;
  const double base = opt.border + span / 2.0;
  for (const auto& id : t.row_major_ids()) {
    const auto lc = t.qubits.at(id);
    auto comp = make_qubit(id, {base + lc.col * opt.pitch, base + lc.row * opt.pitch}, opt.style);
    comp.lattice = lc;
    out.components.push_back(std::move(comp));
  }
  return out;
}

FrequencyPlan allocate_frequencies(const Topology& t, const std::vector<double>& freq_set) {
  if (freq_set.empty()) fail(ErrorCode::InsufficientFrequencySet, "empty frequency set");
  for (double f : freq_set)
    if (!(f > 0.0)) fail(ErrorCode::NonPositiveInput, "frequencies must be positive");

  FrequencyPlan plan;
  if (t.grid) {
    if (freq_set.size() < 2 && !t.edges.empty())
      fail(ErrorCode::InsufficientFrequencySet, "a coupled lattice needs at least two frequencies");
    for (const auto& [id, c] : t.qubits) plan[id] = freq_set[static_cast<std::size_t>((c.col + c.row) % 2)];
    bool ok = true;
    for (const auto& e : t.edges) ok = ok && plan.at(e.a) != plan.at(e.b);
    if (ok) return plan;
    plan.clear();  // not a nearest-neighbour lattice after all
  }

  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& e : t.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<std::string> order;
  for (const auto& [id, c] : t.qubits) order.push_back(id);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return natural_less(a, b); });

  std::map<std::string, std::size_t> color;
  for (const auto& id : order) {
    std::set<std::size_t> used;
    for (const auto& nb : adj[id])
      if (auto it = color.find(nb); it != color.end()) used.insert(it->second);
    std::size_t k = 0;
    while (used.contains(k)) ++k;
    if (k >= freq_set.size())
      fail(ErrorCode::InsufficientFrequencySet,
           "qubit " + id + " needs more than " + std::to_string(freq_set.size()) + " frequencies");
    color[id] = k;
    plan[id] = freq_set[k];
  }
  return plan;
}

double resonator_length(const ResonatorSpec& spec) {
  if (!(spec.target_frequency > 0.0)) fail(ErrorCode::NonPositiveInput, "resonator frequency must be positive");
  if (!(spec.eps_r > 1.0 && spec.eps_r < 30.0))
    fail(ErrorCode::NonPositiveInput, "substrate permittivity must lie in (1, 30)");
  const double eps_eff = (spec.eps_r + 1.0) / 2.0;
  const double divisor = spec.mode == ResonatorMode::QuarterWave ? 4.0 : 2.0;
  return kSpeedOfLight / (divisor * spec.target_frequency * std::sqrt(eps_eff)) * 1e6;
}

namespace {

struct Primitive {
  bool arc = false;
  Point a, b;  // straight segment ends
  Point c;     // arc centre
  double r = 0.0, a0 = 0.0, a1 = 0.0;
  double length() const { return arc ? r * std::abs(a1 - a0) : distance(a, b); }
};

int arc_segments(double sweep) { return std::max(1, static_cast<int>(std::lround(16.0 * std::abs(sweep) / (kPi / 2)))); }

std::vector<Primitive> meander_primitives(double length, double w, double cell_width, double max_height) {
  if (!(length > 0.0 && w > 0.0 && cell_width > 0.0))
    fail(ErrorCode::NonPositiveInput, "meander needs positive length, width and cell width");
  const double r = 3.0 * w;
  const double lead = 2.0 * r;
  std::vector<Primitive> out;
  auto seg = [&](Point a, Point b) { out.push_back({false, a, b, {}, 0, 0, 0}); };

  if (length <= lead + kPi * r / 2.0) {
    seg({0, 0}, {0, length});
  } else {
    const double x_left = -cell_width / 2.0 + r, x_right = cell_width / 2.0 - r;
    const double first = -r - x_left, full = x_right - x_left;
    if (first <= 0.0) fail(ErrorCode::MeanderDoesNotFit, "cell too narrow for the bend radius");
    double rem = length - lead - kPi * r / 2.0;
    seg({0, 0}, {0, lead});
    out.push_back({true, {}, {}, {-r, lead}, r, 0.0, kPi / 2.0});
    double y = lead + r;
    bool leftward = true;
    double run = std::min(rem, first);
    seg({-r, y}, {-r - run, y});
    rem -= run;
    while (rem > 1e-9) {
      const double bend = kPi * r;
      if (rem < bend) {
        // Not enough left for a bend: pull the previous run back so the bend fits exactly.
        Primitive& prev = out.back();
        const double shorten = bend - rem;
        if (prev.length() < shorten) fail(ErrorCode::MeanderDoesNotFit, "cannot close meander");
        prev.b.x += leftward ? shorten : -shorten;
        rem = bend;
      }
      const double xe = out.back().b.x;
      if (leftward)
        out.push_back({true, {}, {}, {xe, y + r}, r, -kPi / 2.0, -3.0 * kPi / 2.0});
      else
        out.push_back({true, {}, {}, {xe, y + r}, r, -kPi / 2.0, kPi / 2.0});
      rem -= bend;
      y += 2.0 * r;
      leftward = !leftward;
      run = std::clamp(rem, 0.0, full);
      if (run > 0.0) seg({xe, y}, {xe + (leftward ? -run : run), y});
      rem -= run;
    }
  }

  std::vector<Point> pts;
  for (const auto& p : out) {
    if (p.arc) {
      pts.push_back({p.c.x - p.r, p.c.y - p.r});
      pts.push_back({p.c.x + p.r, p.c.y + p.r});
    } else {
      pts.push_back(p.a);
      pts.push_back(p.b);
    }
  }
  const Rect box = bounding_box(pts);
  if (box.y1 + w / 2.0 > max_height)
    fail(ErrorCode::MeanderDoesNotFit, "meander of length " + std::to_string(length) + " um needs " +
                                            std::to_string(box.y1 + w / 2.0) + " um of height, have " +
                                            std::to_string(max_height));
  return out;
}

Point mirror(Point p, bool down) { return down ? Point{p.x, -p.y} : p; }

}  // namespace

Polyline meander_centerline(double length, double w, double cell_width, double max_height, bool downward) {
  Polyline line;
  for (const auto& p : meander_primitives(length, w, cell_width, max_height)) {
    if (p.arc) {
      const int n = arc_segments(p.a1 - p.a0);
      for (int i = 0; i <= n; ++i) {
        const double t = p.a0 + (p.a1 - p.a0) * i / n;
        line.push_back(mirror({p.c.x + p.r * std::cos(t), p.c.y + p.r * std::sin(t)}, downward));
      }
    } else {
      line.push_back(mirror(p.a, downward));
      line.push_back(mirror(p.b, downward));
    }
  }
  Polyline out;
  for (const auto& p : line)
    if (out.empty() || distance(out.back(), p) > 1e-9) out.push_back(p);
  return out;
}

namespace {

PlacedComponent make_resonator(const ResonatorSpec& spec, Point origin, const BusOptions& opt) {
  PlacedComponent c;
  c.id = "R" + spec.qubit_id;
  c.kind = ComponentKind::ReadoutResonator;
  c.origin = origin;
  c.attached_to = spec.qubit_id;
  c.params = {{"frequency", spec.target_frequency}, {"length", spec.length}, {"w", spec.w},
              {"g", spec.g},                        {"eps_r", spec.eps_r},   {"coupling_length", spec.coupling_length}};
  const auto prims = meander_primitives(spec.length, spec.w, opt.cell_width, opt.max_height);
  const double hw = spec.w / 2.0;
  for (const auto& p : prims) {
    if (p.arc) {
      Polygon band = arc_band(p.c, p.r, spec.w, p.a0, p.a1, arc_segments(p.a1 - p.a0));
      for (auto& q : band) q = mirror(q, opt.downward);
      c.footprint.push_back({layer::kQubit, std::move(band)});
    } else if (p.length() > 0.0) {
      const Point a = mirror(p.a, opt.downward), b = mirror(p.b, opt.downward);
      const Rect r{std::min(a.x, b.x) - (a.x == b.x ? hw : 0.0), std::min(a.y, b.y) - (a.y == b.y ? hw : 0.0),
                   std::max(a.x, b.x) + (a.x == b.x ? hw : 0.0), std::max(a.y, b.y) + (a.y == b.y ? hw : 0.0)};
      c.footprint.push_back({layer::kQubit, rect_polygon(r)});
    }
  }
  const auto& last = prims.back();
  Point end = last.b, dir{0, 1};
  if (last.arc) {
    end = {last.c.x + last.r * std::cos(last.a1), last.c.y + last.r * std::sin(last.a1)};
    dir = {last.a1 > last.a0 ? -1.0 : 1.0, 0.0};
  } else if (last.length() > 0.0) {
    dir = (last.b - last.a) * (1.0 / last.length());
  }
  // Ends of straight runs sit on the short edge of the drawn rectangle.
  c.ports = {{"readout", {0, 0}, mirror({0, -1}, opt.downward)},
             {"coupler", mirror(end, opt.downward), mirror(dir, opt.downward)}};
  return c;
}

}  // namespace

std::vector<ResonatorSpec> generate_readout_bus(ChipLayout& layout, const std::vector<std::string>& qubit_row,
                                                double f_start, double f_stop, const BusOptions& opt) {
  if (qubit_row.empty()) fail(ErrorCode::InvalidArguments, "readout bus needs at least one qubit");
  if (!(f_start > 0.0)) fail(ErrorCode::NonPositiveInput, "bus start frequency must be positive");
  if (qubit_row.size() > 1 && !(f_start < f_stop))
    fail(ErrorCode::InvalidArguments, "bus start frequency must be below stop frequency");

  std::vector<ResonatorSpec> specs;
  std::vector<PlacedComponent> made;
  const std::size_t n = qubit_row.size();
  for (std::size_t i = 0; i < n; ++i) {
    const PlacedComponent* q = layout.find(qubit_row[i]);
    if (!q) fail(ErrorCode::InvalidArguments, "unknown qubit " + qubit_row[i]);
    ResonatorSpec s;
    s.qubit_id = qubit_row[i];
    s.target_frequency = n == 1 ? f_start : f_start + (f_stop - f_start) * static_cast<double>(i) / (n - 1);
    s.w = opt.w;
    s.g = opt.g;
    s.eps_r = opt.eps_r;
    s.length = resonator_length(s);
    auto comp = make_resonator(s, q->port(opt.port), opt);
    // The last straight run faces the feedline.
    const auto line = meander_centerline(s.length, s.w, opt.cell_width, opt.max_height, opt.downward);
    s.coupling_length = line.size() >= 2 ? distance(line[line.size() - 2], line.back()) : s.length;
    comp.params["coupling_length"] = s.coupling_length;
    specs.push_back(s);
    made.push_back(std::move(comp));
  }
  for (auto& c : made) layout.components.push_back(std::move(c));
  return specs;
}

void shift_layout(ChipLayout& layout, Point d) {
  for (auto& c : layout.components) c.origin = c.origin + d;
  for (auto& p : layout.paths)
    for (auto& q : p.spine) q = q + d;
  for (auto& p : layout.pins) p.position = p.position + d;
}

void fit_die(ChipLayout& layout, double width, double height, double align) {
  double w = std::max(width, layout.width), h = std::max(height, layout.height);
  double dx = (w - layout.width) / 2.0, dy = (h - layout.height) / 2.0;
  if (align > 0.0) {
    Point ref{0, 0};
    for (const auto& c : layout.components)
      if (c.is_qubit()) {
        ref = c.origin;
        break;
      }
    auto snap = [&](double coord, double shift, double& size) {
      // Pick the shift >= the centring shift that puts `coord` on a half-cell offset.
      const double target = coord + shift;
      double fixed = std::floor(target / align) * align + align / 2.0;
      if (fixed < target - 1e-9) fixed += align;
      const double extra = fixed - target;
      if (extra > 1e-9) size += align;
      return shift + extra;
    };
    dx = snap(ref.x, dx, w);
    dy = snap(ref.y, dy, h);
  }
  layout.width = w;
  layout.height = h;
  if (dx != 0.0 || dy != 0.0) shift_layout(layout, {dx, dy});
}

}  // namespace sqc
