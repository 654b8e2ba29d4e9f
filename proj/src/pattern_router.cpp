#include "sqc/pattern_router.hpp"

#include <algorithm>
#include <cmath>

#include "sqc/error.hpp"
#include "sqc/maze_router.hpp"

namespace sqc {

int PinSpec::pin_step() const { return std::max(1, static_cast<int>(std::ceil(pitch() / lane_pitch - 1e-9))); }

int PinSpec::pin_node_depth() const {
  return std::max(0, static_cast<int>(std::ceil((distance_to_chip + pad_width) / lane_pitch - 0.5 - 1e-9)));
}

std::size_t PinAssignment::total() const {
  std::size_t n = 0;
  for (const auto& [e, slots] : edges) n += slots.size();
  return n;
}

std::vector<Pin> PinAssignment::to_pins() const {
  std::vector<Pin> out;
  const double inner = spec.distance_to_chip + spec.pad_width;
  for (const auto& [edge, slots] : edges) {
    for (const auto& s : slots) {
      Pin p;
      p.id = s.id;
      p.edge = edge;
      p.width = spec.pad_width;
      p.depth = spec.pad_width;
      p.role = s.role;
      p.target = s.target;
      switch (edge) {
        case EdgeSide::Bottom: p.position = {s.along, inner}; break;
        case EdgeSide::Top: p.position = {s.along, height - inner}; break;
        case EdgeSide::Left: p.position = {inner, s.along}; break;
        case EdgeSide::Right: p.position = {width - inner, s.along}; break;
      }
      out.push_back(std::move(p));
    }
  }
  return out;
}

const PinSlot* PinAssignment::find(const std::string& pin_id) const {
  for (const auto& [e, slots] : edges)
    for (const auto& s : slots)
      if (s.id == pin_id) return &s;
  return nullptr;
}

bool MappingRules::reverse(EdgeSide e) const {
  switch (e) {
    case EdgeSide::Top: return top_reverse;
    case EdgeSide::Bottom: return bottom_reverse;
    case EdgeSide::Left: return left_reverse;
    case EdgeSide::Right: return right_reverse;
  }
  return false;
}

std::size_t total_pins(int rows, int cols) {
  if (rows < 1 || cols < 1) fail(ErrorCode::InvalidDimension, "pin count needs m, n >= 1");
  return 2 * static_cast<std::size_t>(rows) + static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
}

bool escapes_left(int row, int col, int cols) {
  if (2 * col + 1 < cols) return true;
  if (2 * col + 1 > cols) return false;
  return row % 2 == 0;  // middle column of an odd row count alternates
}

std::string bus_id(int row) { return "B" + std::to_string(row); }

namespace {

bool side_row(int r, int rows) { return r > 0 && r < rows - 1; }

}  // namespace

std::map<EdgeSide, std::vector<std::string>> edge_targets(int rows, int cols) {
  if (rows < 1 || cols < 1) fail(ErrorCode::InvalidDimension, "grid needs m, n >= 1");
  std::map<EdgeSide, std::vector<std::string>> q;
  q[EdgeSide::Bottom];
  q[EdgeSide::Top];
  for (int c = 0; c < cols; ++c) q[EdgeSide::Bottom].push_back(qubit_id(c));
  if (rows >= 2)
    for (int c = 0; c < cols; ++c) q[EdgeSide::Top].push_back(qubit_id((rows - 1) * cols + c));
  auto& left = q[EdgeSide::Left];
  auto& right = q[EdgeSide::Right];
  for (int r = 0; r < rows; ++r) {
    if (side_row(r, rows)) {
      for (int c = cols - 1; c >= 0; --c)
        if (escapes_left(r, c, cols)) left.push_back(qubit_id(r * cols + c));
      for (int c = 0; c < cols; ++c)
        if (!escapes_left(r, c, cols)) right.push_back(qubit_id(r * cols + c));
    }
    left.push_back(bus_id(r));
    right.push_back(bus_id(r));
  }
  return q;
}

std::array<std::size_t, 4> edge_counts(int rows, int cols) {
  const auto q = edge_targets(rows, cols);
  return {q.at(EdgeSide::Bottom).size(), q.at(EdgeSide::Right).size(), q.at(EdgeSide::Top).size(),
          q.at(EdgeSide::Left).size()};
}

std::vector<std::string> map_pins(const std::vector<std::string>& pins, const std::vector<std::string>& targets,
                                  EdgeSide edge, const MappingRules& rules) {
  if (pins.size() != targets.size())
    fail(ErrorCode::LengthMismatch, std::to_string(pins.size()) + " pins for " + std::to_string(targets.size()) +
                                        " targets on the " + to_string(edge) + " edge");
  std::vector<std::string> out(pins.size());
  const bool rev = rules.reverse(edge);
  for (std::size_t i = 0; i < pins.size(); ++i) out[i] = rev ? targets[pins.size() - 1 - i] : targets[i];
  return out;
}

namespace {

char edge_letter(EdgeSide e) {
  switch (e) {
    case EdgeSide::Bottom: return 'B';
    case EdgeSide::Top: return 'T';
    case EdgeSide::Left: return 'L';
    case EdgeSide::Right: return 'R';
  }
  return '?';
}

bool horizontal(EdgeSide e) { return e == EdgeSide::Bottom || e == EdgeSide::Top; }

/// Edge length needed to hold `count` pins at node positions.
double required_edge(std::size_t count, const PinSpec& s) {
  if (count == 0) return 0.0;
  const double lattice =
      ((static_cast<double>(count) - 1.0) * s.pin_step()) * s.lane_pitch + s.pad_width + 2.0 * s.pad_gap +
      2.0 * s.lane_pitch;  // node snapping and integer centring each cost up to one lane
  return std::max(static_cast<double>(count) * s.pitch() + s.pad_gap, lattice);
}

}  // namespace

PinAssignment allocate_pins(int rows, int cols, double width, double height, const PinSpec& spec,
                            const MappingRules& rules) {
  if (rows < 1 || cols < 1) fail(ErrorCode::InvalidDimension, "pin allocation needs m, n >= 1");
  if (!(spec.distance_to_chip > 0 && spec.pad_width > 0 && spec.pad_gap > 0 && spec.lane_pitch > 0))
    fail(ErrorCode::SpecInfeasible, "pin distance, pad width, pad gap and lane pitch must be positive");

  const auto targets = edge_targets(rows, cols);
  PinAssignment a;
  a.rows = rows;
  a.cols = cols;
  a.spec = spec;
  const std::size_t nb = targets.at(EdgeSide::Bottom).size(), nt = targets.at(EdgeSide::Top).size();
  const std::size_t nl = targets.at(EdgeSide::Left).size(), nr = targets.at(EdgeSide::Right).size();
  a.width = std::max(width, required_edge(std::max(nb, nt), spec));
  a.height = std::max(height, required_edge(std::max(nl, nr), spec));

  const double cs = spec.lane_pitch;
  const int step = spec.pin_step();
  for (const auto& [edge, q] : targets) {
    const std::size_t count = q.size();
    auto& slots = a.edges[edge];
    if (count == 0) continue;
    const int nodes = static_cast<int>(std::floor((horizontal(edge) ? a.width : a.height) / cs + 1e-9));
    // Centre the array; with an even span the start sits half a node lower,
    // which is the parity shift between odd and even pin counts.
    const int span = static_cast<int>(count - 1) * step;
    const int start = nodes / 2 - span / 2;
    std::vector<double> along;
    for (std::size_t i = 0; i < count; ++i) along.push_back((start + static_cast<int>(i) * step + 0.5) * cs);
    // Listing order: bottom/left from their low end, top/right from their high end.
    if (edge == EdgeSide::Top || edge == EdgeSide::Right) std::reverse(along.begin(), along.end());
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < count; ++i) ids.push_back(std::string("P") + edge_letter(edge) + std::to_string(i));
    const auto mapped = map_pins(ids, q, edge, rules);
    for (std::size_t i = 0; i < count; ++i) {
      const bool bus = !mapped[i].empty() && mapped[i][0] == 'B';
      slots.push_back({ids[i], edge, along[i], bus ? PinRole::Transmission : PinRole::Control, mapped[i]});
    }
  }
  return a;
}

namespace {

struct RowInfo {
  std::vector<const PlacedComponent*> qubits;  // by column
  std::vector<Cell> port;                      // control port escape cell per column
  std::vector<Point> port_point;
  int feed = 0;     // feedline row
  bool feed_below = false;
};

struct Analysis {
  int m = 0, n = 0;
  std::vector<RowInfo> rows;
  int XL = 0, XR = 0, YB = 0, YT = 0;
  int xmid = 0;
};

Analysis analyse(const ChipLayout& layout, const GridGraph& grid, const PinAssignment& a, double clearance) {
  Analysis an;
  an.m = a.rows;
  an.n = a.cols;
  an.rows.resize(static_cast<std::size_t>(a.rows));
  for (auto& r : an.rows) {
    r.qubits.assign(static_cast<std::size_t>(a.cols), nullptr);
    r.port.resize(static_cast<std::size_t>(a.cols));
    r.port_point.resize(static_cast<std::size_t>(a.cols));
  }
  for (const auto& c : layout.components) {
    if (!c.is_qubit() || !c.lattice) continue;
    const auto [col, row] = *c.lattice;
    if (row < 0 || row >= a.rows || col < 0 || col >= a.cols)
      fail(ErrorCode::InvalidArguments, "qubit " + c.id + " lies outside the " + std::to_string(a.rows) + "x" +
                                            std::to_string(a.cols) + " assignment grid");
    an.rows[static_cast<std::size_t>(row)].qubits[static_cast<std::size_t>(col)] = &c;
  }

  std::vector<Point> pts;
  for (const auto& c : layout.components) {
    const Rect b = c.bbox();
    pts.push_back({b.x0, b.y0});
    pts.push_back({b.x1, b.y1});
  }
  if (pts.empty()) fail(ErrorCode::InvalidArguments, "layout has no components");
  const Rect core = bounding_box(pts).inflated(clearance);
  an.XL = grid.cell_of({core.x0, core.y0}).x - 1;
  an.YB = grid.cell_of({core.x0, core.y0}).y - 1;
  an.XR = grid.cell_of({core.x1, core.y1}).x + 1;
  an.YT = grid.cell_of({core.x1, core.y1}).y + 1;
  if (an.XL < 0 || an.YB < 0 || an.XR >= grid.cols || an.YT >= grid.rows)
    fail(ErrorCode::CorridorExhausted, "no routing margin around the qubit array");
  an.xmid = (an.XL + an.XR) / 2;

  for (int r = 0; r < a.rows; ++r) {
    auto& info = an.rows[static_cast<std::size_t>(r)];
    const bool top = a.rows >= 2 && r == a.rows - 1;
    info.feed_below = top;
    double lo = 1e300, hi = -1e300;
    for (int c = 0; c < a.cols; ++c) {
      const PlacedComponent* q = info.qubits[static_cast<std::size_t>(c)];
      if (!q) fail(ErrorCode::InvalidArguments, "no qubit at row " + std::to_string(r) + ", column " + std::to_string(c));
      const std::string port = top ? "north" : "south";
      const Port* p = q->find_port(port);
      if (!p) fail(ErrorCode::InvalidArguments, "qubit " + q->id + " lacks a " + port + " port");
      info.port_point[static_cast<std::size_t>(c)] = q->origin + p->position;
      info.port[static_cast<std::size_t>(c)] = escape_cell(grid, q->origin + p->position, p->direction);
      const Rect b = q->bbox();
      lo = std::min(lo, b.y0);
      hi = std::max(hi, b.y1);
    }
    for (const auto& c : layout.components) {
      if (c.attached_to.empty()) continue;
      const auto* owner = layout.find(c.attached_to);
      if (!owner || !owner->lattice || owner->lattice->row != r) continue;
      const Rect b = c.bbox();
      lo = std::min(lo, b.y0);
      hi = std::max(hi, b.y1);
    }
    const double x = grid.center({an.xmid, 0}).x;
    info.feed = top ? grid.cell_of({x, lo - clearance}).y - 1 : grid.cell_of({x, hi + clearance}).y + 1;
  }
  return an;
}

struct Line {
  std::string target;
  int arrival = 0;                // along-edge coordinate where the line meets the fan
  std::vector<Cell> core;         // vertices after the fan, ending at the goal
  Point end_anchor;
  std::vector<std::string> endpoints;
  PinRole role = PinRole::Control;
};

Cell to_abs(EdgeSide e, int depth, int along, const GridGraph& g) {
  switch (e) {
    case EdgeSide::Left: return {depth, along};
    case EdgeSide::Right: return {g.cols - 1 - depth, along};
    case EdgeSide::Bottom: return {along, depth};
    case EdgeSide::Top: return {along, g.rows - 1 - depth};
  }
  return {};
}

int pin_along_node(const PinSlot& s, const GridGraph& g, EdgeSide e) {
  return horizontal(e) ? g.cell_of({s.along, 0}).x : g.cell_of({0, s.along}).y;
}

/// Lines of one edge, in Q order (increasing along-edge arrival coordinate).
std::vector<Line> edge_lines(EdgeSide edge, const Analysis& an, const GridGraph& g) {
  std::vector<Line> lines;
  auto control = [&](int r, int c, int track) {
    const auto& info = an.rows[static_cast<std::size_t>(r)];
    const Cell port = info.port[static_cast<std::size_t>(c)];
    Line l;
    l.target = info.qubits[static_cast<std::size_t>(c)]->id;
    l.end_anchor = info.port_point[static_cast<std::size_t>(c)];
    l.endpoints = {l.target};
    if (horizontal(edge)) {
      l.arrival = port.x;
      l.core = {port};
    } else {
      l.arrival = port.y - track;
      l.core = {{port.x, l.arrival}, port};
    }
    return l;
  };
  auto bus = [&](int r) {
    const auto& info = an.rows[static_cast<std::size_t>(r)];
    Line l;
    l.target = bus_id(r);
    l.role = PinRole::Transmission;
    l.arrival = info.feed;
    const Cell end{edge == EdgeSide::Left ? an.xmid : an.xmid + 1, info.feed};
    l.core = {end};
    l.end_anchor = g.center(end);
    return l;
  };

  if (edge == EdgeSide::Bottom) {
    for (int c = 0; c < an.n; ++c) lines.push_back(control(0, c, 0));
  } else if (edge == EdgeSide::Top) {
    if (an.m >= 2)
      for (int c = 0; c < an.n; ++c) lines.push_back(control(an.m - 1, c, 0));
  } else {
    const bool left = edge == EdgeSide::Left;
    for (int r = 0; r < an.m; ++r) {
      if (side_row(r, an.m)) {
        if (left) {
          for (int c = an.n - 1; c >= 0; --c)
            if (escapes_left(r, c, an.n)) lines.push_back(control(r, c, c));
        } else {
          for (int c = 0; c < an.n; ++c)
            if (!escapes_left(r, c, an.n)) lines.push_back(control(r, c, an.n - 1 - c));
        }
        // Tracks must clear the feedline of the row below.
        const int tracks = (an.n + 1) / 2;
        const auto& info = an.rows[static_cast<std::size_t>(r)];
        const int lowest = info.port.front().y - (tracks - 1);
        if (lowest <= an.rows[static_cast<std::size_t>(r - 1)].feed)
          fail(ErrorCode::CorridorExhausted, "row " + std::to_string(r) + " needs " + std::to_string(tracks) +
                                                 " control tracks above the feedline below it");
      }
      lines.push_back(bus(r));
    }
  }
  for (std::size_t i = 1; i < lines.size(); ++i)
    if (lines[i].arrival <= lines[i - 1].arrival)
      fail(ErrorCode::CorridorExhausted, "lines on the " + to_string(edge) + " edge arrive out of order near " +
                                             lines[i].target);
  return lines;
}

int fan_limit(EdgeSide e, const Analysis& an, const GridGraph& g) {
  switch (e) {
    case EdgeSide::Left: return an.XL;
    case EdgeSide::Right: return g.cols - 1 - an.XR;
    case EdgeSide::Bottom: return an.YB;
    case EdgeSide::Top: return g.rows - 1 - an.YT;
  }
  return 0;
}

struct FanNet {
  NetPlan plan;
  std::vector<Cell> vertices;
  std::vector<std::string> endpoints;
};

std::vector<FanNet> build_edge(EdgeSide edge, const Analysis& an, const GridGraph& g, const PinAssignment& a,
                               const std::vector<Pin>& pins, bool with_route) {
  std::vector<FanNet> out;
  const auto lines = edge_lines(edge, an, g);
  const auto it = a.edges.find(edge);
  const std::vector<PinSlot> empty;
  const auto& slots = it == a.edges.end() ? empty : it->second;
  if (slots.size() != lines.size())
    fail(ErrorCode::LengthMismatch, "assignment has " + std::to_string(slots.size()) + " pins on the " +
                                        to_string(edge) + " edge, layout needs " + std::to_string(lines.size()));

  // Pair pins with lines by target, then require an order-preserving match.
  std::vector<std::pair<int, std::size_t>> pairs;  // (pin along node, line index)
  for (const auto& s : slots) {
    const auto li = std::find_if(lines.begin(), lines.end(), [&](const Line& l) { return l.target == s.target; });
    if (li == lines.end()) fail(ErrorCode::InvalidArguments, "pin " + s.id + " targets unknown " + s.target);
    pairs.push_back({pin_along_node(s, g, edge), static_cast<std::size_t>(li - lines.begin())});
  }
  std::vector<std::size_t> slot_of_line(lines.size());
  for (std::size_t i = 0; i < slots.size(); ++i) slot_of_line[pairs[i].second] = i;
  for (std::size_t i = 1; i < lines.size(); ++i)
    if (pairs[slot_of_line[i]].first <= pairs[slot_of_line[i - 1]].first)
      fail(ErrorCode::InvalidConfig, "pin mapping on the " + to_string(edge) + " edge does not preserve order");

  const int dp = a.spec.pin_node_depth();
  const int limit = fan_limit(edge, an, g);
  const bool along_x = horizontal(edge);
  const int along_max = along_x ? g.cols : g.rows;

  std::vector<int> up, down;  // line indices needing a lane
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int p = pairs[slot_of_line[i]].first;
    if (p > lines[i].arrival) up.push_back(static_cast<int>(i));
    if (p < lines[i].arrival) down.push_back(static_cast<int>(i));
  }
  std::reverse(down.begin(), down.end());  // highest arrival takes the lane nearest the edge
  std::vector<int> lane(lines.size(), -1);
  int next = dp + 1;
  for (int i : up) lane[static_cast<std::size_t>(i)] = next++;
  for (int i : down) lane[static_cast<std::size_t>(i)] = next++;
  if (next - 1 > limit)
    fail(ErrorCode::CorridorExhausted, "the " + to_string(edge) + " edge needs " + std::to_string(next - 1 - dp) +
                                           " lanes but only " + std::to_string(std::max(0, limit - dp)) + " fit");

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& s = slots[slot_of_line[i]];
    const int p = pairs[slot_of_line[i]].first;
    if (p < 0 || p >= along_max) fail(ErrorCode::CorridorExhausted, "pin " + s.id + " is off the grid");
    if (along_x && (p <= an.XL || p >= an.XR))
      fail(ErrorCode::CorridorExhausted, "pin " + s.id + " falls inside a side fan");
    const Line& l = lines[i];
    FanNet f;
    f.plan.pin = s.id;
    f.plan.target = l.target;
    f.plan.role = l.role;
    f.plan.edge = edge;
    f.plan.net = l.role == PinRole::Transmission ? l.target + "_" + to_string(edge) : l.target;
    f.plan.start = to_abs(edge, dp, p, g);
    f.plan.goal = l.core.back();
    const auto pin = std::find_if(pins.begin(), pins.end(), [&](const Pin& q) { return q.id == s.id; });
    f.plan.start_anchor = pin->position;
    f.plan.end_anchor = l.end_anchor;
    f.endpoints = {s.id};
    for (const auto& e : l.endpoints) f.endpoints.push_back(e);
    if (with_route) {
      f.vertices.push_back(f.plan.start);
      if (lane[i] >= 0) {
        f.vertices.push_back(to_abs(edge, lane[i], p, g));
        f.vertices.push_back(to_abs(edge, lane[i], l.arrival, g));
      }
      for (const auto& c : l.core) f.vertices.push_back(c);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<FanNet> build_all(const ChipLayout& layout, const GridGraph& grid, const PinAssignment& a,
                              double clearance, bool with_route) {
  const Analysis an = analyse(layout, grid, a, clearance);
  const auto pins = a.to_pins();
  std::vector<FanNet> all;
  for (EdgeSide e : {EdgeSide::Top, EdgeSide::Bottom, EdgeSide::Left, EdgeSide::Right}) {
    auto part = build_edge(e, an, grid, a, pins, with_route);
    for (auto& f : part) all.push_back(std::move(f));
  }
  return all;
}

}  // namespace

std::vector<NetPlan> plan_nets(const ChipLayout& layout, const GridGraph& grid, const PinAssignment& a,
                               double clearance) {
  std::vector<NetPlan> out;
  for (auto& f : build_all(layout, grid, a, clearance, false)) out.push_back(std::move(f.plan));
  return out;
}

RoutingResult route_pattern(const ChipLayout& layout, const PinAssignment& a, const PatternOptions& opt) {
  GridGraph grid = build_grid(layout, a.spec.lane_pitch, opt.clearance);
  auto nets = build_all(layout, grid, a, opt.clearance, true);
  RoutingResult result;
  for (auto& f : nets) {
    NetRoute r;
    r.net = f.plan.net;
    r.layer = opt.flip_chip ? layer::kOpposite : layer::kRouting;
    r.endpoints = f.endpoints;
    r.start_anchor = f.plan.start_anchor;
    r.end_anchor = f.plan.end_anchor;
    r.path.nodes = compress_path(f.vertices);
    for (const auto& c : r.path.expanded()) {
      if (!grid.in_bounds(c) || grid.is_blocked(c))
        fail(ErrorCode::CorridorExhausted, "net " + r.net + " runs into blocked cell (" + std::to_string(c.x) + "," +
                                               std::to_string(c.y) + ")");
    }
    r.path.corners = count_corners(r.path);
    r.path.crossings = count_crossings(r.path, grid);
    r.path.cost = static_cast<double>(r.path.steps());
    for (const auto& c : r.path.expanded()) grid.set_occupied(c);
    r.routed = true;
    result.total_corners += r.path.corners;
    result.total_crossings += r.path.crossings;
    result.nets.push_back(std::move(r));
  }
  result.grid = std::move(grid);
  return result;
}

PinAssignment prepare_pattern_die(ChipLayout& layout, int rows, int cols, const PinSpec& spec,
                                  const PatternOptions& opt, const MappingRules& rules) {
  const auto counts = edge_counts(rows, cols);  // bottom, right, top, left
  std::vector<Point> pts;
  for (const auto& c : layout.components) {
    const Rect b = c.bbox();
    pts.push_back({b.x0, b.y0});
    pts.push_back({b.x1, b.y1});
  }
  if (pts.empty()) fail(ErrorCode::InvalidArguments, "layout has no components");
  const Rect core = bounding_box(pts).inflated(opt.clearance);
  const double cs = spec.lane_pitch;
  const int dp = spec.pin_node_depth();
  auto margin = [&](std::size_t lines) { return (dp + static_cast<double>(lines) + 3.0) * cs; };
  const double mx = std::max(margin(counts[3]), margin(counts[1]));
  const double my = std::max(margin(counts[0]), margin(counts[2]));
  // Grow each side independently so every fan gets its margin, then nudge so
  // qubit origins land on node centres.
  const double dl = std::max(0.0, mx - core.x0), dr = std::max(0.0, mx - (layout.width - core.x1));
  const double db = std::max(0.0, my - core.y0), dt = std::max(0.0, my - (layout.height - core.y1));
  Point ref{cs / 2.0, cs / 2.0};
  for (const auto& c : layout.components)
    if (c.is_qubit()) {
      ref = c.origin;
      break;
    }
  auto snap = [&](double coord, double shift) {
    const double t = coord + shift;
    double f = std::floor(t / cs) * cs + cs / 2.0;
    if (f < t - 1e-9) f += cs;
    return shift + (f - t);
  };
  const double dx = snap(ref.x, dl), dy = snap(ref.y, db);
  shift_layout(layout, {dx, dy});
  layout.width += dx + dr + cs;
  layout.height += dy + dt + cs;
  PinAssignment a = allocate_pins(rows, cols, layout.width, layout.height, spec, rules);
  if (a.width > layout.width + 1e-9 || a.height > layout.height + 1e-9) {
    fit_die(layout, a.width, a.height, cs);
    a = allocate_pins(rows, cols, layout.width, layout.height, spec, rules);
  }
  layout.pins = a.to_pins();
  return a;
}

}  // namespace sqc
