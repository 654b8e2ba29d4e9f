#include "sqc/process.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "sqc/error.hpp"

namespace sqc {

namespace {

constexpr double kEps = 1e-9;

/// Uniform bucket grid over bounding boxes.
class BoxIndex {
 public:
  explicit BoxIndex(double bucket) : b_(bucket) {}

  void insert(int id, const Rect& box) {
    if (static_cast<std::size_t>(id) >= boxes_.size()) boxes_.resize(id + 1);
    boxes_[id] = box;
    for (std::int64_t ix = key(box.x0); ix <= key(box.x1); ++ix)
      for (std::int64_t iy = key(box.y0); iy <= key(box.y1); ++iy) cells_[pack(ix, iy)].push_back(id);
  }

  /// Calls fn(a, b) once for every pair whose boxes touch.
  void pairs(const std::function<void(int, int)>& fn) const {
    for (const auto& [k, ids] : cells_) {
      for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
          const Rect& a = boxes_[ids[i]];
          const Rect& b = boxes_[ids[j]];
          if (a.x0 > b.x1 || b.x0 > a.x1 || a.y0 > b.y1 || b.y0 > a.y1) continue;
          // Only the bucket holding the lower-left corner of the overlap reports.
          if (pack(key(std::max(a.x0, b.x0)), key(std::max(a.y0, b.y0))) != k) continue;
          fn(std::min(ids[i], ids[j]), std::max(ids[i], ids[j]));
        }
      }
    }
  }

  std::vector<int> query(const Rect& box) const {
    std::vector<int> out;
    for (std::int64_t ix = key(box.x0); ix <= key(box.x1); ++ix) {
      for (std::int64_t iy = key(box.y0); iy <= key(box.y1); ++iy) {
        auto it = cells_.find(pack(ix, iy));
        if (it == cells_.end()) continue;
        for (int id : it->second) {
          const Rect& r = boxes_[id];
          if (r.x0 > box.x1 || box.x0 > r.x1 || r.y0 > box.y1 || box.y0 > r.y1) continue;
          out.push_back(id);
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  std::int64_t key(double v) const { return static_cast<std::int64_t>(std::floor(v / b_)); }
  static std::int64_t pack(std::int64_t x, std::int64_t y) {
    return static_cast<std::int64_t>((static_cast<std::uint64_t>(x) << 32) ^ static_cast<std::uint32_t>(y));
  }

  double b_;
  std::vector<Rect> boxes_;
  std::unordered_map<std::int64_t, std::vector<int>> cells_;
};

Point project(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 <= 0.0) return a;
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return a + ab * t;
}

struct Closest {
  double d = std::numeric_limits<double>::infinity();
  Point at;  // midpoint of the closest pair
};

Closest seg_seg(Point a, Point b, Point c, Point d) {
  const auto si = intersect_segments(a, b, c, d);
  if (si.kind != SegmentIntersection::Kind::None) return {0.0, si.p0};
  Closest best;
  auto consider = [&](Point p, Point q) {
    const double dd = distance(p, q);
    if (dd < best.d) best = {dd, (p + q) * 0.5};
  };
  consider(a, project(a, c, d));
  consider(b, project(b, c, d));
  consider(project(c, a, b), c);
  consider(project(d, a, b), d);
  return best;
}

Rect seg_box(Point a, Point b) {
  return {std::min(a.x, b.x), std::min(a.y, b.y), std::max(a.x, b.x), std::max(a.y, b.y)};
}

/// Layers sharing a physical face are spacing-checked against each other.
/// Indium columns (-1) interact with everything.
int face_of(int layer) {
  switch (layer) {
    case layer::kQubit:
    case layer::kRouting:
    case layer::kPin:
    case layer::kJunction: return 0;
    case layer::kOpposite: return 1;
    case layer::kAirbridge: return 2;
    case layer::kIndium: return -1;
    default: return 100 + layer;
  }
}

bool faces_interact(int a, int b) { return a == b || a == -1 || b == -1; }

enum class OwnerKind { Component, Path, Pin };

struct Owner {
  OwnerKind kind;
  std::string name;
  std::string attached;
  std::vector<std::string> endpoints;
  std::size_t path_index = 0;
};

struct Item {
  int owner = 0;
  int face = 0;
  double half = 0.0;  // half width of a path segment
  Point a, b;         // segment, when poly is null
  const Polygon* poly = nullptr;
  Rect box;           // geometry box grown by `half`
};

Closest item_distance(const Item& x, const Item& y) {
  if (!x.poly && !y.poly) return seg_seg(x.a, x.b, y.a, y.b);
  if (x.poly && !y.poly) return item_distance(y, x);
  if (!x.poly) {  // segment to polygon
    if (point_in_polygon(x.a, *y.poly)) return {0.0, x.a};
    Closest best;
    const auto& p = *y.poly;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Closest c = seg_seg(x.a, x.b, p[i], p[(i + 1) % p.size()]);
      if (c.d < best.d) best = c;
    }
    return best;
  }
  const auto& p = *x.poly;
  const auto& q = *y.poly;
  if (point_in_polygon(p[0], q)) return {0.0, p[0]};
  if (point_in_polygon(q[0], p)) return {0.0, q[0]};
  Closest best;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) {
      const Closest c = seg_seg(p[i], p[(i + 1) % p.size()], q[j], q[(j + 1) % q.size()]);
      if (c.d < best.d) best = c;
    }
  return best;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return !s.empty() && std::find(v.begin(), v.end(), s) != v.end();
}

/// Electrically joined owners are exempt from spacing.
bool related(const Owner& a, const Owner& b) {
  if (a.kind == OwnerKind::Component && b.kind == OwnerKind::Component)
    return a.attached == b.name || b.attached == a.name;
  if (a.kind == OwnerKind::Path && b.kind == OwnerKind::Path) {
    for (const auto& e : a.endpoints)
      if (contains(b.endpoints, e)) return true;
    return false;
  }
  if (b.kind == OwnerKind::Path) return related(b, a);
  if (a.kind == OwnerKind::Path) return contains(a.endpoints, b.name);
  return false;
}

/// Geometry of a layout flattened into index items.
struct Scene {
  std::vector<Owner> owners;
  std::vector<Item> items;
  std::deque<Polygon> polys;
};

Scene build_scene(const ChipLayout& layout, bool with_pins = true) {
  Scene s;
  for (const auto& c : layout.components) {
    const int o = static_cast<int>(s.owners.size());
    s.owners.push_back({OwnerKind::Component, c.id, c.attached_to, {}, 0});
    for (const auto& sh : c.footprint) {
      if (sh.polygon.size() < 3) continue;
      s.polys.push_back(c.absolute(sh));
      Item it;
      it.owner = o;
      it.face = face_of(sh.layer);
      it.poly = &s.polys.back();
      it.box = bounding_box(*it.poly);
      s.items.push_back(it);
    }
  }
  for (std::size_t pi = 0; pi < layout.paths.size(); ++pi) {
    const auto& p = layout.paths[pi];
    const int o = static_cast<int>(s.owners.size());
    s.owners.push_back({OwnerKind::Path, "net:" + p.net, "", p.endpoints, pi});
    const auto line = p.centerline();
    for (std::size_t i = 1; i < line.size(); ++i) {
      Item it;
      it.owner = o;
      it.face = face_of(p.layer);
      it.half = p.width / 2.0;
      it.a = line[i - 1];
      it.b = line[i];
      it.box = seg_box(it.a, it.b).inflated(it.half);
      s.items.push_back(it);
    }
  }
  if (with_pins) {
    for (const auto& pin : layout.pins) {
      const int o = static_cast<int>(s.owners.size());
      s.owners.push_back({OwnerKind::Pin, pin.id, "", {}, 0});
      s.polys.push_back(rect_polygon(pin.rect()));
      Item it;
      it.owner = o;
      it.face = face_of(pin.layer);
      it.poly = &s.polys.back();
      it.box = pin.rect();
      s.items.push_back(it);
    }
  }
  return s;
}

double bucket_for(const ChipLayout& layout) {
  return std::clamp(std::max(layout.width, layout.height) / 128.0, 100.0, 1000.0);
}

std::string pair_subject(const std::string& a, const std::string& b) {
  return a < b ? a + "|" + b : b + "|" + a;
}

}  // namespace

void validate_rules(const ProcessRules& r) {
  const std::pair<const char*, double> dims[] = {
      {"min_line_width", r.min_line_width}, {"corner_radius", r.corner_radius}, {"pad_width", r.pad_width},
      {"pad_gap", r.pad_gap},               {"min_spacing", r.min_spacing},     {"bridge_span", r.bridge_span},
      {"bridge_width", r.bridge_width},     {"indium_pitch", r.indium_pitch},   {"indium_diameter", r.indium_diameter}};
  for (const auto& [n, v] : dims)
    if (!(v > 0.0) || !std::isfinite(v))
      fail(ErrorCode::InvalidArguments, std::string("process rule ") + n + " must be positive");
  if (r.corner_radius < r.min_line_width / 2.0)
    fail(ErrorCode::InvalidArguments, "corner radius must be at least half the line width");
}

std::vector<std::string> builtin_process_names() { return {"fine-4um", "generic-10um"}; }

ProcessRules builtin_process(const std::string& name) {
  if (name == "generic-10um") return {"generic-10um", 10.0, 20.0, 100.0, 50.0, 10.0, 40.0, 10.0, 300.0, 50.0};
  if (name == "fine-4um") return {"fine-4um", 4.0, 8.0, 80.0, 40.0, 4.0, 20.0, 6.0, 200.0, 30.0};
  fail(ErrorCode::UnknownProcess, "unknown process '" + name + "'");
}

ChipLayout apply_rules(const ChipLayout& layout, const ProcessRules& rules) {
  validate_rules(rules);
  ChipLayout out = layout;
  std::vector<double> old_width(out.paths.size());
  bool widened = false;
  for (std::size_t i = 0; i < out.paths.size(); ++i) {
    auto& p = out.paths[i];
    old_width[i] = p.width;
    if (p.width < rules.min_line_width) {
      p.width = rules.min_line_width;
      widened = true;
    }
    p.corner_radius = rules.corner_radius;
  }
  for (auto& pin : out.pins) {
    pin.width = rules.pad_width;
    pin.depth = rules.pad_width;
  }
  if (!widened) return out;

  // A pair that was clear before widening must not overlap after it.
  struct Seg {
    std::size_t path;
    Point a, b;
  };
  std::vector<Seg> segs;
  BoxIndex index(bucket_for(out));
  for (std::size_t i = 0; i < out.paths.size(); ++i) {
    const auto& sp = out.paths[i].spine;
    for (std::size_t k = 1; k < sp.size(); ++k) {
      index.insert(static_cast<int>(segs.size()), seg_box(sp[k - 1], sp[k]).inflated(out.paths[i].width / 2.0));
      segs.push_back({i, sp[k - 1], sp[k]});
    }
  }
  index.pairs([&](int x, int y) {
    const Seg& s = segs[x];
    const Seg& t = segs[y];
    if (s.path == t.path) return;
    const auto& p = out.paths[s.path];
    const auto& q = out.paths[t.path];
    if (p.layer != q.layer || p.net == q.net) return;
    const double d = seg_seg(s.a, s.b, t.a, t.b).d;
    if (d <= kEps) return;  // a crossing, bridged later
    const double before = d - (old_width[s.path] + old_width[t.path]) / 2.0;
    const double after = d - (p.width + q.width) / 2.0;
    if (before >= 0.0 && after < -kEps)
      fail(ErrorCode::UnresolvableOverlap, "widening '" + p.net + "' and '" + q.net + "' makes them overlap");
  });
  return out;
}

std::vector<Crossing> find_crossings(const ChipLayout& layout) {
  struct Seg {
    std::size_t path;
    Point a, b;
  };
  std::vector<Seg> segs;
  BoxIndex index(bucket_for(layout));
  for (std::size_t i = 0; i < layout.paths.size(); ++i) {
    const auto& sp = layout.paths[i].spine;
    for (std::size_t k = 1; k < sp.size(); ++k) {
      index.insert(static_cast<int>(segs.size()), seg_box(sp[k - 1], sp[k]).inflated(kEps));
      segs.push_back({i, sp[k - 1], sp[k]});
    }
  }
  struct Piece {
    Point p0, p1;
    int seg_b;
  };
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Piece>> hits;
  index.pairs([&](int x, int y) {
    Seg s = segs[x];
    Seg t = segs[y];
    int tb = y;
    if (s.path == t.path) return;
    if (layout.paths[s.path].layer != layout.paths[t.path].layer) return;
    if (s.path > t.path) {
      std::swap(s, t);
      tb = x;
    }
    const auto si = intersect_segments(s.a, s.b, t.a, t.b);
    if (si.kind == SegmentIntersection::Kind::None) return;
    hits[{s.path, t.path}].push_back({si.p0, si.p1, tb});
  });

  std::vector<Crossing> out;
  for (auto& [key, pieces] : hits) {
    // Connected pieces (touching within tolerance) form one crossing.
    std::vector<std::size_t> parent(pieces.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t i) {
      return parent[i] == i ? i : parent[i] = root(parent[i]);
    };
    for (std::size_t i = 0; i < pieces.size(); ++i)
      for (std::size_t j = i + 1; j < pieces.size(); ++j)
        if (segment_distance(pieces[i].p0, pieces[i].p1, pieces[j].p0, pieces[j].p1) <= 1e-6)
          parent[root(i)] = root(j);
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < pieces.size(); ++i) groups[root(i)].push_back(i);
    std::vector<Crossing> local;
    for (const auto& [r, members] : groups) {
      // Representative: the piece with the smallest start point.
      std::size_t best = members.front();
      for (std::size_t m : members) {
        const Point a = pieces[m].p0, b = pieces[best].p0;
        if (a.x < b.x || (a.x == b.x && a.y < b.y)) best = m;
      }
      Point lo = pieces[best].p0, hi = pieces[best].p0;
      for (std::size_t m : members)
        for (Point p : {pieces[m].p0, pieces[m].p1}) {
          if (p.x < lo.x || (p.x == lo.x && p.y < lo.y)) lo = p;
          if (p.x > hi.x || (p.x == hi.x && p.y > hi.y)) hi = p;
        }
      Crossing c;
      c.path_a = key.first;
      c.path_b = key.second;
      c.location = (lo + hi) * 0.5;
      const Seg& sb = segs[pieces[best].seg_b];
      const double len = distance(sb.a, sb.b);
      c.direction = len > 0.0 ? (sb.b - sb.a) * (1.0 / len) : Point{1.0, 0.0};
      local.push_back(c);
    }
    std::sort(local.begin(), local.end(), [](const Crossing& a, const Crossing& b) {
      return std::tie(a.location.x, a.location.y) < std::tie(b.location.x, b.location.y);
    });
    out.insert(out.end(), local.begin(), local.end());
  }
  return out;
}

BridgeResult insert_air_bridges(const ChipLayout& layout, const ProcessRules& rules, bool strict) {
  validate_rules(rules);
  BridgeResult res;
  res.layout = layout;
  std::erase_if(res.layout.components, [](const PlacedComponent& c) { return c.kind == ComponentKind::Airbridge; });
  res.crossings = find_crossings(res.layout);

  std::vector<Polygon> feet;
  for (std::size_t k = 0; k < res.crossings.size(); ++k) {
    const auto& x = res.crossings[k];
    const Point u = x.direction * (rules.bridge_span / 2.0);
    const Point v = Point{-x.direction.y, x.direction.x} * (rules.bridge_width / 2.0);
    Polygon foot = {Point{} - u - v, u - v, u + v, Point{} - u + v};
    for (auto& p : foot) {
      // keep axis-aligned bridges exact
      p.x = std::abs(p.x) < 1e-12 ? 0.0 : p.x;
      p.y = std::abs(p.y) < 1e-12 ? 0.0 : p.y;
    }
    PlacedComponent b;
    b.id = "AB" + std::to_string(k);
    b.kind = ComponentKind::Airbridge;
    b.origin = x.location;
    b.params = {{"span", rules.bridge_span}, {"width", rules.bridge_width}};
    b.footprint.push_back({layer::kAirbridge, foot});
    feet.push_back(translated(foot, x.location));
    res.layout.components.push_back(std::move(b));
  }

  BoxIndex index(bucket_for(res.layout));
  for (std::size_t i = 0; i < feet.size(); ++i)
    index.insert(static_cast<int>(i), bounding_box(feet[i]).inflated(rules.min_spacing / 2.0));
  index.pairs([&](int a, int b) {
    if (polygon_distance(feet[a], feet[b]) < rules.min_spacing - kEps) res.collisions.emplace_back(a, b);
  });
  std::sort(res.collisions.begin(), res.collisions.end());
  if (strict && !res.collisions.empty())
    fail(ErrorCode::BridgeCollision, "bridges AB" + std::to_string(res.collisions.front().first) + " and AB" +
                                         std::to_string(res.collisions.front().second) + " are closer than " +
                                         "the minimum spacing");
  return res;
}

ChipLayout place_indium_columns(const ChipLayout& layout, const ProcessRules& rules) {
  validate_rules(rules);
  ChipLayout out = layout;
  std::erase_if(out.components, [](const PlacedComponent& c) { return c.kind == ComponentKind::IndiumColumn; });
  const Scene scene = build_scene(out);
  BoxIndex index(bucket_for(out));
  for (std::size_t i = 0; i < scene.items.size(); ++i) index.insert(static_cast<int>(i), scene.items[i].box);

  const double p = rules.indium_pitch, r = rules.indium_diameter / 2.0, s = rules.min_spacing;
  const int nx = static_cast<int>(std::floor(out.width / p + kEps));
  const int ny = static_cast<int>(std::floor(out.height / p + kEps));
  int k = 0;
  for (int j = 0; j <= ny; ++j) {
    for (int i = 0; i <= nx; ++i) {
      const Point c{i * p, j * p};
      if (c.x - r - s < -kEps || c.x + r + s > out.width + kEps) continue;
      if (c.y - r - s < -kEps || c.y + r + s > out.height + kEps) continue;
      const Rect foot_rect{c.x - r, c.y - r, c.x + r, c.y + r};
      Item col;
      const Polygon foot = rect_polygon(foot_rect);
      col.poly = &foot;
      bool clear = true;
      for (int id : index.query(foot_rect.inflated(s))) {
        const Item& it = scene.items[id];
        if (item_distance(col, it).d - it.half < s - kEps) {
          clear = false;
          break;
        }
      }
      if (!clear) continue;
      PlacedComponent ic;
      ic.id = "IN" + std::to_string(k++);
      ic.kind = ComponentKind::IndiumColumn;
      ic.origin = c;
      ic.params = {{"diameter", rules.indium_diameter}};
      ic.footprint.push_back({layer::kIndium, rect_polygon({-r, -r, r, r})});
      out.components.push_back(std::move(ic));
    }
  }
  return out;
}

std::size_t DrcReport::count(const std::string& rule) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(), [&](const DrcViolation& v) { return v.rule == rule; }));
}

DrcReport drc(const ChipLayout& layout, const ProcessRules& rules) {
  validate_rules(rules);
  DrcReport rep;
  auto& V = rep.violations;

  for (const auto& p : layout.paths)
    if (p.width < rules.min_line_width - kEps)
      V.push_back({"min-width", "net:" + p.net, p.spine.empty() ? Point{} : p.spine.front(), p.width, rules.min_line_width});

  // Pads: size, then gap to the next pad on the same edge.
  std::map<EdgeSide, std::vector<const Pin*>> by_edge;
  for (const auto& pin : layout.pins) {
    const double worst = std::abs(pin.width - rules.pad_width) >= std::abs(pin.depth - rules.pad_width) ? pin.width
                                                                                                         : pin.depth;
    if (std::abs(worst - rules.pad_width) > kEps) V.push_back({"pad-size", pin.id, pin.position, worst, rules.pad_width});
    by_edge[pin.edge].push_back(&pin);
  }
  for (auto& [edge, pins] : by_edge) {
    const bool horizontal = edge == EdgeSide::Bottom || edge == EdgeSide::Top;
    std::sort(pins.begin(), pins.end(), [&](const Pin* a, const Pin* b) {
      return horizontal ? a->position.x < b->position.x : a->position.y < b->position.y;
    });
    for (std::size_t i = 1; i < pins.size(); ++i) {
      const Rect a = pins[i - 1]->rect(), b = pins[i]->rect();
      const double gap = horizontal ? b.x0 - a.x1 : b.y0 - a.y1;
      if (gap < rules.pad_gap - kEps)
        V.push_back({"pad-gap", pair_subject(pins[i - 1]->id, pins[i]->id),
                     (pins[i - 1]->position + pins[i]->position) * 0.5, gap, rules.pad_gap});
    }
  }

  // Bounds: every owner's geometry stays on the die.
  const Scene scene = build_scene(layout);
  const Rect die = layout.die();
  std::map<int, std::pair<double, Point>> outside;  // owner -> worst excursion
  for (const auto& it : scene.items) {
    const double ex = std::max({die.x0 - it.box.x0, die.y0 - it.box.y0, it.box.x1 - die.x1, it.box.y1 - die.y1});
    if (ex > kEps) {
      auto [pos, fresh] = outside.try_emplace(it.owner, ex, Point{(it.box.x0 + it.box.x1) / 2, (it.box.y0 + it.box.y1) / 2});
      if (!fresh && ex > pos->second.first) pos->second = {ex, {(it.box.x0 + it.box.x1) / 2, (it.box.y0 + it.box.y1) / 2}};
    }
  }
  for (const auto& [o, w] : outside) V.push_back({"out-of-bounds", scene.owners[o].name, w.second, w.first, 0.0});

  // Crossings need a bridge; the bridged neighbourhood is exempt from spacing.
  const auto crossings = find_crossings(layout);
  std::vector<Point> bridges;
  for (const auto& c : layout.components)
    if (c.kind == ComponentKind::Airbridge) bridges.push_back(c.origin);
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Point>> crossing_at;
  for (const auto& c : crossings) {
    crossing_at[{c.path_a, c.path_b}].push_back(c.location);
    const bool bridged = std::any_of(bridges.begin(), bridges.end(),
                                     [&](Point b) { return distance(b, c.location) <= 1e-6; });
    if (!bridged)
      V.push_back({"unbridged-crossing", pair_subject("net:" + layout.paths[c.path_a].net, "net:" + layout.paths[c.path_b].net),
                   c.location, 0.0, 0.0});
  }

  // Spacing, one report per owner pair at the closest approach.
  BoxIndex index(bucket_for(layout));
  for (std::size_t i = 0; i < scene.items.size(); ++i)
    index.insert(static_cast<int>(i), scene.items[i].box.inflated(rules.min_spacing / 2.0));
  std::map<std::pair<int, int>, Closest> worst;
  index.pairs([&](int x, int y) {
    const Item& a = scene.items[x];
    const Item& b = scene.items[y];
    if (a.owner == b.owner || !faces_interact(a.face, b.face)) return;
    const Owner& oa = scene.owners[a.owner];
    const Owner& ob = scene.owners[b.owner];
    if (related(oa, ob)) return;
    if (oa.kind == OwnerKind::Path && ob.kind == OwnerKind::Path) {
      const auto key = std::minmax(oa.path_index, ob.path_index);
      auto it = crossing_at.find({key.first, key.second});
      if (it != crossing_at.end()) {
        const double reach = std::max(rules.bridge_span / 2.0, rules.corner_radius) + a.half + b.half + rules.min_spacing;
        for (Point c : it->second)
          if (point_segment_distance(c, a.a, a.b) <= reach && point_segment_distance(c, b.a, b.b) <= reach) return;
      }
    }
    Closest c = item_distance(a, b);
    c.d -= a.half + b.half;
    if (c.d >= rules.min_spacing - kEps) return;
    const auto key = std::minmax(a.owner, b.owner);
    auto [pos, fresh] = worst.try_emplace({key.first, key.second}, c);
    if (!fresh && c.d < pos->second.d) pos->second = c;
  });
  for (const auto& [k, c] : worst)
    V.push_back({"min-spacing", pair_subject(scene.owners[k.first].name, scene.owners[k.second].name), c.at, c.d,
                 rules.min_spacing});

  std::sort(V.begin(), V.end(), [](const DrcViolation& a, const DrcViolation& b) {
    return std::tie(a.rule, a.subject, a.location.x, a.location.y) <
           std::tie(b.rule, b.subject, b.location.x, b.location.y);
  });
  return rep;
}

ProcessSelection select_process(const ChipLayout& layout, const std::vector<WeightedProcess>& candidates) {
  if (candidates.empty()) fail(ErrorCode::InvalidArguments, "no candidate processes");
  ProcessSelection sel;
  for (const auto& c : candidates) {
    if (!(c.weight > 0.0)) fail(ErrorCode::InvalidArguments, "process weights must be positive");
    ProcessScore s;
    s.name = c.rules.name;
    try {
      const auto mapped = insert_air_bridges(apply_rules(layout, c.rules), c.rules);
      s.violations = drc(mapped.layout, c.rules).violations.size();
      s.score = c.weight * static_cast<double>(s.violations);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnresolvableOverlap) throw;
      s.violations = std::numeric_limits<std::size_t>::max();
      s.score = std::numeric_limits<double>::infinity();
    }
    sel.scores.push_back(s);
  }
  const auto best = std::min_element(sel.scores.begin(), sel.scores.end(), [](const ProcessScore& a, const ProcessScore& b) {
    return a.score != b.score ? a.score < b.score : a.name < b.name;
  });
  sel.name = best->name;
  return sel;
}

std::string format_drc_text(const DrcReport& r) {
  std::ostringstream os;
  os.precision(10);
  if (r.clean()) os << "clean\n";
  for (const auto& v : r.violations)
    os << v.rule << ' ' << v.subject << " at (" << v.location.x << ", " << v.location.y << ") measured " << v.measured
       << " limit " << v.limit << '\n';
  return os.str();
}

std::string format_drc_csv(const DrcReport& r) {
  std::ostringstream os;
  os.precision(10);
  os << "rule,subject,x,y,measured,limit\n";
  for (const auto& v : r.violations)
    os << v.rule << ',' << v.subject << ',' << v.location.x << ',' << v.location.y << ',' << v.measured << ','
       << v.limit << '\n';
  return os.str();
}

}  // namespace sqc
