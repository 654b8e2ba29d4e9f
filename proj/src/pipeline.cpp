#include "sqc/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "sqc/error.hpp"

namespace sqc {

std::string to_string(RouteStrategy s) { return s == RouteStrategy::Pattern ? "pattern" : "maze"; }

RouteStrategy route_strategy_from_string(const std::string& s) {
  if (s == "pattern") return RouteStrategy::Pattern;
  if (s == "maze") return RouteStrategy::Maze;
  fail(ErrorCode::InvalidArguments, "unknown routing strategy '" + s + "'");
}

ProcessRules resolve_rules(const PipelineConfig& cfg) {
  return cfg.custom_rules ? *cfg.custom_rules : builtin_process(cfg.process);
}

ChipLayout build_chip(const Topology& t, const PipelineConfig& cfg) {
  ChipLayout layout = place_qubits(t, cfg.place);
  const int rows = t.grid ? t.grid->rows : 1;
  for (int r = 0; r < rows; ++r) {
    BusOptions bo = cfg.bus;
    // The top row hangs its resonators below so the top edge stays free for pins.
    const bool top = rows > 1 && r == rows - 1;
    bo.downward = top;
    bo.port = top ? "south" : "north";
    generate_readout_bus(layout, t.row_ids(r), cfg.readout_start, cfg.readout_stop, bo);
  }
  // Meanders can reach past the qubit border; grow the die so it holds them.
  std::vector<Point> pts{{0, 0}, {layout.width, layout.height}};
  for (const auto& c : layout.components) {
    const Rect b = c.bbox();
    pts.push_back({b.x0, b.y0});
    pts.push_back({b.x1, b.y1});
  }
  const Rect all = bounding_box(pts);
  if (all.x0 < 0 || all.y0 < 0) shift_layout(layout, {-all.x0, -all.y0});
  layout.width = all.x1 - all.x0;
  layout.height = all.y1 - all.y0;
  return layout;
}

PinAssignment prepare_die(ChipLayout& layout, const PipelineConfig& cfg) {
  PatternOptions po;
  po.clearance = cfg.clearance;
  po.flip_chip = cfg.flip_chip;
  return prepare_pattern_die(layout, cfg.rows, cfg.cols, cfg.pins, po);
}

RoutingResult route_chip(ChipLayout& layout, const PinAssignment& a, const PipelineConfig& cfg) {
  RoutingResult res;
  if (cfg.strategy == RouteStrategy::Pattern) {
    PatternOptions po;
    po.clearance = cfg.clearance;
    po.flip_chip = cfg.flip_chip;
    res = route_pattern(layout, a, po);
  } else {
    GridGraph grid = build_grid(layout, cfg.pins.lane_pitch, cfg.clearance, false);
    std::vector<NetRequest> reqs;
    for (const auto& p : plan_nets(layout, grid, a, cfg.clearance)) {
      std::vector<std::string> ends{p.pin};
      if (layout.find(p.target)) ends.push_back(p.target);
      reqs.push_back({p.net, p.start, p.goal, ends, p.start_anchor, p.end_anchor});
    }
    if (cfg.net_order_seed) {
      std::mt19937 rng(*cfg.net_order_seed);
      std::shuffle(reqs.begin(), reqs.end(), rng);
    }
    res = route_all(grid, reqs, cfg.maze);
    if (cfg.flip_chip)
      for (auto& n : res.nets) n.layer = layer::kOpposite;
  }
  commit_routes(layout, res, cfg.route_width);
  return res;
}

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
void stage(PipelineResult& out, const std::string& name, F&& f) {
  const auto t0 = Clock::now();
  try {
    f();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(name, e);
  }
  out.timings.push_back({name, std::chrono::duration<double>(Clock::now() - t0).count()});
}

std::string describe(const PipelineConfig& c) {
  std::ostringstream os;
  os.precision(17);
  os << "rows=" << c.rows << " cols=" << c.cols << " pitch=" << c.place.pitch << " border=" << c.place.border
     << " strategy=" << to_string(c.strategy) << " flip_chip=" << c.flip_chip << " process=" << c.process
     << " readout=" << c.readout_start << ".." << c.readout_stop << " e_c=" << c.e_c;
  return os.str();
}

}  // namespace

PipelineResult run_pipeline(const PipelineConfig& cfg) {
  PipelineResult out;
  DesignDocument& doc = out.doc;
  doc.name = cfg.name;
  const std::string args = describe(cfg);
  ChipLayout layout;
  PinAssignment pins;
  ProcessRules rules;

  stage(out, "topology", [&] {
    ParameterBundle b;
    b.topology = generate_grid(cfg.rows, cfg.cols);
    doc = inject(doc, b, "pipeline.topology", args);
  });
  stage(out, "params", [&] {
    const auto plan = allocate_frequencies(*doc.topology, cfg.qubit_frequencies);
    std::map<std::string, QubitTarget> qs;
    for (const auto& [id, f] : plan) {
      QubitTarget t;
      t.f_q = f;
      t.E_C = cfg.e_c;
      qs[id] = t;
    }
    std::vector<CouplingTarget> cs;
    for (const auto& e : doc.topology->edges) cs.push_back({e, cfg.coupling_g});
    ParameterBundle b;
    b.circuit = inverse_solve(qs, cs);
    doc = inject(doc, b, "pipeline.params", args);
  });
  stage(out, "layout", [&] { layout = place_qubits(*doc.topology, cfg.place); });
  stage(out, "readout", [&] {
    layout = build_chip(*doc.topology, cfg);
    ParameterBundle b;
    b.layout = layout;
    doc = inject(doc, b, "pipeline.layout", args);
  });
  stage(out, "route", [&] {
    pins = prepare_die(layout, cfg);
    const RoutingResult res = route_chip(layout, pins, cfg);
    out.pins = pins.total();
    out.nets = res.nets.size();
    out.nets_routed = res.routed_count();
    out.node_crossings = static_cast<std::size_t>(res.total_crossings);
    if (!res.failures.empty())
      fail(ErrorCode::NoPath, std::to_string(res.failures.size()) + " nets unrouted, first: " + res.failures.front());
    ParameterBundle b;
    b.layout = layout;
    doc = inject(doc, b, "pipeline.route", args);
  });
  stage(out, "procmap", [&] {
    rules = resolve_rules(cfg);
    layout = apply_rules(layout, rules);
    ParameterBundle b;
    b.layout = layout;
    b.process_rules = rules;
    doc = inject(doc, b, "pipeline.procmap", args);
  });
  stage(out, "bridges", [&] {
    auto br = insert_air_bridges(layout, rules);
    out.bridges = br.crossings.size();
    layout = std::move(br.layout);
    ParameterBundle b;
    b.layout = layout;
    doc = inject(doc, b, "pipeline.bridges", args);
  });
  if (cfg.flip_chip)
    stage(out, "indium", [&] {
      layout = place_indium_columns(layout, rules);
      for (const auto& c : layout.components)
        if (c.kind == ComponentKind::IndiumColumn) ++out.indium_columns;
      ParameterBundle b;
      b.layout = layout;
      doc = inject(doc, b, "pipeline.indium", args);
    });
  stage(out, "drc", [&] { out.drc = drc(layout, rules); });
  stage(out, "gds", [&] {
    out.gds = write_gds(layout, cfg.gds);
    doc.layout_ref = cfg.name + ".gds";
  });
  return out;
}

}  // namespace sqc
