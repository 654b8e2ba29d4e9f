// sqc: command-line front end. Every subcommand reads and rewrites the design
// file named by --design; outputs that are not the design go under --out.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "sqc/bench.hpp"
#include "sqc/devmap.hpp"
#include "sqc/document.hpp"
#include "sqc/error.hpp"
#include "sqc/gds.hpp"
#include "sqc/pipeline.hpp"
#include "sqc/svg.hpp"

namespace fs = std::filesystem;
using namespace sqc;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitStage = 3;

struct Globals {
  std::string design = "design.sqd";
  unsigned seed = 0;
  bool seed_given = false;
  std::string out = ".";
};

bool is_validation(ErrorCode c) {
  switch (c) {
    case ErrorCode::UnknownSelector:
    case ErrorCode::MissingSubEntity:
    case ErrorCode::VersionMismatch:
    case ErrorCode::CrossEntityViolation:
    case ErrorCode::UnregisteredRequest:
    case ErrorCode::InvalidArguments:
    case ErrorCode::ParseError:
    case ErrorCode::InvalidDimension:
    case ErrorCode::EmptyGateList:
    case ErrorCode::UnknownProcess:
    case ErrorCode::InvalidConfig:
    case ErrorCode::BadMagic:
    case ErrorCode::TruncatedRecord:
    case ErrorCode::OddLength:
    case ErrorCode::IoError:
      return true;
    default:
      return false;
  }
}

DesignDocument open_design(const Globals& g) {
  if (fs::exists(g.design)) return load_file(g.design);
  DesignDocument d;
  d.name = fs::path(g.design).stem().string();
  return d;
}

DesignDocument must_open(const Globals& g) {
  if (!fs::exists(g.design)) fail(ErrorCode::IoError, "design file '" + g.design + "' does not exist");
  return load_file(g.design);
}

fs::path out_path(const Globals& g, const std::string& file) {
  fs::create_directories(g.out);
  return fs::path(g.out) / file;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || *end) fail(ErrorCode::InvalidArguments, "'" + item + "' is not a number");
    out.push_back(v);
  }
  if (out.empty()) fail(ErrorCode::InvalidArguments, "empty list");
  return out;
}

std::vector<std::pair<int, int>> parse_sizes(const std::string& s) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int m = 0, n = 0;
    char x = 0, extra = 0;
    if (std::sscanf(item.c_str(), "%d%c%d%c", &m, &x, &n, &extra) != 3 || x != 'x' || m < 1 || n < 1)
      fail(ErrorCode::InvalidArguments, "size '" + item + "' is not MxN");
    out.emplace_back(m, n);
  }
  if (out.empty()) fail(ErrorCode::InvalidArguments, "no sizes given");
  return out;
}

std::vector<RouteStrategy> parse_strategies(const std::string& s) {
  std::vector<RouteStrategy> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(route_strategy_from_string(item));
  return out;
}

ProcessRules rules_for(const DesignDocument& d, const std::string& process) {
  if (!process.empty()) return builtin_process(process);
  if (d.process_rules) return *d.process_rules;
  return builtin_process("generic-10um");
}

const Topology& need_topology(const DesignDocument& d) {
  if (!d.topology) fail(ErrorCode::MissingSubEntity, "design has no topology (run `sqc topo` first)");
  return *d.topology;
}

const ChipLayout& need_layout(const DesignDocument& d) {
  if (!d.layout) fail(ErrorCode::MissingSubEntity, "design has no layout (run `sqc layout` first)");
  return *d.layout;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Runs each bench cell as its own child process and merges the CSV rows.
std::vector<BenchRecord> bench_parallel(const std::string& self, const std::vector<std::pair<int, int>>& sizes,
                                        const std::vector<RouteStrategy>& strategies, int reps) {
  std::vector<std::string> cmds;
  for (auto s : strategies)
    for (auto [m, n] : sizes)
      cmds.push_back("'" + self + "' bench --rows-only --reps " + std::to_string(reps) + " --sizes " +
                     std::to_string(m) + "x" + std::to_string(n) + " --strategies " + to_string(s));
  const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  std::vector<BenchRecord> out;
  for (std::size_t at = 0; at < cmds.size(); at += width) {
    std::vector<FILE*> pipes;
    for (std::size_t i = at; i < std::min(cmds.size(), at + width); ++i) {
      FILE* p = popen(cmds[i].c_str(), "r");
      if (!p) fail(ErrorCode::IoError, "cannot start bench worker");
      pipes.push_back(p);
    }
    for (FILE* p : pipes) {
      std::string text;
      char buf[512];
      while (std::fgets(buf, sizeof buf, p)) text += buf;
      if (pclose(p) != 0) fail(ErrorCode::IoError, "bench worker failed");
      for (auto& r : parse_bench_csv(text)) out.push_back(r);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sqc: superconducting quantum chip design flow"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--design", g.design, "design file (.sqd)");
  app.add_option("--seed", g.seed, "seed for randomized choices (maze net order)")
      ->each([&](const std::string&) { g.seed_given = true; });
  app.add_option("--out", g.out, "output directory");

  // topo
  auto* topo = app.add_subcommand("topo", "create the qubit topology");
  int t_rows = 0, t_cols = 0;
  std::string t_edges;
  topo->add_option("--rows", t_rows, "grid rows");
  topo->add_option("--cols", t_cols, "grid columns");
  topo->add_option("--edges", t_edges, "edge-list file (\"idA idB\" per line)");

  // params
  auto* params = app.add_subcommand("params", "solve the equivalent circuit");
  std::string p_freqs = "4.17e9,4.5e9";
  double p_ec = 2.98e8, p_g = 10e6;
  std::string p_ej_mode = "standard", p_ic_mode = "standard";
  params->add_option("--frequencies", p_freqs, "qubit frequency palette, Hz, comma separated")->capture_default_str();
  params->add_option("--ec", p_ec, "charging energy, Hz")->capture_default_str();
  params->add_option("--g", p_g, "coupling strength, Hz")->capture_default_str();
  params->add_option("--ej-mode", p_ej_mode, "standard | literal")->capture_default_str();
  params->add_option("--ic-mode", p_ic_mode, "standard | literal")->capture_default_str();

  // layout
  auto* lay = app.add_subcommand("layout", "place qubits and readout buses");
  PipelineConfig l_cfg;
  std::string l_style = "xmon";
  bool l_no_readout = false;
  lay->add_option("--pitch", l_cfg.place.pitch, "qubit pitch, um")->capture_default_str();
  lay->add_option("--border", l_cfg.place.border, "die border, um")->capture_default_str();
  lay->add_option("--style", l_style, "xmon | transmon")->capture_default_str();
  lay->add_option("--readout-start", l_cfg.readout_start, "lowest readout frequency, Hz")->capture_default_str();
  lay->add_option("--readout-stop", l_cfg.readout_stop, "highest readout frequency, Hz")->capture_default_str();
  lay->add_flag("--no-readout", l_no_readout, "skip readout resonators");

  // route
  auto* route = app.add_subcommand("route", "allocate pins and route control and readout lines");
  std::string r_strategy = "pattern";
  bool r_flip = false;
  double r_k = 1.0;
  route->add_option("--strategy", r_strategy, "pattern | maze")->capture_default_str();
  route->add_flag("--flip-chip", r_flip, "route on the opposite chip layer");
  route->add_option("--k", r_k, "maze crossing weight")->capture_default_str();

  // devmap
  auto* dev = app.add_subcommand("devmap", "tune a qubit dimension to a target capacitance");
  std::string d_param, d_eval = "stub:linear";
  std::vector<std::string> d_args;
  double d_target = 0, d_lo = 0, d_hi = 0, d_tol = 1e-3;
  int d_iter = 60;
  dev->add_option("--param", d_param, "<component>[.<dimension>], e.g. Q0.arm_length")->required();
  dev->add_option("--target", d_target, "target capacitance, F")->required();
  dev->add_option("--evaluator", d_eval, "stub:linear | stub:pad-capacitance | cmd:<command>; called with the dimension in um")
      ->capture_default_str();
  dev->add_option("--arg", d_args, "evaluator coefficient k=v (stub:linear defaults to a=3.25e-16 F/um)");
  dev->add_option("--lo", d_lo, "lower bound on the dimension, um");
  dev->add_option("--hi", d_hi, "upper bound on the dimension, um");
  dev->add_option("--tol", d_tol, "relative tolerance")->capture_default_str();
  dev->add_option("--max-iter", d_iter, "iteration limit")->capture_default_str();

  // procmap
  auto* proc = app.add_subcommand("procmap", "apply process rules, air bridges and indium columns");
  std::string pm_process, pm_select;
  bool pm_no_bridges = false, pm_indium = false, pm_strict = false;
  proc->add_option("--process", pm_process, "process name");
  proc->add_option("--select", pm_select, "choose among name:weight,... by weighted DRC count");
  proc->add_flag("--no-bridges", pm_no_bridges, "skip air bridge insertion");
  proc->add_flag("--indium", pm_indium, "place indium columns (flip-chip)");
  proc->add_flag("--strict", pm_strict, "fail on colliding air bridges");

  // drc
  auto* drc_cmd = app.add_subcommand("drc", "run design rule checks");
  std::string drc_process, drc_csv;
  drc_cmd->add_option("--process", drc_process, "process name (default: the design's rules)");
  drc_cmd->add_option("--csv", drc_csv, "also write violations as CSV under --out");

  // gds
  auto* gds_cmd = app.add_subcommand("gds", "GDSII export, import and preview");
  gds_cmd->require_subcommand(1);
  auto* g_export = gds_cmd->add_subcommand("export", "write the layout as GDSII");
  auto* g_import = gds_cmd->add_subcommand("import", "read a GDSII file and summarize it");
  auto* g_preview = gds_cmd->add_subcommand("preview", "write an SVG preview of the layout");
  std::string g_file;
  bool g_into = false;
  double g_scale = 0.1;
  g_export->add_option("file", g_file, "output file (default <out>/<name>.gds)");
  g_import->add_option("file", g_file, "GDSII file")->required();
  g_import->add_flag("--into-design", g_into, "replace the design layout with the flattened geometry");
  g_preview->add_option("file", g_file, "output file (default <out>/<name>.svg)");
  g_preview->add_option("--scale", g_scale, "pixels per um")->capture_default_str();

  // pipeline
  auto* pipe = app.add_subcommand("pipeline", "run the whole flow on a grid chip");
  PipelineConfig cfg;
  std::string pp_strategy = "pattern", pp_freqs = "4.17e9,4.5e9", pp_name;
  bool pp_svg = false;
  pipe->add_option("--rows", cfg.rows, "grid rows")->capture_default_str();
  pipe->add_option("--cols", cfg.cols, "grid columns")->capture_default_str();
  pipe->add_option("--pitch", cfg.place.pitch, "qubit pitch, um")->capture_default_str();
  pipe->add_option("--strategy", pp_strategy, "pattern | maze")->capture_default_str();
  pipe->add_option("--process", cfg.process, "process name")->capture_default_str();
  pipe->add_option("--frequencies", pp_freqs, "qubit frequency palette, Hz")->capture_default_str();
  pipe->add_option("--readout-start", cfg.readout_start, "lowest readout frequency, Hz")->capture_default_str();
  pipe->add_option("--readout-stop", cfg.readout_stop, "highest readout frequency, Hz")->capture_default_str();
  pipe->add_option("--name", pp_name, "chip name (default: design file stem)");
  pipe->add_flag("--flip-chip", cfg.flip_chip, "route on the opposite layer and place indium columns");
  pipe->add_flag("--svg", pp_svg, "also write an SVG preview");

  // bench
  auto* bench = app.add_subcommand("bench", "router scaling benchmark");
  std::string b_sizes = "2x2,4x4,6x6,8x8,10x10,12x12,14x14,16x16", b_strats = "pattern,maze", b_csv = "bench.csv";
  int b_reps = 3;
  bool b_parallel = false, b_rows_only = false;
  bench->add_option("--sizes", b_sizes, "comma separated MxN list")->capture_default_str();
  bench->add_option("--strategies", b_strats, "pattern,maze")->capture_default_str();
  bench->add_option("--reps", b_reps, "repetitions per cell (>= 3)")->capture_default_str();
  bench->add_option("--csv", b_csv, "CSV file name under --out")->capture_default_str();
  bench->add_flag("--parallel", b_parallel, "run cells in separate processes");
  bench->add_flag("--rows-only", b_rows_only, "print CSV rows to stdout only")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  try {
    if (*topo) {
      DesignDocument d = open_design(g);
      ParameterBundle b;
      if (!t_edges.empty()) {
        std::ifstream in(t_edges);
        if (!in) fail(ErrorCode::IoError, "cannot read '" + t_edges + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        b.topology = parse_edge_list(ss.str());
      } else {
        b.topology = generate_grid(t_rows, t_cols);
      }
      // A new topology invalidates everything derived from the old one.
      d.circuit.reset();
      d.layout.reset();
      d.layout_ref.reset();
      d = inject(d, b, "topo", "rows=" + std::to_string(t_rows) + " cols=" + std::to_string(t_cols) + " edges=" + t_edges);
      save_file(g.design, d);
      std::cout << "topology: " << d.topology->qubits.size() << " qubits, " << d.topology->edges.size() << " edges\n";
    } else if (*params) {
      DesignDocument d = must_open(g);
      const Topology& t = need_topology(d);
      const auto plan = allocate_frequencies(t, parse_list(p_freqs));
      std::map<std::string, QubitTarget> qs;
      for (const auto& [id, f] : plan) {
        QubitTarget q;
        q.f_q = f;
        q.E_C = p_ec;
        qs[id] = q;
      }
      std::vector<CouplingTarget> cs;
      for (const auto& e : t.edges) cs.push_back({e, p_g});
      auto mode = [](const std::string& m) {
        if (m == "standard") return EnergyMode::Standard;
        if (m == "literal") return EnergyMode::Literal;
        fail(ErrorCode::InvalidArguments, "energy mode must be standard or literal");
      };
      InverseOptions opt;
      opt.ej_mode = mode(p_ej_mode);
      opt.ic_mode = mode(p_ic_mode);
      ParameterBundle b;
      b.circuit = inverse_solve(qs, cs, opt);
      d = inject(d, b, "params", "frequencies=" + p_freqs + " ec=" + fmt("%.17g", p_ec) + " g=" + fmt("%.17g", p_g));
      save_file(g.design, d);
      std::printf("%-6s %12s %12s %12s %12s %12s %12s\n", "qubit", "f_q/GHz", "C_q/fF", "E_J/GHz", "I_c/nA",
                  "R_n/kOhm", "L_j/nH");
      for (const auto& [id, q] : d.circuit->qubits)
        std::printf("%-6s %12.4f %12.3f %12.4f %12.4f %12.3f %12.3f\n", id.c_str(), q.f_q * 1e-9, q.C_q * 1e15,
                    q.E_J * 1e-9, q.I_c * 1e9, q.R_n * 1e-3, q.L_j * 1e9);
    } else if (*lay) {
      DesignDocument d = must_open(g);
      const Topology& t = need_topology(d);
      if (l_style == "transmon")
        l_cfg.place.style.kind = ComponentKind::TransmonFloating;
      else if (l_style != "xmon")
        fail(ErrorCode::InvalidArguments, "style must be xmon or transmon");
      ParameterBundle b;
      b.layout = l_no_readout ? place_qubits(t, l_cfg.place) : build_chip(t, l_cfg);
      d = inject(d, b, "layout", "pitch=" + fmt("%.17g", l_cfg.place.pitch) + " style=" + l_style);
      save_file(g.design, d);
      std::cout << "layout: " << d.layout->components.size() << " components, die " << d.layout->width << " x "
                << d.layout->height << " um\n";
    } else if (*route) {
      DesignDocument d = must_open(g);
      const Topology& t = need_topology(d);
      if (!t.grid) fail(ErrorCode::InvalidArguments, "routing needs a grid topology");
      PipelineConfig c;
      c.rows = t.grid->rows;
      c.cols = t.grid->cols;
      c.strategy = route_strategy_from_string(r_strategy);
      c.flip_chip = r_flip;
      c.maze.k = r_k;
      if (g.seed_given) c.net_order_seed = g.seed;
      ChipLayout layout = need_layout(d);
      const PinAssignment pins = prepare_die(layout, c);
      const RoutingResult res = route_chip(layout, pins, c);
      std::cout << "routed " << res.routed_count() << "/" << res.nets.size() << " nets, " << res.total_crossings
                << " crossings, " << res.total_corners << " corners\n";
      if (!res.failures.empty())
        throw StageError("route", Error(ErrorCode::NoPath, std::to_string(res.failures.size()) + " nets unrouted"));
      ParameterBundle b;
      b.layout = layout;
      d = inject(d, b, "route", "strategy=" + r_strategy + " flip_chip=" + std::to_string(r_flip));
      save_file(g.design, d);
    } else if (*dev) {
      DesignDocument d = must_open(g);
      ChipLayout layout = need_layout(d);
      const auto dot = d_param.find('.');
      const std::string d_comp = d_param.substr(0, dot);
      const PlacedComponent* comp = layout.find(d_comp);
      if (!comp) fail(ErrorCode::InvalidArguments, "no component '" + d_comp + "'");
      const std::string dim = tunable_dimension(*comp).first;
      if (dot != std::string::npos && d_param.substr(dot + 1) != dim)
        fail(ErrorCode::ComponentNotTunable, d_comp + " is tuned by " + dim + ", not " + d_param.substr(dot + 1));
      // 65 fF at the default 200 um arm.
      std::map<std::string, double> eargs{{"a", 3.25e-16}};
      for (const auto& kv : d_args) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) fail(ErrorCode::InvalidArguments, "--arg expects k=v, got '" + kv + "'");
        eargs[kv.substr(0, eq)] = parse_list(kv.substr(eq + 1)).front();
      }
      const CapacitanceMapping m =
          map_qubit_capacitance(layout, d_comp, d_target, make_evaluator(d_eval, eargs), d_lo, d_hi, d_tol, d_iter);
      ParameterBundle b;
      b.layout = layout;
      d = inject(d, b, "devmap", d_param + " target=" + fmt("%.17g", d_target) + " eval=" + d_eval);
      save_file(g.design, d);
      std::printf("%s.%s = %.6f um -> %.6e F after %d iterations (%d evaluations)\n", m.component.c_str(),
                  m.parameter.c_str(), m.result.value, m.result.achieved, m.result.iterations, m.result.evaluations);
    } else if (*proc) {
      DesignDocument d = must_open(g);
      ChipLayout layout = need_layout(d);
      ProcessRules rules;
      if (!pm_select.empty()) {
        std::vector<WeightedProcess> cands;
        std::stringstream ss(pm_select);
        std::string item;
        while (std::getline(ss, item, ',')) {
          const auto colon = item.find(':');
          const double w = colon == std::string::npos ? 1.0 : parse_list(item.substr(colon + 1)).front();
          cands.push_back({builtin_process(item.substr(0, colon)), w});
        }
        const ProcessSelection sel = select_process(layout, cands);
        rules = builtin_process(sel.name);
        std::cout << "selected " << rules.name << "\n";
      } else {
        rules = rules_for(d, pm_process);
      }
      layout = apply_rules(layout, rules);
      if (!pm_no_bridges) {
        const BridgeResult br = insert_air_bridges(layout, rules, pm_strict);
        std::cout << br.crossings.size() << " air bridges, " << br.collisions.size() << " collisions\n";
        layout = br.layout;
      }
      if (pm_indium) {
        layout = place_indium_columns(layout, rules);
        std::size_t k = 0;
        for (const auto& c : layout.components) k += c.kind == ComponentKind::IndiumColumn;
        std::cout << k << " indium columns\n";
      }
      ParameterBundle b;
      b.layout = layout;
      b.process_rules = rules;
      d = inject(d, b, "procmap", "process=" + rules.name);
      save_file(g.design, d);
    } else if (*drc_cmd) {
      const DesignDocument d = must_open(g);
      const DrcReport r = drc(need_layout(d), rules_for(d, drc_process));
      std::cout << format_drc_text(r);
      if (!drc_csv.empty()) {
        std::ofstream o(out_path(g, drc_csv));
        o << format_drc_csv(r);
      }
      if (!r.clean()) return kExitStage;
    } else if (*gds_cmd) {
      if (*g_export) {
        DesignDocument d = must_open(g);
        const fs::path p = g_file.empty() ? out_path(g, d.name + ".gds") : fs::path(g_file);
        GdsOptions opt;
        opt.library = d.name;
        write_file(p.string(), write_gds(need_layout(d), opt));
        d.layout_ref = p.string();
        save_file(g.design, d);
        std::cout << "wrote " << p.string() << "\n";
      } else if (*g_import) {
        const GdsLibrary lib = read_gds(read_file(g_file));
        std::cout << "library " << lib.name << ", user unit " << lib.user_unit() << ", db unit " << lib.db_unit() << " m\n";
        for (const auto& s : lib.structures) std::cout << "  " << s.name << ": " << s.elements.size() << " elements\n";
        if (g_into) {
          DesignDocument d = open_design(g);
          ParameterBundle b;
          b.layout = flatten_gds(lib);
          d = inject(d, b, "gds.import", g_file);
          save_file(g.design, d);
        }
      } else {
        const DesignDocument d = must_open(g);
        const fs::path p = g_file.empty() ? out_path(g, d.name + ".svg") : fs::path(g_file);
        SvgOptions opt;
        opt.scale = g_scale;
        std::ofstream(p) << export_svg(need_layout(d), opt);
        std::cout << "wrote " << p.string() << "\n";
      }
    } else if (*pipe) {
      cfg.strategy = route_strategy_from_string(pp_strategy);
      cfg.qubit_frequencies = parse_list(pp_freqs);
      cfg.name = pp_name.empty() ? fs::path(g.design).stem().string() : pp_name;
      cfg.gds.library = cfg.name;
      if (g.seed_given) cfg.net_order_seed = g.seed;
      PipelineResult r = run_pipeline(cfg);
      const fs::path gds_path = out_path(g, cfg.name + ".gds");
      write_file(gds_path.string(), r.gds);
      r.doc.layout_ref = gds_path.filename().string();
      save_file(g.design, r.doc);
      if (pp_svg) std::ofstream(out_path(g, cfg.name + ".svg")) << export_svg(*r.doc.layout);
      for (const auto& s : r.timings) std::printf("  %-9s %9.4f s\n", s.stage.c_str(), s.seconds);
      std::printf("%d qubits, %zu pins, %zu/%zu nets routed, %zu node crossings, %zu air bridges, %zu indium columns\n",
                  cfg.rows * cfg.cols, r.pins, r.nets_routed, r.nets, r.node_crossings, r.bridges, r.indium_columns);
      std::printf("gds %s (%zu bytes), design %s\n", gds_path.string().c_str(), r.gds.size(), g.design.c_str());
      std::cout << "drc: " << format_drc_text(r.drc);
      if (!r.drc.clean()) return kExitStage;
    } else if (*bench) {
      const auto sizes = parse_sizes(b_sizes);
      const auto strats = parse_strategies(b_strats);
      BenchReport rep;
      if (b_parallel) {
        if (b_reps < 3) fail(ErrorCode::InvalidArguments, "bench needs at least 3 repetitions");
        rep.records = bench_parallel(fs::read_symlink("/proc/self/exe").string(), sizes, strats, b_reps);
        rep.fits = fit_records(rep.records);
      } else {
        rep = bench_scaling(sizes, strats, b_reps);
      }
      if (b_rows_only) {
        std::cout << bench_csv(rep, false);
        return 0;
      }
      const fs::path p = out_path(g, b_csv);
      std::ofstream(p) << bench_csv(rep);
      std::cout << bench_csv(rep) << format_fits(rep) << "wrote " << p.string() << "\n";
    }
  } catch (const StageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_validation(e.code()) ? kExitValidation : kExitStage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (is_validation(e.code())) return kExitValidation;
    std::cerr << "failed stage: " << sub << "\n";
    return kExitStage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << sub << ": " << e.what() << "\n";
    return kExitStage;
  }
  return 0;
}
