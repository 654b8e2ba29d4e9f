#include "sqc/document.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sqc/error.hpp"

namespace sqc {

using nlohmann::json;

namespace {

// ---- writing ----

json pt(Point p) { return json::array({p.x, p.y}); }

json pts(const std::vector<Point>& v) {
  json a = json::array();
  for (const auto& p : v) a.push_back(pt(p));
  return a;
}

const char* role_name(PinRole r) { return r == PinRole::Transmission ? "transmission" : "control"; }

json to_j(const Topology& t) {
  json q = json::object();
  for (const auto& [id, c] : t.qubits) q[id] = json::array({c.col, c.row});
  json e = json::array();
  for (const auto& x : t.edges) e.push_back(json::array({x.a, x.b}));
  json j = {{"qubits", q}, {"edges", e}};
  if (t.grid) j["grid"] = {{"rows", t.grid->rows}, {"cols", t.grid->cols}};
  return j;
}

json to_j(const EquivalentCircuit& c) {
  json q = json::object();
  for (const auto& [id, p] : c.qubits)
    q[id] = {{"qubit_id", p.qubit_id}, {"C_q", p.C_q}, {"E_C", p.E_C}, {"E_J", p.E_J}, {"I_c", p.I_c},
             {"R_n", p.R_n},           {"L_j", p.L_j}, {"f_q", p.f_q}, {"delta", p.delta}};
  json cs = json::array();
  for (const auto& k : c.couplings)
    cs.push_back({{"a", k.edge.a}, {"b", k.edge.b}, {"C_c", k.C_c}, {"g_target", k.g_target}});
  return {{"qubits", q}, {"couplings", cs}};
}

json to_j(const ChipLayout& l) {
  json layers = json::object();
  for (const auto& [n, r] : l.layers) layers[std::to_string(n)] = to_string(r);
  json comps = json::array();
  for (const auto& c : l.components) {
    json ports = json::array();
    for (const auto& p : c.ports) ports.push_back({{"name", p.name}, {"position", pt(p.position)}, {"direction", pt(p.direction)}});
    json foot = json::array();
    for (const auto& s : c.footprint) foot.push_back({{"layer", s.layer}, {"polygon", pts(s.polygon)}});
    json jc = {{"id", c.id},       {"kind", to_string(c.kind)}, {"origin", pt(c.origin)}, {"params", c.params},
               {"ports", ports},   {"footprint", foot},         {"attached_to", c.attached_to}};
    if (c.lattice) jc["lattice"] = json::array({c.lattice->col, c.lattice->row});
    comps.push_back(std::move(jc));
  }
  json paths = json::array();
  for (const auto& p : l.paths)
    paths.push_back({{"net", p.net},
                     {"layer", p.layer},
                     {"width", p.width},
                     {"corner_radius", p.corner_radius},
                     {"spine", pts(p.spine)},
                     {"endpoints", p.endpoints}});
  json pins = json::array();
  for (const auto& p : l.pins)
    pins.push_back({{"id", p.id},
                    {"edge", to_string(p.edge)},
                    {"position", pt(p.position)},
                    {"width", p.width},
                    {"depth", p.depth},
                    {"role", role_name(p.role)},
                    {"target", p.target},
                    {"layer", p.layer}});
  return {{"width", l.width}, {"height", l.height}, {"layers", layers},
          {"components", comps}, {"paths", paths}, {"pins", pins}};
}

json to_j(const ProcessRules& r) {
  return {{"name", r.name},
          {"min_line_width", r.min_line_width},
          {"corner_radius", r.corner_radius},
          {"pin_pad", {{"width", r.pad_width}, {"gap", r.pad_gap}}},
          {"min_spacing", r.min_spacing},
          {"airbridge", {{"span", r.bridge_span}, {"width", r.bridge_width}}},
          {"indium_pitch", r.indium_pitch},
          {"indium_diameter", r.indium_diameter}};
}

json to_j(const ParameterBundle& b) {
  json j = {{"version", b.version}};
  if (b.topology) j["topology"] = to_j(*b.topology);
  if (b.circuit) j["circuit"] = to_j(*b.circuit);
  if (b.layout) j["layout"] = to_j(*b.layout);
  if (b.process_rules) j["process_rules"] = to_j(*b.process_rules);
  return j;
}

json to_j(const DesignDocument& d) {
  json j = {{"meta", {{"name", d.name}, {"version", d.version}}}};
  if (d.topology) j["topology"] = to_j(*d.topology);
  if (d.circuit) j["circuit"] = to_j(*d.circuit);
  if (d.layout) j["layout"] = to_j(*d.layout);
  if (d.layout_ref) j["layout_ref"] = *d.layout_ref;
  if (d.process_rules) j["process_rules"] = to_j(*d.process_rules);
  json prov = json::array();
  for (const auto& p : d.provenance)
    prov.push_back({{"operation", p.operation}, {"timestamp", p.timestamp}, {"digest", p.digest}});
  j["provenance"] = prov;
  return j;
}

// ---- reading; every failure names the JSON pointer of the field ----

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
  throw ParseFailure(ErrorCode::ParseError, ParseFailure::npos, path.empty() ? "/" : path, msg);
}

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path + "/" + key, "missing field");
  return *it;
}

double num(const json& j, const std::string& path) {
  if (!j.is_number()) bad(path, "expected a number");
  return j.get<double>();
}

int integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < INT32_MIN || v > INT32_MAX) bad(path, "integer out of range");
  return static_cast<int>(v);
}

std::string str(const json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

const json& arr(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  return j;
}

double num_at(const json& j, const std::string& key, const std::string& path) {
  return num(field(j, key, path), path + "/" + key);
}
int int_at(const json& j, const std::string& key, const std::string& path) {
  return integer(field(j, key, path), path + "/" + key);
}
std::string str_at(const json& j, const std::string& key, const std::string& path) {
  return str(field(j, key, path), path + "/" + key);
}

Point to_pt(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) bad(path, "expected [x, y]");
  return {num(j[0], path + "/0"), num(j[1], path + "/1")};
}

std::vector<Point> to_pts(const json& j, const std::string& path) {
  std::vector<Point> out;
  std::size_t i = 0;
  for (const auto& e : arr(j, path)) out.push_back(to_pt(e, path + "/" + std::to_string(i++)));
  return out;
}

std::vector<std::string> to_strs(const json& j, const std::string& path) {
  std::vector<std::string> out;
  std::size_t i = 0;
  for (const auto& e : arr(j, path)) out.push_back(str(e, path + "/" + std::to_string(i++)));
  return out;
}

template <typename F>
auto named(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseFailure&) {
    throw;
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

Topology topology_from(const json& j, const std::string& path) {
  Topology t;
  const json& q = field(j, "qubits", path);
  if (!q.is_object()) bad(path + "/qubits", "expected an object");
  for (const auto& [id, c] : q.items()) {
    const std::string p = path + "/qubits/" + id;
    if (!c.is_array() || c.size() != 2) bad(p, "expected [col, row]");
    t.qubits[id] = {integer(c[0], p + "/0"), integer(c[1], p + "/1")};
  }
  std::size_t i = 0;
  for (const auto& e : arr(field(j, "edges", path), path + "/edges")) {
    const std::string p = path + "/edges/" + std::to_string(i++);
    if (!e.is_array() || e.size() != 2) bad(p, "expected [a, b]");
    t.edges.emplace_back(str(e[0], p + "/0"), str(e[1], p + "/1"));
  }
  if (j.contains("grid")) {
    const json& g = j["grid"];
    t.grid = GridDims{int_at(g, "rows", path + "/grid"), int_at(g, "cols", path + "/grid")};
  }
  return t;
}

EquivalentCircuit circuit_from(const json& j, const std::string& path) {
  EquivalentCircuit c;
  const json& q = field(j, "qubits", path);
  if (!q.is_object()) bad(path + "/qubits", "expected an object");
  for (const auto& [id, v] : q.items()) {
    const std::string p = path + "/qubits/" + id;
    QubitElectricalParams e;
    e.qubit_id = str_at(v, "qubit_id", p);
    e.C_q = num_at(v, "C_q", p);
    e.E_C = num_at(v, "E_C", p);
    e.E_J = num_at(v, "E_J", p);
    e.I_c = num_at(v, "I_c", p);
    e.R_n = num_at(v, "R_n", p);
    e.L_j = num_at(v, "L_j", p);
    e.f_q = num_at(v, "f_q", p);
    e.delta = num_at(v, "delta", p);
    c.qubits[id] = e;
  }
  std::size_t i = 0;
  for (const auto& v : arr(field(j, "couplings", path), path + "/couplings")) {
    const std::string p = path + "/couplings/" + std::to_string(i++);
    CouplingParams k;
    k.edge = Edge(str_at(v, "a", p), str_at(v, "b", p));
    k.C_c = num_at(v, "C_c", p);
    k.g_target = num_at(v, "g_target", p);
    c.couplings.push_back(k);
  }
  return c;
}

ChipLayout layout_from(const json& j, const std::string& path) {
  ChipLayout l;
  l.width = num_at(j, "width", path);
  l.height = num_at(j, "height", path);
  l.layers.clear();
  const json& layers = field(j, "layers", path);
  if (!layers.is_object()) bad(path + "/layers", "expected an object");
  for (const auto& [k, v] : layers.items()) {
    const std::string p = path + "/layers/" + k;
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(k, &used);
      if (used != k.size()) throw std::invalid_argument(k);
    } catch (const std::exception&) {
      bad(p, "layer key is not an integer");
    }
    l.layers[n] = named(p, [&] { return layer_role_from_string(str(v, p)); });
  }
  std::size_t i = 0;
  for (const auto& v : arr(field(j, "components", path), path + "/components")) {
    const std::string p = path + "/components/" + std::to_string(i++);
    PlacedComponent c;
    c.id = str_at(v, "id", p);
    c.kind = named(p + "/kind", [&] { return component_kind_from_string(str_at(v, "kind", p)); });
    c.origin = to_pt(field(v, "origin", p), p + "/origin");
    const json& params = field(v, "params", p);
    if (!params.is_object()) bad(p + "/params", "expected an object");
    for (const auto& [k, x] : params.items()) c.params[k] = num(x, p + "/params/" + k);
    std::size_t k = 0;
    for (const auto& x : arr(field(v, "ports", p), p + "/ports")) {
      const std::string q = p + "/ports/" + std::to_string(k++);
      c.ports.push_back({str_at(x, "name", q), to_pt(field(x, "position", q), q + "/position"),
                         to_pt(field(x, "direction", q), q + "/direction")});
    }
    k = 0;
    for (const auto& x : arr(field(v, "footprint", p), p + "/footprint")) {
      const std::string q = p + "/footprint/" + std::to_string(k++);
      c.footprint.push_back({int_at(x, "layer", q), to_pts(field(x, "polygon", q), q + "/polygon")});
    }
    if (v.contains("lattice")) {
      const json& lc = v["lattice"];
      if (!lc.is_array() || lc.size() != 2) bad(p + "/lattice", "expected [col, row]");
      c.lattice = LatticeCoord{integer(lc[0], p + "/lattice/0"), integer(lc[1], p + "/lattice/1")};
    }
    c.attached_to = str_at(v, "attached_to", p);
    l.components.push_back(std::move(c));
  }
  i = 0;
  for (const auto& v : arr(field(j, "paths", path), path + "/paths")) {
    const std::string p = path + "/paths/" + std::to_string(i++);
    RoutedPath r;
    r.net = str_at(v, "net", p);
    r.layer = int_at(v, "layer", p);
    r.width = num_at(v, "width", p);
    r.corner_radius = num_at(v, "corner_radius", p);
    r.spine = to_pts(field(v, "spine", p), p + "/spine");
    r.endpoints = to_strs(field(v, "endpoints", p), p + "/endpoints");
    l.paths.push_back(std::move(r));
  }
  i = 0;
  for (const auto& v : arr(field(j, "pins", path), path + "/pins")) {
    const std::string p = path + "/pins/" + std::to_string(i++);
    Pin pin;
    pin.id = str_at(v, "id", p);
    pin.edge = named(p + "/edge", [&] { return edge_side_from_string(str_at(v, "edge", p)); });
    pin.position = to_pt(field(v, "position", p), p + "/position");
    pin.width = num_at(v, "width", p);
    pin.depth = num_at(v, "depth", p);
    const std::string role = str_at(v, "role", p);
    if (role != "transmission" && role != "control") bad(p + "/role", "unknown pin role '" + role + "'");
    pin.role = role == "transmission" ? PinRole::Transmission : PinRole::Control;
    pin.target = str_at(v, "target", p);
    pin.layer = int_at(v, "layer", p);
    l.pins.push_back(std::move(pin));
  }
  return l;
}

ProcessRules rules_from(const json& j, const std::string& path) {
  ProcessRules r;
  r.name = str_at(j, "name", path);
  r.min_line_width = num_at(j, "min_line_width", path);
  r.corner_radius = num_at(j, "corner_radius", path);
  const json& pad = field(j, "pin_pad", path);
  r.pad_width = num_at(pad, "width", path + "/pin_pad");
  r.pad_gap = num_at(pad, "gap", path + "/pin_pad");
  r.min_spacing = num_at(j, "min_spacing", path);
  const json& br = field(j, "airbridge", path);
  r.bridge_span = num_at(br, "span", path + "/airbridge");
  r.bridge_width = num_at(br, "width", path + "/airbridge");
  r.indium_pitch = num_at(j, "indium_pitch", path);
  r.indium_diameter = num_at(j, "indium_diameter", path);
  named(path, [&] { validate_rules(r); });
  return r;
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseFailure(ErrorCode::ParseError, e.byte > 0 ? e.byte - 1 : 0, "", "malformed design file");
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[i] = digits[v & 0xF];
  return s;
}

ParameterBundle extract(const DesignDocument& doc, const std::string& selector) {
  ParameterBundle b;
  b.version = doc.version;
  auto need = [&](bool present) {
    if (!present) fail(ErrorCode::MissingSubEntity, "document has no " + selector);
  };
  if (selector == "all") {
    b.topology = doc.topology;
    b.circuit = doc.circuit;
    b.layout = doc.layout;
    b.process_rules = doc.process_rules;
  } else if (selector == "topology") {
    need(doc.topology.has_value());
    b.topology = doc.topology;
  } else if (selector == "circuit") {
    need(doc.circuit.has_value());
    b.circuit = doc.circuit;
  } else if (selector == "layout") {
    need(doc.layout.has_value());
    b.layout = doc.layout;
  } else if (selector == "process_rules") {
    need(doc.process_rules.has_value());
    b.process_rules = doc.process_rules;
  } else {
    fail(ErrorCode::UnknownSelector, "unknown selector '" + selector + "'");
  }
  return b;
}

void check_cross_entity(const DesignDocument& doc) {
  auto known = [&](const std::string& id) { return doc.topology && doc.topology->qubits.count(id) > 0; };
  std::vector<std::string> missing;
  if (doc.circuit) {
    for (const auto& [id, q] : doc.circuit->qubits)
      if (!known(id)) missing.push_back("circuit:" + id);
    for (const auto& c : doc.circuit->couplings)
      for (const auto& id : {c.edge.a, c.edge.b})
        if (!known(id)) missing.push_back("circuit:" + id);
  }
  if (doc.layout)
    for (const auto& c : doc.layout->components)
      if (c.is_qubit() && !known(c.id)) missing.push_back("layout:" + c.id);
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    fail(ErrorCode::CrossEntityViolation, "qubits absent from topology: " + list);
  }
}

DesignDocument inject(const DesignDocument& doc, const ParameterBundle& bundle, const std::string& operation,
                      const std::string& args_canonical) {
  if (bundle.version != doc.version)
    fail(ErrorCode::VersionMismatch, "bundle version '" + bundle.version + "' != document '" + doc.version + "'");
  DesignDocument out = doc;
  if (bundle.topology) out.topology = bundle.topology;
  if (bundle.circuit) out.circuit = bundle.circuit;
  if (bundle.layout) out.layout = bundle.layout;
  if (bundle.process_rules) out.process_rules = bundle.process_rules;
  check_cross_entity(out);
  ProvenanceRecord rec;
  rec.operation = operation;
  rec.digest = hex64(fnv1a64(args_canonical + "\n" + to_j(bundle).dump()));
  out.provenance.push_back(std::move(rec));
  return out;
}

std::string save(const DesignDocument& doc) { return dump(to_j(doc)); }

DesignDocument load(std::string_view text) {
  const json j = parse_text(text);
  if (!j.is_object()) bad("", "expected an object");
  DesignDocument d;
  const json& meta = field(j, "meta", "");
  d.name = str_at(meta, "name", "/meta");
  d.version = str_at(meta, "version", "/meta");
  if (d.version != kSchemaVersion)
    fail(ErrorCode::VersionMismatch, "design file version '" + d.version + "', expected '" + kSchemaVersion + "'");
  if (j.contains("topology")) d.topology = topology_from(j["topology"], "/topology");
  if (j.contains("circuit")) d.circuit = circuit_from(j["circuit"], "/circuit");
  if (j.contains("layout")) d.layout = layout_from(j["layout"], "/layout");
  if (j.contains("layout_ref")) d.layout_ref = str(j["layout_ref"], "/layout_ref");
  if (j.contains("process_rules")) d.process_rules = rules_from(j["process_rules"], "/process_rules");
  if (j.contains("provenance")) {
    std::size_t i = 0;
    for (const auto& v : arr(j["provenance"], "/provenance")) {
      const std::string p = "/provenance/" + std::to_string(i++);
      d.provenance.push_back({str_at(v, "operation", p), str_at(v, "timestamp", p), str_at(v, "digest", p)});
    }
  }
  return d;
}

DesignDocument load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return load(ss.str());
}

void save_file(const std::string& path, const DesignDocument& doc) {
  // Write to a sibling file, then rename, so a failed write leaves the old file.
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) fail(ErrorCode::IoError, "cannot write '" + tmp + "'");
    out << save(doc);
    if (!out) fail(ErrorCode::IoError, "short write to '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) fail(ErrorCode::IoError, "cannot replace '" + path + "'");
}

std::string to_json_text(const Topology& t) { return dump(to_j(t)); }
std::string to_json_text(const EquivalentCircuit& c) { return dump(to_j(c)); }
std::string to_json_text(const ChipLayout& l) { return dump(to_j(l)); }
std::string to_json_text(const ProcessRules& r) { return dump(to_j(r)); }
std::string to_json_text(const ParameterBundle& b) { return dump(to_j(b)); }

ProcessRules process_rules_from_json(std::string_view text) { return rules_from(parse_text(text), ""); }

}  // namespace sqc
