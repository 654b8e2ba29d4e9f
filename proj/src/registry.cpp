#include "sqc/registry.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "sqc/error.hpp"

namespace sqc {

std::string to_string(RequestCategory c) {
  switch (c) {
    case RequestCategory::DesignEntity: return "design-entity";
    case RequestCategory::Function: return "function";
    case RequestCategory::Library: return "library";
  }
  return "?";
}

std::string RequestKey::str() const {
  std::string s = to_string(category) + "/" + operation + "(";
  for (std::size_t i = 0; i < parameter_signature.size(); ++i) s += (i ? "," : "") + parameter_signature[i];
  return s + ")";
}

RequestKey make_key(RequestCategory c, std::string operation, std::vector<std::string> params) {
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());
  return {c, std::move(operation), std::move(params)};
}

void Registry::add(const RequestKey& key, std::string selector, Handler fn) {
  const RequestKey k = make_key(key.category, key.operation, key.parameter_signature);
  if (table_.count(k)) fail(ErrorCode::DuplicateRegistration, "request " + k.str() + " is already registered");
  const int n = static_cast<int>(table_.size()) + 1;
  table_.emplace(k, HandlerEntry{std::move(selector), std::move(fn), n});
}

const HandlerEntry* Registry::find(const RequestKey& key) const {
  auto it = table_.find(make_key(key.category, key.operation, key.parameter_signature));
  return it == table_.end() ? nullptr : &it->second;
}

std::vector<RequestKey> Registry::keys() const {
  std::vector<RequestKey> out;
  for (const auto& [k, v] : table_) out.push_back(k);
  return out;
}

namespace {

double arg_num(const RequestArgs& a, const std::string& k) {
  const std::string& s = a.at(k);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0') fail(ErrorCode::InvalidArguments, "argument " + k + "='" + s + "' is not a number");
  return v;
}

int arg_int(const RequestArgs& a, const std::string& k) {
  const double v = arg_num(a, k);
  if (v != static_cast<int>(v)) fail(ErrorCode::InvalidArguments, "argument " + k + " must be an integer");
  return static_cast<int>(v);
}

std::vector<double> arg_list(const RequestArgs& a, const std::string& k) {
  std::vector<double> out;
  std::stringstream ss(a.at(k));
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(arg_num({{k, item}}, k));
  return out;
}

Registry build_default() {
  using C = RequestCategory;
  Registry r;
  r.add(make_key(C::DesignEntity, "topology.generate-grid", {"rows", "cols"}), "",
        [](const ParameterBundle&, const RequestArgs& a) {
          ParameterBundle out;
          out.topology = generate_grid(arg_int(a, "rows"), arg_int(a, "cols"));
          return out;
        });
  r.add(make_key(C::DesignEntity, "topology.from-edges", {"edges"}), "",
        [](const ParameterBundle&, const RequestArgs& a) {
          ParameterBundle out;
          out.topology = parse_edge_list(a.at("edges"));
          return out;
        });
  r.add(make_key(C::Function, "circuit.inverse-solve", {"e_c", "frequencies", "g"}), "topology",
        [](const ParameterBundle& in, const RequestArgs& a) {
          const auto plan = allocate_frequencies(*in.topology, arg_list(a, "frequencies"));
          const double ec = arg_num(a, "e_c"), g = arg_num(a, "g");
          std::map<std::string, QubitTarget> qs;
          for (const auto& [id, f] : plan) {
            QubitTarget t;
            t.f_q = f;
            t.E_C = ec;
            qs[id] = t;
          }
          std::vector<CouplingTarget> cs;
          for (const auto& e : in.topology->edges) cs.push_back({e, g});
          ParameterBundle out;
          out.circuit = inverse_solve(qs, cs);
          return out;
        });
  r.add(make_key(C::Function, "layout.place", {"pitch"}), "topology",
        [](const ParameterBundle& in, const RequestArgs& a) {
          PlaceOptions opt;
          opt.pitch = arg_num(a, "pitch");
          ParameterBundle out;
          out.layout = place_qubits(*in.topology, opt);
          return out;
        });
  r.add(make_key(C::Function, "process.apply", {"process"}), "layout",
        [](const ParameterBundle& in, const RequestArgs& a) {
          const ProcessRules rules = builtin_process(a.at("process"));
          ParameterBundle out;
          out.layout = apply_rules(*in.layout, rules);
          out.process_rules = rules;
          return out;
        });
  r.add(make_key(C::Library, "process.lookup", {"name"}), "",
        [](const ParameterBundle&, const RequestArgs& a) {
          ParameterBundle out;
          out.process_rules = builtin_process(a.at("name"));
          return out;
        });
  return r;
}

}  // namespace

const Registry& default_registry() {
  static const Registry reg = build_default();
  return reg;
}

DesignDocument dispatch(const Registry& reg, const RequestKey& key, const DesignDocument& doc,
                        const RequestArgs& args) {
  const HandlerEntry* h = reg.find(key);
  if (!h) fail(ErrorCode::UnregisteredRequest, "no handler for " + key.str());
  const RequestKey k = make_key(key.category, key.operation, key.parameter_signature);
  std::vector<std::string> given;
  for (const auto& [name, v] : args) given.push_back(name);
  if (given != k.parameter_signature)
    fail(ErrorCode::InvalidArguments, "arguments do not match the signature of " + k.str());
  ParameterBundle in;
  in.version = doc.version;
  if (!h->selector.empty()) in = extract(doc, h->selector);
  ParameterBundle out = h->fn(in, args);
  out.version = doc.version;
  std::string canonical = k.str();
  for (const auto& [name, v] : args) canonical += "\n" + name + "=" + v;
  return inject(doc, out, k.operation, canonical);
}

}  // namespace sqc
