#include "sqc/devmap.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sys/wait.h>

#include "sqc/circuit.hpp"

namespace sqc {

namespace {
std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}
}  // namespace

std::string to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::Increasing: return "increasing";
    case Monotonicity::Decreasing: return "decreasing";
    case Monotonicity::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

void check_problem(const MappingProblem& p) {
  if (!std::isfinite(p.lo) || !std::isfinite(p.hi) || !(p.lo < p.hi))
    fail(ErrorCode::InvalidArguments, "parameter bounds need lo < hi");
  if (!(p.tolerance > 0.0)) fail(ErrorCode::InvalidArguments, "tolerance must be positive");
  if (p.max_iterations < 1) fail(ErrorCode::InvalidArguments, "max_iterations must be >= 1");
  if (!std::isfinite(p.target)) fail(ErrorCode::InvalidArguments, "target must be finite");
}

struct Tracker {
  const Evaluator& eval;
  double target;
  double tol_abs;
  MappingResult best{0.0, 0.0, 0, 0};
  double best_err = std::numeric_limits<double>::infinity();

  double operator()(double x) {
    const double y = eval(x);
    ++best.evaluations;
    if (!std::isfinite(y)) fail(ErrorCode::EvaluatorFailed, "evaluator returned a non-finite value");
    const double err = std::abs(y - target);
    if (err < best_err) {
      best_err = err;
      best.value = x;
      best.achieved = y;
    }
    return y;
  }
  bool hit(double y) const { return std::abs(y - target) <= tol_abs; }
  MappingResult done(double x, double y, int it) const { return {x, y, it, best.evaluations}; }
};

}  // namespace

int bisection_bound(double lo, double hi, double tol, double scale) {
  return static_cast<int>(std::ceil(std::log2((hi - lo) / (tol * scale))));
}

MappingResult solve(const MappingProblem& p, const Evaluator& eval) {
  check_problem(p);
  if (!eval.fn) fail(ErrorCode::InvalidArguments, "evaluator has no function");
  const double tol_abs = p.target != 0.0 ? p.tolerance * std::abs(p.target) : p.tolerance;
  Tracker f{eval, p.target, tol_abs};

  if (eval.monotonicity != Monotonicity::Unknown) {
    double lo = p.lo, hi = p.hi;
    const double flo = f(lo);
    const double fhi = f(hi);
    const double slo = flo - p.target, shi = fhi - p.target;
    if ((slo > 0 && shi > 0) || (slo < 0 && shi < 0))
      fail(ErrorCode::TargetNotBracketed, "target " + num(p.target) + " is not between eval(lo) = " + num(flo) +
                                              " and eval(hi) = " + num(fhi));
    if (f.hit(flo)) return f.done(lo, flo, 0);
    if (f.hit(fhi)) return f.done(hi, fhi, 0);
    const bool lo_below = slo < 0;
    for (int it = 1; it <= p.max_iterations; ++it) {
      const double mid = lo + (hi - lo) / 2.0;
      const double y = f(mid);
      if (f.hit(y)) return f.done(mid, y, it);
      if ((y - p.target < 0) == lo_below)
        lo = mid;
      else
        hi = mid;
    }
  } else {
    // Golden-section search for the minimum of |eval - target|.
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = p.lo, b = p.hi;
    double c = b - invphi * (b - a), d = a + invphi * (b - a);
    const double yc = f(c);
    if (f.hit(yc)) return f.done(c, yc, 0);
    const double yd = f(d);
    if (f.hit(yd)) return f.done(d, yd, 0);
    double ec = std::abs(yc - p.target), ed = std::abs(yd - p.target);
    for (int it = 1; it <= p.max_iterations; ++it) {
      double x;
      if (ec < ed) {
        b = d;
        d = c;
        ed = ec;
        c = b - invphi * (b - a);
        x = c;
      } else {
        a = c;
        c = d;
        ec = ed;
        d = a + invphi * (b - a);
        x = d;
      }
      const double y = f(x);
      if (f.hit(y)) return f.done(x, y, it);
      (x == c ? ec : ed) = std::abs(y - p.target);
    }
  }
  MappingResult best = f.best;
  best.iterations = p.max_iterations;
  throw NotConverged("no parameter within tolerance after " + std::to_string(p.max_iterations) +
                         " iterations (best " + num(best.value) + ")",
                     best);
}

Evaluator linear_stub(double a, double b, std::string metric, std::string units) {
  Evaluator e;
  e.metric = std::move(metric);
  e.units = std::move(units);
  e.monotonicity = a > 0 ? Monotonicity::Increasing : a < 0 ? Monotonicity::Decreasing : Monotonicity::Unknown;
  e.fn = [a, b](double x) { return a * x + b; };
  return e;
}

Evaluator pad_capacitance_stub(double c_per_area, double c0) {
  if (!(c_per_area > 0.0) || !(c0 >= 0.0)) fail(ErrorCode::InvalidArguments, "pad capacitance stub needs k > 0, c0 >= 0");
  Evaluator e;
  e.metric = "C_q";
  e.units = "F";
  e.monotonicity = Monotonicity::Increasing;
  e.fn = [c_per_area, c0](double area) { return c0 + c_per_area * area; };
  return e;
}

Evaluator pad_charging_stub(double c_per_area, double c0) {
  Evaluator cap = pad_capacitance_stub(c_per_area, c0);
  Evaluator e;
  e.metric = "E_C";
  e.units = "Hz";
  e.monotonicity = Monotonicity::Decreasing;
  e.fn = [cap](double area) { return charging_energy(cap(area)); };
  return e;
}

Evaluator command_evaluator(const std::string& command, Monotonicity m) {
  if (command.empty()) fail(ErrorCode::InvalidArguments, "empty evaluator command");
  Evaluator e;
  e.metric = "external";
  e.monotonicity = m;
  e.fn = [command](double x) {
    char arg[64];
    std::snprintf(arg, sizeof arg, "%.17g", x);
    const std::string line = command + " " + arg;
    FILE* pipe = ::popen(line.c_str(), "r");
    if (!pipe) fail(ErrorCode::EvaluatorFailed, "cannot start '" + command + "'");
    std::string out;
    std::array<char, 256> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = ::pclose(pipe);
    if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0)
      fail(ErrorCode::EvaluatorFailed, "'" + line + "' exited abnormally");
    const char* s = out.c_str();
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end == s) fail(ErrorCode::EvaluatorFailed, "'" + line + "' printed no number");
    while (*end == ' ' || *end == '\t' || *end == '\n' || *end == '\r') ++end;
    if (*end != '\0') fail(ErrorCode::EvaluatorFailed, "'" + line + "' printed more than one value");
    return v;
  };
  return e;
}

Evaluator make_evaluator(const std::string& spec, const std::map<std::string, double>& args) {
  auto arg = [&](const char* k, double d) {
    auto it = args.find(k);
    return it == args.end() ? d : it->second;
  };
  if (spec.rfind("cmd:", 0) == 0) return command_evaluator(spec.substr(4));
  if (spec == "stub:linear") return linear_stub(arg("a", 1.0), arg("b", 0.0));
  if (spec == "stub:pad-capacitance") return pad_capacitance_stub(arg("c_per_area", 1e-19), arg("c0", 5e-15));
  if (spec == "stub:pad-charging") return pad_charging_stub(arg("c_per_area", 1e-19), arg("c0", 5e-15));
  fail(ErrorCode::InvalidArguments, "unknown evaluator '" + spec + "'");
}

std::pair<std::string, double> tunable_dimension(const PlacedComponent& c) {
  const char* key = c.kind == ComponentKind::Xmon               ? "arm_length"
                    : c.kind == ComponentKind::TransmonFloating ? "pad_length"
                                                                : nullptr;
  if (!key) fail(ErrorCode::ComponentNotTunable, "component '" + c.id + "' (" + to_string(c.kind) + ") has no tunable dimension");
  auto it = c.params.find(key);
  if (it == c.params.end())
    fail(ErrorCode::ComponentNotTunable, "component '" + c.id + "' lacks parameter " + key);
  return {key, it->second};
}

CapacitanceMapping map_qubit_capacitance(ChipLayout& layout, const std::string& id, double target_C,
                                         const Evaluator& eval, double lo, double hi, double tolerance,
                                         int max_iterations) {
  PlacedComponent* c = layout.find(id);
  if (!c) fail(ErrorCode::MissingSubEntity, "no component '" + id + "'");
  if (!(target_C > 0.0)) fail(ErrorCode::NonPositiveCapacitance, "target capacitance must be positive");
  const auto [name, value] = tunable_dimension(*c);
  MappingProblem p;
  p.parameter = name;
  p.lo = lo > 0.0 ? lo : value / 4.0;
  p.hi = hi > 0.0 ? hi : value * 4.0;
  p.target = target_C;
  p.tolerance = tolerance;
  p.max_iterations = max_iterations;
  const MappingResult r = solve(p, eval);

  auto param = [&](const char* k, double d) {
    auto it = c->params.find(k);
    return it == c->params.end() ? d : it->second;
  };
  QubitStyle style;
  style.kind = c->kind;
  style.arm_length = param("arm_length", style.arm_length);
  style.arm_width = param("arm_width", style.arm_width);
  style.pad_length = param("pad_length", style.pad_length);
  style.pad_height = param("pad_height", style.pad_height);
  style.pad_gap = param("pad_gap", style.pad_gap);
  style.junction_width = param("junction_width", style.junction_width);
  (name == "arm_length" ? style.arm_length : style.pad_length) = r.value;
  PlacedComponent fresh = make_qubit(c->id, c->origin, style);
  fresh.lattice = c->lattice;
  fresh.attached_to = c->attached_to;
  for (const auto& [k, v] : c->params) fresh.params.try_emplace(k, v);
  fresh.params["C_q"] = r.achieved;
  *c = std::move(fresh);
  return {id, name, r};
}

}  // namespace sqc
