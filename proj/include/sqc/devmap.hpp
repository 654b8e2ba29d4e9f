#pragma once

#include <functional>
#include <map>
#include <string>

#include "sqc/error.hpp"
#include "sqc/layout.hpp"

namespace sqc {

enum class Monotonicity { Increasing, Decreasing, Unknown };
std::string to_string(Monotonicity m);

/// Geometry parameter -> electrical metric. Must be deterministic.
struct Evaluator {
  std::string metric;
  std::string units;
  Monotonicity monotonicity = Monotonicity::Unknown;
  std::function<double(double)> fn;

  double operator()(double x) const { return fn(x); }
};

struct MappingProblem {
  std::string parameter;
  double lo = 0.0;
  double hi = 1.0;
  double target = 0.0;
  double tolerance = 1e-3;  // relative to |target|
  int max_iterations = 60;
};

struct MappingResult {
  double value = 0.0;
  double achieved = 0.0;
  int iterations = 0;
  int evaluations = 0;
};

/// MaxIterations carrying the best iterate seen.
class NotConverged : public Error {
 public:
  NotConverged(const std::string& message, MappingResult best)
      : Error(ErrorCode::MaxIterations, message), best_(best) {}
  const MappingResult& best() const { return best_; }

 private:
  MappingResult best_;
};

/// Bisection for monotone evaluators, golden-section on |eval - target|
/// otherwise. At most max_iterations + 2 evaluator calls.
MappingResult solve(const MappingProblem& problem, const Evaluator& eval);

/// Iterations bisection needs to shrink (hi - lo) below tol * scale.
int bisection_bound(double lo, double hi, double tol, double scale);

/// y = a*x + b.
Evaluator linear_stub(double a, double b = 0.0, std::string metric = "y", std::string units = "");
/// Pad area (um^2) -> capacitance (F): c0 + c_per_area * area.
Evaluator pad_capacitance_stub(double c_per_area = 1e-19, double c0 = 5e-15);
/// Pad area (um^2) -> charging energy (Hz) through pad_capacitance_stub.
Evaluator pad_charging_stub(double c_per_area = 1e-19, double c0 = 5e-15);
/// Runs `command <value>` through the shell and reads one decimal from stdout.
Evaluator command_evaluator(const std::string& command, Monotonicity m = Monotonicity::Unknown);

/// "stub:linear", "stub:pad-capacitance", "stub:pad-charging" or "cmd:<command>".
/// Stub coefficients come from `args` (a, b, c_per_area, c0).
Evaluator make_evaluator(const std::string& spec, const std::map<std::string, double>& args = {});

/// Name and current value of the dimension that tunes a component's
/// capacitance. Throws ComponentNotTunable.
std::pair<std::string, double> tunable_dimension(const PlacedComponent& c);

struct CapacitanceMapping {
  std::string component;
  std::string parameter;
  MappingResult result;
};

/// Solve for the tunable dimension of `component_id` so eval gives target_C.
/// Bounds default to [value/4, value*4]. The component is regenerated with the
/// new dimension and records C_q in its params.
CapacitanceMapping map_qubit_capacitance(ChipLayout& layout, const std::string& component_id, double target_C,
                                         const Evaluator& eval, double lo = 0.0, double hi = 0.0,
                                         double tolerance = 1e-3, int max_iterations = 60);

}  // namespace sqc
