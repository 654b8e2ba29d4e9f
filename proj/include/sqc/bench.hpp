#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqc/pipeline.hpp"

namespace sqc {

struct BenchRecord {
  RouteStrategy strategy = RouteStrategy::Pattern;
  int m = 0;
  int n = 0;
  int qubits = 0;
  double median_s = 0.0;
  double min_s = 0.0;
  double max_s = 0.0;
  std::size_t nets = 0;        // nets routed
  std::size_t crossings = 0;  // node crossings from the router
  std::size_t failures = 0;   // unrouted nets
};

struct ScalingFit {
  RouteStrategy strategy = RouteStrategy::Pattern;
  double exponent = 0.0;  // slope of log(time) against log(qubits)
  double r2 = 0.0;
  std::size_t points = 0;
};

struct BenchReport {
  std::vector<BenchRecord> records;
  std::vector<ScalingFit> fits;
};

/// Least squares on (log x, log y). Needs >= 3 points with positive values.
std::optional<ScalingFit> fit_loglog(const std::vector<double>& xs, const std::vector<double>& ys);

/// Times routing only (grid build included); layout generation is setup.
/// Each size and strategy gets `repetitions` fresh runs (>= 3).
BenchReport bench_scaling(const std::vector<std::pair<int, int>>& sizes, const std::vector<RouteStrategy>& strategies,
                          int repetitions = 3, const PipelineConfig& base = {});

/// Fits for every strategy with >= 3 distinct qubit counts.
std::vector<ScalingFit> fit_records(const std::vector<BenchRecord>& records);

std::string bench_csv(const BenchReport& r, bool header = true);
/// Inverse of bench_csv; a header line is skipped. Throws ParseFailure.
std::vector<BenchRecord> parse_bench_csv(const std::string& text);
std::string format_fits(const BenchReport& r);

}  // namespace sqc
