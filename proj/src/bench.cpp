#include "sqc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "sqc/error.hpp"

namespace sqc {

std::optional<ScalingFit> fit_loglog(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 3) return std::nullopt;
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0) || !(ys[i] > 0)) return std::nullopt;
    lx.push_back(std::log(xs[i]));
    ly.push_back(std::log(ys[i]));
  }
  const double n = static_cast<double>(lx.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) mx += lx[i], my += ly[i];
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0) return std::nullopt;
  ScalingFit f;
  f.exponent = sxy / sxx;
  f.r2 = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  f.points = lx.size();
  return f;
}

BenchReport bench_scaling(const std::vector<std::pair<int, int>>& sizes, const std::vector<RouteStrategy>& strategies,
                          int repetitions, const PipelineConfig& base) {
  if (sizes.empty() || strategies.empty()) fail(ErrorCode::InvalidArguments, "bench needs sizes and strategies");
  if (repetitions < 3) fail(ErrorCode::InvalidArguments, "bench needs at least 3 repetitions");
  BenchReport out;
  for (RouteStrategy s : strategies) {
    for (auto [m, n] : sizes) {
      PipelineConfig cfg = base;
      cfg.rows = m;
      cfg.cols = n;
      cfg.strategy = s;
      const Topology t = generate_grid(m, n);
      ChipLayout chip = build_chip(t, cfg);
      const PinAssignment pins = prepare_die(chip, cfg);

      BenchRecord rec;
      rec.strategy = s;
      rec.m = m;
      rec.n = n;
      rec.qubits = m * n;
      std::vector<double> times;
      for (int k = 0; k < repetitions; ++k) {
        ChipLayout work = chip;
        const auto t0 = std::chrono::steady_clock::now();
        const RoutingResult res = route_chip(work, pins, cfg);
        times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        rec.nets = res.routed_count();
        rec.crossings = static_cast<std::size_t>(res.total_crossings);
        rec.failures = res.failures.size();
      }
      std::sort(times.begin(), times.end());
      const std::size_t h = times.size() / 2;
      rec.median_s = times.size() % 2 ? times[h] : 0.5 * (times[h - 1] + times[h]);
      rec.min_s = times.front();
      rec.max_s = times.back();
      out.records.push_back(rec);
    }
  }
  out.fits = fit_records(out.records);
  return out;
}

std::vector<ScalingFit> fit_records(const std::vector<BenchRecord>& records) {
  std::vector<ScalingFit> fits;
  for (RouteStrategy s : {RouteStrategy::Pattern, RouteStrategy::Maze}) {
    std::vector<double> xs, ys;
    for (const auto& r : records)
      if (r.strategy == s) {
        xs.push_back(r.qubits);
        ys.push_back(r.median_s);
      }
    // Repeated sizes carry no slope information.
    if (std::set<double>(xs.begin(), xs.end()).size() < 3) continue;
    if (auto f = fit_loglog(xs, ys)) {
      f->strategy = s;
      fits.push_back(*f);
    }
  }
  return fits;
}

std::string bench_csv(const BenchReport& r, bool header) {
  std::string s = header ? "strategy,m,n,qubits,median_s,min_s,max_s,nets,crossings\n" : "";
  char buf[256];
  for (const auto& b : r.records) {
    std::snprintf(buf, sizeof buf, "%s,%d,%d,%d,%.6e,%.6e,%.6e,%zu,%zu\n", to_string(b.strategy).c_str(), b.m, b.n,
                  b.qubits, b.median_s, b.min_s, b.max_s, b.nets, b.crossings);
    s += buf;
  }
  return s;
}

std::vector<BenchRecord> parse_bench_csv(const std::string& text) {
  std::vector<BenchRecord> out;
  std::istringstream in(text);
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t at = offset;
    offset += line.size() + 1;
    if (line.empty() || line.rfind("strategy,", 0) == 0) continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (f.size() != 9) throw ParseFailure(ErrorCode::ParseError, at, "", "expected 9 CSV fields");
    try {
      BenchRecord b;
      b.strategy = route_strategy_from_string(f[0]);
      b.m = std::stoi(f[1]);
      b.n = std::stoi(f[2]);
      b.qubits = std::stoi(f[3]);
      b.median_s = std::stod(f[4]);
      b.min_s = std::stod(f[5]);
      b.max_s = std::stod(f[6]);
      b.nets = std::stoul(f[7]);
      b.crossings = std::stoul(f[8]);
      out.push_back(b);
    } catch (const std::exception& e) {
      throw ParseFailure(ErrorCode::ParseError, at, "", std::string("bad bench row: ") + e.what());
    }
  }
  return out;
}

std::string format_fits(const BenchReport& r) {
  std::string s;
  char buf[160];
  for (const auto& f : r.fits) {
    std::snprintf(buf, sizeof buf, "%s exponent %.3f r2 %.4f over %zu sizes\n", to_string(f.strategy).c_str(),
                  f.exponent, f.r2, f.points);
    s += buf;
  }
  return s;
}

}  // namespace sqc
