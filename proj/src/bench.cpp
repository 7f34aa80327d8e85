#include "gmmn/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "gmmn/errors.hpp"

namespace gmmn {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BenchMeasurement, solver, cls, n, seed, wall_ms, total_length)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BenchCell, solver, cls, n, median_ms)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BenchSlope, solver, cls, slope, n_min, n_max)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BenchReport, schema, measurements, cells, slopes)

double loglog_slope(const std::vector<std::pair<double, double>>& pts) {
  if (pts.size() < 2) return 0.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [n, t] : pts) {
    const double x = std::log(n), y = std::log(std::max(t, 1e-6));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(pts.size());
  const double den = m * sxx - sx * sx;
  return den == 0 ? 0.0 : (m * sxy - sx * sy) / den;
}

void summarize(BenchReport& report) {
  std::map<std::tuple<std::string, std::string, int>, std::vector<double>> groups;
  for (const auto& m : report.measurements) groups[{m.solver, m.cls, m.n}].push_back(m.wall_ms);
  report.cells.clear();
  std::map<std::pair<std::string, std::string>, std::vector<std::pair<double, double>>> series;
  for (auto& [key, times] : groups) {
    std::sort(times.begin(), times.end());
    const std::size_t h = times.size() / 2;
    const double median = times.size() % 2 ? times[h] : 0.5 * (times[h - 1] + times[h]);
    const auto& [solver, cls, n] = key;
    report.cells.push_back({solver, cls, n, median});
    series[{solver, cls}].emplace_back(n, median);
  }
  report.slopes.clear();
  for (const auto& [key, pts] : series) {
    if (pts.size() < 2) continue;
    report.slopes.push_back({key.first, key.second, loglog_slope(pts), static_cast<int>(pts.front().first),
                             static_cast<int>(pts.back().first)});
  }
}

BenchReport run_bench(const BenchConfig& config, const std::function<void(const BenchMeasurement&)>& progress) {
  BenchReport report;
  for (GenClass cls : config.classes)
    for (int n : config.sizes) {
      const Coord range = config.coord_range ? config.coord_range : std::max<Coord>(8, minimum_coord_range(cls, n));
      for (std::uint64_t seed : config.seeds) {
        const Instance inst = generate_instance(cls, n, range, seed);
        for (Algorithm algo : config.solvers) {
          BenchMeasurement m{to_string(algo), to_string(cls), n, seed, 0.0, 0};
          Solution best;
          for (int r = 0; r < std::max(1, config.repeats); ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            Solution sol = solve(inst, algo);
            const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            if (r == 0 || ms < m.wall_ms) m.wall_ms = ms;
            best = std::move(sol);
          }
          m.total_length = best.network.total_length();
          report.measurements.push_back(m);
          if (progress) progress(m);
        }
      }
    }
  summarize(report);
  return report;
}

std::string report_to_json(const BenchReport& report) { return nlohmann::json(report).dump(2) + "\n"; }

BenchReport report_from_json(const std::string& text) {
  try {
    BenchReport r = nlohmann::json::parse(text).get<BenchReport>();
    if (r.schema != kBenchSchema) throw ParseError("unsupported bench schema '" + r.schema + "'");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad bench report: ") + e.what());
  }
}

std::string report_table(const BenchReport& report) {
  std::string out = "solver       class        n      median_ms\n";
  char buf[128];
  for (const auto& c : report.cells) {
    std::snprintf(buf, sizeof buf, "%-12s %-10s %5d %12.3f\n", c.solver.c_str(), c.cls.c_str(), c.n, c.median_ms);
    out += buf;
  }
  out += "\nsolver       class      slope  (n range)\n";
  for (const auto& s : report.slopes) {
    std::snprintf(buf, sizeof buf, "%-12s %-10s %6.2f  (%d..%d)\n", s.solver.c_str(), s.cls.c_str(), s.slope, s.n_min,
                  s.n_max);
    out += buf;
  }
  return out;
}

}  // namespace gmmn
