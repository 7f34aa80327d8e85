#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gmmn/dispatch.hpp"
#include "gmmn/generate.hpp"

namespace gmmn {

inline constexpr const char* kBenchSchema = "gmmn-bench/1";

struct BenchMeasurement {
  std::string solver;
  std::string cls;
  int n = 0;
  std::uint64_t seed = 0;
  double wall_ms = 0.0;
  Length total_length = 0;
  friend bool operator==(const BenchMeasurement&, const BenchMeasurement&) = default;
};

struct BenchCell {
  std::string solver;
  std::string cls;
  int n = 0;
  double median_ms = 0.0;
  friend bool operator==(const BenchCell&, const BenchCell&) = default;
};

struct BenchSlope {
  std::string solver;
  std::string cls;
  double slope = 0.0;
  int n_min = 0;
  int n_max = 0;
  friend bool operator==(const BenchSlope&, const BenchSlope&) = default;
};

struct BenchReport {
  std::string schema = kBenchSchema;
  std::vector<BenchMeasurement> measurements;
  std::vector<BenchCell> cells;
  std::vector<BenchSlope> slopes;
  friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

struct BenchConfig {
  std::vector<GenClass> classes;
  std::vector<int> sizes;
  std::vector<std::uint64_t> seeds;
  std::vector<Algorithm> solvers;
  // 0 picks the smallest range the generator accepts (at least 8).
  Coord coord_range = 0;
  // Each solve is timed this many times; the fastest run counts.
  int repeats = 1;
};

// Least-squares slope of log(time) against log(n).
double loglog_slope(const std::vector<std::pair<double, double>>& n_and_time);

// Every solver sees the same generated instances. Solutions are validated outside the timing.
BenchReport run_bench(const BenchConfig& config,
                      const std::function<void(const BenchMeasurement&)>& progress = {});
// Recomputes cells and slopes from the measurements.
void summarize(BenchReport& report);

std::string report_to_json(const BenchReport& report);
BenchReport report_from_json(const std::string& text);
std::string report_table(const BenchReport& report);

}  // namespace gmmn
