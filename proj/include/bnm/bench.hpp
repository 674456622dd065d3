#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "bnm/generators.hpp"

namespace bnm {

enum class BenchAlgo { Solve, Cubic };

struct BenchConfig {
  std::vector<int> sizes;
  GenMode mode = GenMode::Circle;
  std::uint64_t seed = 1;
  int reps = 5;
  BenchAlgo algo = BenchAlgo::Solve;
};

struct BenchRow {
  int n = 0;
  int rep = 0;
  std::uint64_t seed = 0;
  std::int64_t elapsed_ns = 0;
  double value = 0.0;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  std::vector<double> median_ns;  // per entry of config.sizes
  std::optional<double> slope;    // needs at least two sizes
};

// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

/// Times one solve per (size, rep) on a fresh instance with seed
/// config.seed + rep; generation is outside the timed region. The slope is
/// fitted to per-size median times.
BenchResult run_benchmark(const BenchConfig& config);

// Rows "n,rep,seed,elapsed_ns,value", then "# slope=<s>" when available.
void write_bench_csv(std::ostream& out, const BenchResult& result);

}  // namespace bnm
