#include "bnm/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include <fmt/format.h>

#include "bnm/baselines.hpp"
#include "bnm/error.hpp"
#include "bnm/solver.hpp"

namespace bnm {

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  const std::size_t k = std::min(x.size(), y.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double kk = static_cast<double>(k);
  return (kk * sxy - sx * sy) / (kk * sxx - sx * sx);
}

BenchResult run_benchmark(const BenchConfig& config) {
  using clock = std::chrono::steady_clock;
  BenchResult result;
  for (int n : config.sizes) {
    if (n % 2 != 0) throw Error(ErrorCode::OddCount, "benchmark size " + std::to_string(n));
    std::vector<double> times;
    for (int rep = 0; rep < config.reps; ++rep) {
      const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(rep);
      const ConvexPointSet pts = generate({n, config.mode, seed});
      const auto start = clock::now();
      const double value = config.algo == BenchAlgo::Solve ? solve(pts).value : cubic_solve(pts).value;
      const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start).count();
      result.rows.push_back({n, rep, seed, static_cast<std::int64_t>(ns), value});
      times.push_back(static_cast<double>(ns));
    }
    std::sort(times.begin(), times.end());
    const std::size_t mid = times.size() / 2;
    result.median_ns.push_back(times.size() % 2 ? times[mid] : (times[mid - 1] + times[mid]) / 2);
  }
  if (config.sizes.size() >= 2 && config.reps > 0) {
    std::vector<double> ns(config.sizes.begin(), config.sizes.end());
    result.slope = loglog_slope(ns, result.median_ns);
  }
  return result;
}

void write_bench_csv(std::ostream& out, const BenchResult& result) {
  out << "n,rep,seed,elapsed_ns,value\n";
  for (const BenchRow& r : result.rows) {
    out << fmt::format("{},{},{},{},{:.17g}\n", r.n, r.rep, r.seed, r.elapsed_ns, r.value);
  }
  if (result.slope) out << fmt::format("# slope={:.4f}\n", *result.slope);
}

}  // namespace bnm
