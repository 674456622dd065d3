// Acceptance run: prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails. BNM_CLI_PATH is set by the build.
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <set>
#include <utility>
#include <string>
#include <vector>

#include "bnm/baselines.hpp"
#include "bnm/bench.hpp"
#include "bnm/dp_core.hpp"
#include "bnm/generators.hpp"
#include "bnm/io.hpp"
#include "bnm/solver.hpp"
#include "bnm/structure.hpp"
#include "fixtures.hpp"

using namespace bnm;
namespace fs = std::filesystem;

namespace {

constexpr GenMode kModes[] = {GenMode::Circle, GenMode::Valtr, GenMode::Cluster3};

bool rel_equal(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(std::abs(a), std::abs(b)); }

struct Criterion {
  int id;
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& why) {
    if (pass) first_failure = why;
    pass = false;
  }
};

void report(const Criterion& c) {
  std::printf("criterion %2d: %s  %s", c.id, c.pass ? "PASS" : "FAIL", c.detail.c_str());
  if (!c.pass) std::printf("  [first failure: %s]", c.first_failure.c_str());
  std::printf("\n");
  std::fflush(stdout);
}

std::string where(GenMode mode, int n, int seed) {
  return std::string(to_string(mode)) + " n=" + std::to_string(n) + " seed=" + std::to_string(seed);
}

// Shared bookkeeping for criteria 3-5 across the two equivalence sweeps.
struct Sweep {
  Criterion validity{3};
  Criterion candidates{4};
  Criterion polarity{5};
  long matchings_checked = 0;
  long candidate_total = 0;
  long polarity_checked = 0;
  long polarity_violations = 0;

  void check_matching(const ConvexPointSet& pts, const Matching& m, double reported, bool exact,
                      const std::string& tag) {
    ++matchings_checked;
    const VerifyReport v = verify_matching(pts, m);
    if (!v.ok()) validity.fail(tag + " invalid matching");
    if (exact && v.value != reported) validity.fail(tag + " value differs from recomputation");
  }

  void check_candidates(const ConvexPointSet& pts, const SolveReport& r, bool with_polarity, const std::string& tag) {
    const int n = pts.size();
    if (r.candidate_count > 2 * n) candidates.fail(tag + " candidate count above 2n");
    const SubproblemTable table(pts);
    const auto cands = enumerate_candidates(pts, table, true);
    if (static_cast<int>(cands.size()) != r.candidate_count) candidates.fail(tag + " candidate count mismatch");
    candidate_total += static_cast<long>(cands.size());
    std::vector<int> neg(n, 0), pos(n, 0);
    for (const CandidateDiagonal& c : cands) {
      if (c.polarity == Polarity::Negative && neg[c.pole()]++ > 0) candidates.fail(tag + " repeated negative pole");
      if (c.polarity == Polarity::Positive && pos[c.pole()]++ > 0) candidates.fail(tag + " repeated positive pole");
      if (!with_polarity) continue;
      ++polarity_checked;
      if (c.polarity == Polarity::Unknown) {
        ++polarity_violations;
        polarity.fail(tag + " candidate (" + std::to_string(c.i) + "," + std::to_string(c.j) + ") PiZero or mixed");
      }
    }
  }
};

void oracle_equivalence(Criterion& c1, Sweep& sweep) {
  long instances = 0;
  for (GenMode mode : kModes) {
    for (int n = 4; n <= 16; n += 2) {
      for (int s = 0; s < 500; ++s) {
        const ConvexPointSet pts = generate({n, mode, test::test_seed(s)});
        const std::string tag = where(mode, n, s);
        const SolveReport r = solve(pts);
        const OracleResult o = oracle_solve(pts);
        ++instances;
        if (!rel_equal(r.value, o.value)) c1.fail(tag);
        sweep.check_matching(pts, r.matching, r.value, true, tag + " solve");
        for (std::size_t k = 0; k < o.all_optimal.size(); ++k) {
          sweep.check_matching(pts, o.all_optimal[k], o.value, k == 0, tag + " oracle");
        }
        sweep.check_candidates(pts, r, true, tag);
      }
    }
  }
  c1.detail = std::to_string(instances) + " instances, solve = oracle within 1e-9";
}

void baseline_equivalence(Criterion& c2, Sweep& sweep) {
  long instances = 0;
  for (GenMode mode : kModes) {
    for (int n : {20, 40, 80, 160}) {
      for (int s = 0; s < 50; ++s) {
        const ConvexPointSet pts = generate({n, mode, test::test_seed(s)});
        const std::string tag = where(mode, n, s);
        const SolveReport r = solve(pts);
        const BaselineResult b = cubic_solve(pts);
        ++instances;
        if (!rel_equal(r.value, b.value)) c2.fail(tag);
        sweep.check_matching(pts, r.matching, r.value, true, tag + " solve");
        sweep.check_matching(pts, b.matching, b.value, true, tag + " cubic");
        sweep.check_candidates(pts, r, false, tag);
      }
    }
  }
  c2.detail = std::to_string(instances) + " instances, solve = cubic within 1e-9";
}

bool all_diagonals_obtuse(const ConvexPointSet& pts, const Matching& m) {
  for (const IndexPair& d : classify_pairs(m).diagonals) {
    if (turning_angle(pts, d.a, d.b) <= std::numbers::pi / 2) return false;
    if (turning_angle(pts, d.b, d.a) <= std::numbers::pi / 2) return false;
  }
  return true;
}

void structural_existence(Criterion& c6) {
  long instances = 0;
  for (GenMode mode : kModes) {
    for (int n : {6, 8, 10, 12}) {
      for (int s = 0; s < 100; ++s) {
        const ConvexPointSet pts = generate({n, mode, test::test_seed(s)});
        const OracleResult o = oracle_solve(pts);
        ++instances;
        bool few_cascades = false;
        bool obtuse = false;
        for (const Matching& m : o.all_optimal) {
          const CascadeDecomposition dec = cascade_decomposition(m);
          few_cascades |= dec.cascades.size() <= 3 && dec.three_bounded_count <= 1;
          obtuse |= all_diagonals_obtuse(pts, m);
        }
        if (!few_cascades) c6.fail(where(mode, n, s) + " no optimum with <= 3 cascades");
        if (!obtuse) c6.fail(where(mode, n, s) + " no optimum with all turning angles > pi/2");
      }
    }
  }
  long enumerated = 0;
  for (int n = 2; n <= 16; n += 2) {
    oracle_enumerate(n, [&](const Matching& m) {
      ++enumerated;
      if (cascade_decomposition(m).cascades.size() == 2) c6.fail("n=" + std::to_string(n) + " two cascades");
    });
  }
  c6.detail = std::to_string(instances) + " instances; " + std::to_string(enumerated) +
              " enumerated matchings, none with exactly 2 cascades";
}

void catalan(Criterion& c7) {
  const long expected[] = {1, 2, 5, 14, 42, 132, 429, 1430};
  std::string counts;
  for (int k = 0; k < 8; ++k) {
    long count = 0;
    oracle_enumerate(2 * (k + 1), [&](const Matching&) { ++count; });
    counts += (k ? "," : "") + std::to_string(count);
    if (count != expected[k]) c7.fail("n=" + std::to_string(2 * (k + 1)));
  }
  c7.detail = "counts " + counts;
}

void complexity(Criterion& c8) {
  BenchConfig fast;
  fast.sizes = {512, 1024, 2048, 4096};
  fast.reps = 5;
  const BenchResult quad = run_benchmark(fast);

  BenchConfig slow;
  slow.sizes = {128, 256, 512};
  slow.reps = 3;
  slow.algo = BenchAlgo::Cubic;
  const BenchResult cubic = run_benchmark(slow);

  const double quad_slope = *quad.slope;
  const double cubic_slope = *cubic.slope;
  const double at4096 = quad.median_ns.back() * 1e-9;
  if (quad_slope > 2.5) c8.fail("solve slope above 2.5");
  if (cubic_slope < 2.6) c8.fail("cubic slope below 2.6");
  if (at4096 >= 10.0) c8.fail("solve at n=4096 took 10 s or more");
  char buf[160];
  std::snprintf(buf, sizeof buf, "solve slope %.3f (<= 2.5), cubic slope %.3f (>= 2.6), solve n=4096 median %.3f s",
                quad_slope, cubic_slope, at4096);
  c8.detail = buf;
}

void three_cascade_coverage(Criterion& c9) {
  int confirmed = 0;
  int three = 0;
  int tried = 0;
  for (int n : {12, 14, 16}) {
    for (int s = 0; s < 100; ++s) {
      const ConvexPointSet pts = gen_cluster3(n, test::test_seed(s));
      ++tried;
      if (solve(pts).structure != Structure::ThreeCascade) continue;
      ++three;
      const OracleResult o = oracle_solve(pts);
      bool all_three = true;
      for (const Matching& m : o.all_optimal) all_three &= cascade_decomposition(m).cascades.size() == 3;
      if (all_three) ++confirmed;
    }
  }
  if (confirmed == 0) c9.fail("no confirmed three-cascade instance");
  c9.detail = std::to_string(three) + " of " + std::to_string(tried) + " cluster3 instances solve as three-cascade; " +
              std::to_string(confirmed) + " have only 3-cascade optima";
}

struct TempDir {
  fs::path dir = fs::temp_directory_path() / ("bnm_accept_" + std::to_string(::getpid()));
  TempDir() { fs::create_directories(dir); }
  ~TempDir() { fs::remove_all(dir); }
};

int run_cli(const std::string& args) {
  const std::string cmd = std::string(BNM_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++count;
  return count;
}

bool well_formed_svg(const std::string& svg) {
  if (svg.rfind("<svg", 0) != 0 || svg.find("</svg>") == std::string::npos) return false;
  return count_of(svg, "<") == count_of(svg, ">") && count_of(svg, "<text") == count_of(svg, "</text>");
}

void cli_round_trip(Criterion& c10) {
  TempDir tmp;
  const fs::path inst = tmp.dir / "inst.json";
  const fs::path match = tmp.dir / "match.json";
  const fs::path svg = tmp.dir / "out.svg";
  int runs = 0;
  for (const char* mode : {"circle", "valtr", "cluster3"}) {
    for (int n : {4, 8, 16, 64}) {
      for (int seed = 0; seed < 10; ++seed) {
        const std::string tag = std::string(mode) + " n=" + std::to_string(n) + " seed=" + std::to_string(seed);
        ++runs;
        if (run_cli("gen --n " + std::to_string(n) + " --mode " + mode + " --seed " + std::to_string(seed) + " -o " +
                    inst.string()) != 0) {
          c10.fail(tag + " gen");
          continue;
        }
        if (run_cli("solve " + inst.string() + " -o " + match.string()) != 0) {
          c10.fail(tag + " solve");
          continue;
        }
        if (run_cli("verify " + inst.string() + " " + match.string()) != 0) {
          c10.fail(tag + " verify");
          continue;
        }
        if (run_cli("render " + inst.string() + " " + match.string() + " --out " + svg.string()) != 0) {
          c10.fail(tag + " render");
          continue;
        }
        const std::string text = read_text(svg);
        if (!well_formed_svg(text)) c10.fail(tag + " malformed svg");
        if (count_of(text, "<circle") != static_cast<std::size_t>(n)) c10.fail(tag + " circle count");
        if (count_of(text, "<line") != static_cast<std::size_t>(n / 2)) c10.fail(tag + " line count");
      }
    }
  }
  c10.detail = std::to_string(runs) + " gen/solve/verify/render runs";
}

}  // namespace

// With no arguments every criterion runs; otherwise only the listed ids.
int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int a = 1; a < argc; ++a) wanted.insert(std::atoi(argv[a]));
  auto want = [&](int id) { return wanted.empty() || wanted.count(id) > 0; };

  const auto start = std::chrono::steady_clock::now();
  std::vector<Criterion> results;
  auto finish = [&](const Criterion& c) {
    if (!want(c.id)) return;
    report(c);
    results.push_back(c);
  };

  Sweep sweep;
  Criterion c1{1};
  Criterion c2{2};
  if (want(1) || want(3) || want(4) || want(5)) {
    oracle_equivalence(c1, sweep);
    finish(c1);
  }
  if (want(2) || want(3) || want(4)) {
    baseline_equivalence(c2, sweep);
    finish(c2);
  }
  sweep.validity.detail = std::to_string(sweep.matchings_checked) + " matchings verified";
  finish(sweep.validity);
  sweep.candidates.detail = std::to_string(sweep.candidate_total) + " candidates, all counts <= 2n, determinate-polarity poles distinct";
  finish(sweep.candidates);
  sweep.polarity.detail = std::to_string(sweep.polarity_checked) + " candidates classified, " +
                          std::to_string(sweep.polarity_violations) + " with PiZero or mixed interior points";
  finish(sweep.polarity);

  const std::pair<int, void (*)(Criterion&)> rest[] = {
      {6, structural_existence}, {7, catalan}, {8, complexity}, {9, three_cascade_coverage}, {10, cli_round_trip}};
  for (const auto& [id, run] : rest) {
    if (!want(id)) continue;
    Criterion c{id};
    run(c);
    finish(c);
  }

  int failed = 0;
  for (const Criterion& c : results) failed += c.pass ? 0 : 1;
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria passed in %.1f s\n", static_cast<int>(results.size()) - failed, results.size(), secs);
  return failed == 0 ? 0 : 1;
}
