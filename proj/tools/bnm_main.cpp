// bnm: bottleneck non-crossing matchings of convex point sets.
//
// Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 invalid
// instance, 4 instance too large for the oracle.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bnm/baselines.hpp"
#include "bnm/bench.hpp"
#include "bnm/error.hpp"
#include "bnm/generators.hpp"
#include "bnm/io.hpp"
#include "bnm/render.hpp"
#include "bnm/solver.hpp"
#include "bnm/structure.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitTooLarge = 4;

int exit_code_for(bnm::ErrorCode code) {
  switch (code) {
    case bnm::ErrorCode::Parse: return kExitParse;
    case bnm::ErrorCode::TooLarge: return kExitTooLarge;
    case bnm::ErrorCode::Internal: return kExitVerify;
    default: return kExitInvalid;
  }
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw bnm::Error(bnm::ErrorCode::Parse, "cannot write " + output);
  out << text;
}

bnm::ConvexPointSet load_instance(const std::string& path, bool sort) {
  std::vector<bnm::Point> pts = bnm::read_points(path);
  if (sort) pts = bnm::sort_ccw(std::move(pts));
  return bnm::ConvexPointSet(std::move(pts));
}

struct InstanceArgs {
  std::string input;
  std::string output;
  bool sort_ccw = false;
};

void add_instance_args(CLI::App* cmd, InstanceArgs& args) {
  cmd->add_option("input", args.input, "instance file (JSON or CSV)")->required();
  cmd->add_option("-o,--output", args.output, "matching file to write (default stdout)");
  cmd->add_flag("--sort-ccw", args.sort_ccw, "sort points counterclockwise before validating");
}

int cmd_verify(const std::string& instance, const std::string& matching_path) {
  const bnm::ConvexPointSet pts = load_instance(instance, false);
  const bnm::MatchingFile file = bnm::read_matching(matching_path);
  const bnm::Matching m = file.matching();
  const bnm::VerifyReport report = bnm::verify_matching(pts, m);

  std::cout << "perfect: " << (report.perfect ? "yes" : "no") << "\n"
            << "nonCrossing: " << (report.non_crossing ? "yes" : "no") << "\n";
  std::cout.precision(17);
  std::cout << "value: " << report.value << " (reported " << file.value << ")\n";
  if (!report.perfect) {
    std::cerr << "verification failed: perfect\n";
    return kExitVerify;
  }
  if (!report.non_crossing) {
    std::cerr << "verification failed: nonCrossing\n";
    return kExitVerify;
  }
  if (!(std::abs(file.value - report.value) <= bnm::kRelTol * std::max(std::abs(report.value), 1e-300))) {
    std::cerr << "verification failed: value\n";
    return kExitVerify;
  }
  const bnm::CascadeDecomposition dec = bnm::cascade_decomposition(m);
  const auto classes = bnm::classify_pairs(m);
  std::cout << "edges: " << classes.edges.size() << "\n"
            << "diagonals: " << classes.diagonals.size() << "\n"
            << "regions: " << dec.regions.size() << "\n"
            << "cascades: " << dec.cascades.size() << "\n"
            << "threeBounded: " << dec.three_bounded_count << "\n";
  return kExitOk;
}

std::vector<int> parse_sizes(const std::string& list) {
  std::vector<int> sizes;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      sizes.push_back(std::stoi(item));
    } catch (const std::logic_error&) {
      throw bnm::Error(bnm::ErrorCode::Parse, "bad size '" + item + "'");
    }
  }
  return sizes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bottleneck non-crossing perfect matchings of points in convex position"};
  app.require_subcommand(1);

  InstanceArgs solve_args, oracle_args, baseline_args;
  auto* solve_cmd = app.add_subcommand("solve", "quadratic-time bottleneck matching");
  add_instance_args(solve_cmd, solve_args);
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive search (n <= 20)");
  add_instance_args(oracle_cmd, oracle_args);
  auto* baseline_cmd = app.add_subcommand("baseline", "cubic interval dynamic program");
  add_instance_args(baseline_cmd, baseline_args);

  std::string verify_instance, verify_matching_path;
  auto* verify_cmd = app.add_subcommand("verify", "check a matching file against an instance");
  verify_cmd->add_option("instance", verify_instance)->required();
  verify_cmd->add_option("matching", verify_matching_path)->required();

  int gen_n = 0;
  std::string gen_mode = "circle", gen_output, gen_format = "json";
  std::uint64_t gen_seed = 0;
  double gen_spread = 0.05;
  auto* gen_cmd = app.add_subcommand("gen", "generate a strictly convex instance");
  gen_cmd->add_option("--n", gen_n, "number of points (even, >= 4)")->required();
  gen_cmd->add_option("--mode", gen_mode, "circle | valtr | cluster3")->check(CLI::IsMember({"circle", "valtr", "cluster3"}));
  gen_cmd->add_option("--seed", gen_seed);
  gen_cmd->add_option("--spread", gen_spread, "cluster3 perturbation scale");
  gen_cmd->add_option("--format", gen_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  gen_cmd->add_option("-o,--output", gen_output);

  std::string render_instance, render_matching, render_out;
  auto* render_cmd = app.add_subcommand("render", "draw an instance and matching as SVG");
  render_cmd->add_option("instance", render_instance)->required();
  render_cmd->add_option("matching", render_matching)->required();
  render_cmd->add_option("--out", render_out, "SVG path (default stdout)");

  std::string bench_sizes = "512,1024,2048", bench_mode = "circle", bench_algo = "solve";
  std::uint64_t bench_seed = 1;
  int bench_reps = 5;
  auto* bench_cmd = app.add_subcommand("bench", "time solve or the cubic baseline; CSV to stdout");
  bench_cmd->add_option("--sizes", bench_sizes, "comma-separated even sizes");
  bench_cmd->add_option("--mode", bench_mode)->check(CLI::IsMember({"circle", "valtr", "cluster3"}));
  bench_cmd->add_option("--seed", bench_seed);
  bench_cmd->add_option("--reps", bench_reps)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--algo", bench_algo)->check(CLI::IsMember({"solve", "cubic"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*solve_cmd) {
      const auto pts = load_instance(solve_args.input, solve_args.sort_ccw);
      emit(bnm::to_json(bnm::to_matching_file(bnm::solve(pts))), solve_args.output);
    } else if (*oracle_cmd) {
      const auto pts = load_instance(oracle_args.input, oracle_args.sort_ccw);
      const bnm::OracleResult r = bnm::oracle_solve(pts);
      emit(bnm::to_json(bnm::to_matching_file(r.all_optimal.front(), r.value)), oracle_args.output);
    } else if (*baseline_cmd) {
      const auto pts = load_instance(baseline_args.input, baseline_args.sort_ccw);
      const bnm::BaselineResult r = bnm::cubic_solve(pts);
      emit(bnm::to_json(bnm::to_matching_file(r.matching, r.value)), baseline_args.output);
    } else if (*verify_cmd) {
      return cmd_verify(verify_instance, verify_matching_path);
    } else if (*gen_cmd) {
      const bnm::GenSpec spec{gen_n, *bnm::parse_gen_mode(gen_mode), gen_seed, gen_spread};
      const bnm::ConvexPointSet pts = bnm::generate(spec);
      if (gen_format == "csv") {
        std::ostringstream out;
        out.precision(17);
        for (const bnm::Point& p : pts.points()) out << p.x << "," << p.y << "\n";
        emit(out.str(), gen_output);
      } else {
        emit(bnm::points_to_json(pts.points()), gen_output);
      }
    } else if (*render_cmd) {
      const auto pts = load_instance(render_instance, false);
      const bnm::MatchingFile file = bnm::read_matching(render_matching);
      emit(bnm::render_svg(pts, file.matching()), render_out);
    } else if (*bench_cmd) {
      bnm::BenchConfig config;
      config.sizes = parse_sizes(bench_sizes);
      config.mode = *bnm::parse_gen_mode(bench_mode);
      config.seed = bench_seed;
      config.reps = bench_reps;
      config.algo = bench_algo == "cubic" ? bnm::BenchAlgo::Cubic : bnm::BenchAlgo::Solve;
      bnm::write_bench_csv(std::cout, bnm::run_benchmark(config));
    }
  } catch (const bnm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitOk;
}
