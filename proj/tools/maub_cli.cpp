// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// maub: single runs, benchmark suites and property verification.
//
// Exit codes: 0 success, 1 runtime or property failure, 2 usage error.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "maub/maub.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t seed_base_default() {
  if (const char* env = std::getenv("MAUB_SEED_BASE")) {
    try {
      return maub::detail::parse_uint(env);
    } catch (const maub::InvalidInput&) {
      throw UsageError("MAUB_SEED_BASE is not a non-negative integer");
    }
  }
  return 0;
}

maub::MatroidSpec resolve_spec(const std::string& shorthand, const std::string& file) {
  if (!shorthand.empty() && !file.empty()) {
    throw UsageError("--matroid and --matroid-file are mutually exclusive");
  }
  if (!file.empty()) return maub::load_spec_file(file);
  if (shorthand.empty()) throw UsageError("one of --matroid or --matroid-file is required");
  try {
    return maub::parse_shorthand(shorthand);
  } catch (const maub::InvalidInput& e) {
    throw UsageError(e.what());
  }
}

maub::Algorithm parse_algorithm(const std::string& s) {
  if (s == "maub") return maub::Algorithm::maub;
  if (s == "omm") return maub::Algorithm::omm;
  throw UsageError("unknown algorithm '" + s + "'");
}

void print_counters(std::ostream& os, const maub::RunRecord& r) {
  const auto& f = r.final();
  os << "algo=" << maub::to_string(r.config.algorithm)
     << " matroid=" << r.config.matroid.label() << " seed=" << r.config.seed << '\n'
     << "rounds=" << f.round << '\n'
     << "regret=" << maub::format_real(f.regret) << '\n'
     << "oracle_calls=" << f.oracle_calls << '\n'
     << "greedy_calls=" << f.greedy_calls << '\n'
     << "neigh_updates=" << f.neighborhood_updates << '\n'
     << "leader_changes=" << f.leader_changes << '\n'
     << "wall_s=" << maub::format_real(r.wall_seconds) << '\n';
}

std::vector<maub::RunRecord> run_all(const std::vector<maub::RunConfig>& configs,
                                     unsigned workers) {
  std::vector<std::optional<maub::RunRecord>> results(configs.size());
  std::vector<std::exception_ptr> errors(configs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < configs.size(); i = next++) {
      try {
        results[i] = maub::run(configs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, configs.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<maub::RunRecord> out;
  out.reserve(results.size());
  for (auto& r : results) out.push_back(std::move(*r));
  return out;
}

struct RunArgs {
  std::string matroid, matroid_file, algo = "maub", out;
  std::optional<std::uint64_t> horizon, seed;
  double sigma = 0.2, mean_lo = 0.5, mean_hi = 1.0, delta_min = 1e-4, omm_alpha = 2.0;
  std::uint64_t stride = 0;
  bool timing = false;
};

int cmd_run(const RunArgs& a) {
  maub::RunConfig c;
  c.matroid = resolve_spec(a.matroid, a.matroid_file);
  c.algorithm = parse_algorithm(a.algo);
  c.horizon = *a.horizon;
  c.seed = a.seed ? *a.seed : seed_base_default();
  c.mean_range = {a.mean_lo, a.mean_hi};
  c.sigma = a.sigma;
  c.delta_min = a.delta_min;
  c.checkpoint_stride = a.stride;
  c.omm_alpha = a.omm_alpha;
  c.record_wall_time = a.timing;
  const maub::RunRecord r = maub::run(c);
  if (!a.out.empty()) {
    std::ofstream out(a.out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + a.out + "'");
    maub::write_run_csv(out, {r});
  }
  print_counters(std::cout, r);
  return kOk;
}

struct BenchArgs {
  std::string suite = "all", out = "results", algos = "maub,omm";
  std::uint64_t horizon = 100'000;
  std::uint64_t seeds = 20;
  std::optional<std::uint64_t> seed_base;
  unsigned parallel = 1;
  bool timing = false;
};

int cmd_bench(const BenchArgs& a) {
  std::vector<maub::Benchmark> benches;
  if (a.suite == "all") {
    benches = maub::benchmark_suite();
  } else {
    try {
      benches.push_back(maub::find_benchmark(a.suite));
    } catch (const maub::InvalidInput& e) {
      throw UsageError(e.what());
    }
  }
  std::vector<maub::Algorithm> algos;
  for (const auto& s : maub::detail::split(a.algos, ',')) algos.push_back(parse_algorithm(s));
  if (algos.empty() || a.seeds == 0) throw UsageError("nothing to run");
  const std::uint64_t base = a.seed_base ? *a.seed_base : seed_base_default();

  std::filesystem::create_directories(a.out);
  std::ofstream summary(std::filesystem::path(a.out) / "summary.csv", std::ios::binary);
  summary << maub::kSummaryCsvHeader << '\n';
  for (const auto& b : benches) {
    std::vector<maub::RunConfig> configs;
    for (maub::Algorithm algo : algos) {
      for (std::uint64_t i = 0; i < a.seeds; ++i) {
        maub::RunConfig c;
        c.matroid = b.matroid;
        c.algorithm = algo;
        c.horizon = a.horizon;
        c.seed = base + i;
        c.mean_range = b.mean_range;
        c.record_wall_time = a.timing;
        configs.push_back(c);
      }
    }
    const auto records = run_all(configs, a.parallel);
    std::ofstream csv(std::filesystem::path(a.out) / (b.name + ".csv"), std::ios::binary);
    maub::write_run_csv(csv, records);
    for (std::size_t k = 0; k < algos.size(); ++k) {
      std::vector<maub::RunRecord> group(records.begin() + k * a.seeds,
                                         records.begin() + (k + 1) * a.seeds);
      const maub::Summary s = maub::aggregate(group);
      maub::write_summary_rows(summary, s);
      std::cout << b.name << ' ' << maub::to_string(s.algorithm)
                << " regret=" << maub::format_real(s.curve.back().regret_mean)
                << " oracle_calls=" << maub::format_real(s.oracle_calls)
                << " greedy_calls=" << maub::format_real(s.greedy_calls)
                << " neigh_updates=" << maub::format_real(s.neighborhood_updates) << '\n';
    }
  }
  return kOk;
}

struct VerifyArgs {
  std::string matroid, matroid_file;
  int trials = 100;
  std::uint64_t seed = 0;
};

int cmd_verify(const VerifyArgs& a) {
  const maub::Matroid m = maub::make_matroid(resolve_spec(a.matroid, a.matroid_file));
  bool ok = true;
  for (const auto& r : maub::run_property_suite(m, a.trials, a.seed)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) std::cout << ": " << r.detail;
    std::cout << '\n';
    ok &= r.passed;
  }
  return ok ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid semi-bandit learners and benchmarks"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Execute one run and write its CSV");
  run->add_option("--matroid", run_args.matroid, "Matroid shorthand, e.g. uniform:7:10");
  run->add_option("--matroid-file", run_args.matroid_file, "JSON matroid spec");
  run->add_option("--algo", run_args.algo, "maub or omm");
  run->add_option("--t", run_args.horizon, "Horizon (rounds)")->required();
  run->add_option("--seed", run_args.seed, "Run seed (default: MAUB_SEED_BASE or 0)");
  run->add_option("--out", run_args.out, "CSV output path");
  run->add_option("--sigma", run_args.sigma, "Reward noise standard deviation");
  run->add_option("--mean-lo", run_args.mean_lo, "Lower end of the mean range");
  run->add_option("--mean-hi", run_args.mean_hi, "Upper end of the mean range");
  run->add_option("--delta-min", run_args.delta_min, "Minimum gap between means");
  run->add_option("--stride", run_args.stride, "Checkpoint stride (0: T/500)");
  run->add_option("--omm-alpha", run_args.omm_alpha, "OMM exploration constant");
  run->add_flag("--time", run_args.timing, "Record wall-clock time (non-reproducible)");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Run benchmark suites over many seeds");
  bench->add_option("--suite", bench_args.suite, "Benchmark name or 'all'");
  bench->add_option("--t", bench_args.horizon, "Horizon (rounds)");
  bench->add_option("--seeds", bench_args.seeds, "Seeds per algorithm");
  bench->add_option("--seed-base", bench_args.seed_base,
                    "First seed (default: MAUB_SEED_BASE or 0)");
  bench->add_option("--algos", bench_args.algos, "Comma-separated algorithms");
  bench->add_option("--out", bench_args.out, "Output directory");
  bench->add_option("--parallel", bench_args.parallel, "Worker threads");
  bench->add_flag("--time", bench_args.timing, "Record wall-clock time (non-reproducible)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Exhaustive property checks on a small matroid");
  verify->add_option("--matroid", verify_args.matroid, "Matroid shorthand");
  verify->add_option("--matroid-file", verify_args.matroid_file, "JSON matroid spec");
  verify->add_option("--trials", verify_args.trials, "Random weight vectors per property");
  verify->add_option("--seed", verify_args.seed, "Seed for the random weights");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kUsage;
  }

  try {
    if (*run) return cmd_run(run_args);
    if (*bench) return cmd_bench(bench_args);
    return cmd_verify(verify_args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
