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

// Acceptance run: one PASS/FAIL line per release criterion. Exits non-zero
// if any criterion fails.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "maub/maub.hpp"

namespace {

using namespace maub;

constexpr std::uint64_t kHorizon = 100'000;
constexpr std::uint64_t kSeeds = 20;

bool all_ok = true;

void report(const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << std::endl;
  all_ok &= ok;
}

std::string fmt(double x) { return format_real(x); }

RunConfig config(const std::string& matroid, Algorithm algo, std::uint64_t seed,
                 std::uint64_t horizon = kHorizon) {
  RunConfig c;
  c.matroid = parse_shorthand(matroid);
  c.algorithm = algo;
  c.horizon = horizon;
  c.seed = seed;
  return c;
}

std::vector<RunRecord> runs(const std::string& matroid, Algorithm algo) {
  std::vector<RunRecord> out;
  for (std::uint64_t s = 0; s < kSeeds; ++s) out.push_back(run(config(matroid, algo, s)));
  return out;
}

const Checkpoint& at_round(const RunRecord& r, std::uint64_t round) {
  for (const auto& c : r.rows) {
    if (c.round == round) return c;
  }
  throw std::logic_error("no checkpoint at round " + std::to_string(round));
}

void exact_counters() {
  struct Case {
    const char* matroid;
    std::uint64_t oracle;
  };
  bool ok = true;
  std::ostringstream detail;
  for (const Case& c : {Case{"uniform:7:10", 700'000}, Case{"uniform:7:15", 700'000},
                        Case{"uniform:15:20", 1'500'000},
                        Case{"uniform:15:30", 1'500'000}}) {
    const Checkpoint f = run(config(c.matroid, Algorithm::omm, 0)).final();
    ok &= f.oracle_calls == c.oracle && f.greedy_calls == kHorizon;
    detail << c.matroid << " oracle=" << f.oracle_calls << " greedy=" << f.greedy_calls
           << "; ";
  }
  report("exact OMM counters on uniform matroids", ok, detail.str());
}

void efficiency_gap(const std::vector<RunRecord>& maub_runs,
                    const std::vector<RunRecord>& omm_runs) {
  const Summary m = aggregate(maub_runs), o = aggregate(omm_runs);
  const double ratio = o.oracle_calls / m.oracle_calls;
  report("MAUB efficiency gap on U(7,10)",
         m.oracle_calls < 10'000 && m.greedy_calls < 500 && ratio > 70,
         "maub oracle=" + fmt(m.oracle_calls) + " greedy=" + fmt(m.greedy_calls) +
             " omm/maub=" + fmt(ratio));
}

void regret_parity(const std::string& name, const std::vector<RunRecord>& maub_runs,
                   const std::vector<RunRecord>& omm_runs) {
  const double m = aggregate(maub_runs).curve.back().regret_mean;
  const double o = aggregate(omm_runs).curve.back().regret_mean;
  report("regret parity on " + name, m <= 1.25 * o,
         "maub=" + fmt(m) + " omm=" + fmt(o) + " ratio=" + fmt(m / o));
}

void property_suite() {
  bool ok = true;
  std::ostringstream detail;
  for (const char* s : {"uniform:3:6", "graphic:complete:4", "linear:random:3:8:4:0",
                        "transversal:random:6:4:12:0"}) {
    const Matroid m = make_matroid(parse_shorthand(s));
    for (const auto& r : run_property_suite(m, 100, 0)) {
      if (!r.passed) detail << s << ' ' << r.name << ": " << r.detail << "; ";
      ok &= r.passed;
    }
  }
  // Unimodality on every benchmark small enough to enumerate.
  int checked = 0;
  for (const auto& b : benchmark_suite()) {
    const Matroid m = make_matroid(b.matroid);
    Matroid scratch = m;
    try {
      enumerate_bases(scratch, 60'000);
    } catch (const ResourceLimit&) {
      continue;
    }
    SplitMix64 rng(derive_seed(0, static_cast<std::uint64_t>(checked)));
    const auto r = check_unimodality(m, 100, rng);
    if (!r.passed) detail << b.name << ": " << r.detail << "; ";
    ok &= r.passed;
    ++checked;
  }
  detail << checked << " benchmarks checked for unimodality";
  report("property suite", ok, detail.str());
}

void determinism() {
  bool ok = true;
  for (const char* s : {"uniform:7:10", "graphic:complete:5", "transversal:bench"}) {
    for (Algorithm a : {Algorithm::maub, Algorithm::omm}) {
      std::ostringstream x, y;
      write_run_csv(x, {run(config(s, a, 5, 20'000))});
      write_run_csv(y, {run(config(s, a, 5, 20'000))});
      ok &= x.str() == y.str();
    }
  }
  report("byte-identical CSVs for identical configs", ok, "6 config pairs compared");
}

void leader_convergence(const std::vector<RunRecord>& maub_runs) {
  const double f = aggregate(maub_runs).optimal_leader_fraction;
  report("leader convergence on U(7,10)", f > 0.95, "second-half fraction=" + fmt(f));
}

void structural_work(const std::vector<RunRecord>& maub_runs) {
  double half = 0.0, full = 0.0;
  for (const auto& r : maub_runs) {
    const Checkpoint& h = at_round(r, kHorizon / 2);
    half += static_cast<double>(h.leader_changes + h.neighborhood_updates);
    full += static_cast<double>(r.final().leader_changes + r.final().neighborhood_updates);
  }
  half /= static_cast<double>(maub_runs.size());
  full /= static_cast<double>(maub_runs.size());
  const double growth = half > 0 ? full / half - 1.0 : 0.0;
  report("structural work growth on U(7,10)", growth < 0.25,
         "T/2=" + fmt(half) + " T=" + fmt(full) + " growth=" + fmt(growth));
}

}  // namespace

int main() {
  exact_counters();
  const auto u_maub = runs("uniform:7:10", Algorithm::maub);
  const auto u_omm = runs("uniform:7:10", Algorithm::omm);
  efficiency_gap(u_maub, u_omm);
  regret_parity("U(7,10)", u_maub, u_omm);
  regret_parity("K_5", runs("graphic:complete:5", Algorithm::maub),
                runs("graphic:complete:5", Algorithm::omm));
  property_suite();
  determinism();
  leader_convergence(u_maub);
  structural_work(u_maub);
  return all_ok ? 0 : 1;
}
