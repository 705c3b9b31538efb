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

// CSV output. Run files carry one row per checkpoint:
//
//   algo,matroid,seed,round,regret,oracle_calls,greedy_calls,neigh_updates,
//   leader_changes,leader_is_optimal,wall_s
//
// Reals are printed with 6 significant digits (%.6g). wall_s is the run's
// final wall-clock time and is 0 unless timing was requested.

#pragma once

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "maub/harness.hpp"

namespace maub {

inline constexpr const char* kRunCsvHeader =
    "algo,matroid,seed,round,regret,oracle_calls,greedy_calls,neigh_updates,"
    "leader_changes,leader_is_optimal,wall_s";

inline constexpr const char* kSummaryCsvHeader =
    "algo,matroid,runs,horizon,regret_mean,regret_std,wall_s,oracle_calls,"
    "greedy_calls,neigh_updates,leader_changes,optimal_leader_fraction";

inline std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

inline void write_run_rows(std::ostream& out, const RunRecord& r) {
  const std::string prefix = std::string(to_string(r.config.algorithm)) + "," +
                             r.config.matroid.label() + "," +
                             std::to_string(r.config.seed) + ",";
  const std::string wall = format_real(r.wall_seconds);
  for (const Checkpoint& c : r.rows) {
    out << prefix << c.round << ',' << format_real(c.regret) << ',' << c.oracle_calls
        << ',' << c.greedy_calls << ',' << c.neighborhood_updates << ','
        << c.leader_changes << ',' << (c.leader_is_optimal ? 1 : 0) << ',' << wall
        << '\n';
  }
}

inline void write_run_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << kRunCsvHeader << '\n';
  for (const auto& r : records) write_run_rows(out, r);
}

inline void write_summary_rows(std::ostream& out, const Summary& s) {
  const SummaryPoint& last = s.curve.back();
  out << to_string(s.algorithm) << ',' << s.matroid << ',' << s.runs << ','
      << last.round << ',' << format_real(last.regret_mean) << ','
      << format_real(last.regret_std) << ',' << format_real(s.wall_seconds) << ','
      << format_real(s.oracle_calls) << ',' << format_real(s.greedy_calls) << ','
      << format_real(s.neighborhood_updates) << ',' << format_real(s.leader_changes)
      << ',' << format_real(s.optimal_leader_fraction) << '\n';
}

/// One parsed row of a run CSV.
struct CsvRow {
  std::string algo;
  std::string matroid;
  std::uint64_t seed = 0;
  std::uint64_t round = 0;
  double regret = 0.0;
  std::uint64_t oracle_calls = 0;
  std::uint64_t greedy_calls = 0;
  std::uint64_t neigh_updates = 0;
  std::uint64_t leader_changes = 0;
  bool leader_is_optimal = false;
  double wall_s = 0.0;
};

/// Reads a run CSV; throws InvalidInput naming the offending line on any
/// schema violation.
inline std::vector<CsvRow> read_run_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kRunCsvHeader) {
    throw InvalidInput("line 1: unexpected header");
  }
  std::vector<CsvRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) f.push_back(item);
    if (f.size() != 11) {
      throw InvalidInput("line " + std::to_string(lineno) + ": expected 11 fields");
    }
    try {
      CsvRow r;
      r.algo = f[0];
      r.matroid = f[1];
      r.seed = std::stoull(f[2]);
      r.round = std::stoull(f[3]);
      r.regret = std::stod(f[4]);
      r.oracle_calls = std::stoull(f[5]);
      r.greedy_calls = std::stoull(f[6]);
      r.neigh_updates = std::stoull(f[7]);
      r.leader_changes = std::stoull(f[8]);
      if (f[9] != "0" && f[9] != "1") throw std::invalid_argument("flag");
      r.leader_is_optimal = f[9] == "1";
      r.wall_s = std::stod(f[10]);
      rows.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw InvalidInput("line " + std::to_string(lineno) + ": malformed field");
    }
  }
  return rows;
}

}  // namespace maub
