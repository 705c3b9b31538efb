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

// Seeded Gaussian semi-bandit environment and the experiment runner.
//
// A run draws true means from the `means` substream of its seed, computes
// the optimal basis once on a separate copy of the matroid (not charged to
// the learner), then plays `horizon` rounds. Initialization rounds are part
// of the horizon and of the regret.

#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "maub/bandit.hpp"
#include "maub/matroid.hpp"
#include "maub/matroid_spec.hpp"
#include "maub/rng.hpp"

namespace maub {

inline constexpr std::uint64_t kMeansStream = 0;
inline constexpr std::uint64_t kRewardsStream = 1;

struct MeanRange {
  double lo = 0.5;
  double hi = 1.0;
};

struct RewardModel {
  WeightVector means;
  double sigma = 0.2;
};

/// Uniform draws on `range`, redrawn until all pairwise gaps are at least
/// `delta_min`.
inline WeightVector sample_means(std::size_t n, MeanRange range, double delta_min,
                                 SplitMix64& rng, int max_attempts = 10'000) {
  const double width = range.hi - range.lo;
  if (!(width > 0.0) || delta_min < 0.0 ||
      width <= static_cast<double>(n) * delta_min) {
    throw ConfigError("mean range too narrow for " + std::to_string(n) +
                      " values with minimum gap " + std::to_string(delta_min));
  }
  WeightVector means(n);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    for (double& m : means) m = rng.uniform(range.lo, range.hi);
    if (delta_min == 0.0) return means;
    WeightVector sorted = means;
    std::sort(sorted.begin(), sorted.end());
    bool ok = true;
    for (std::size_t i = 1; i < sorted.size() && ok; ++i) {
      ok = sorted[i] - sorted[i - 1] >= delta_min;
    }
    if (ok) return means;
  }
  throw ConfigError("could not draw well-separated means");
}

/// One N(mean, sigma^2) draw per played element, in ascending element order.
inline std::vector<double> sample_rewards(const RewardModel& model,
                                          const Basis& played, SplitMix64& rng) {
  std::vector<double> out;
  out.reserve(played.size());
  for (ElementId e : played) out.push_back(rng.normal(model.means[e], model.sigma));
  return out;
}

inline double pseudo_regret_increment(const RewardModel& model, const Basis& played,
                                      const Basis& optimal) {
  return total_weight(optimal, model.means) - total_weight(played, model.means);
}

struct RunConfig {
  MatroidSpec matroid;
  Algorithm algorithm = Algorithm::maub;
  std::uint64_t horizon = 100'000;
  std::uint64_t seed = 0;
  MeanRange mean_range;
  double sigma = 0.2;
  double delta_min = 1e-4;
  std::uint64_t checkpoint_stride = 0;  // 0: horizon / 500
  double omm_alpha = 2.0;
  bool record_wall_time = false;  // off keeps outputs byte-reproducible
};

struct Checkpoint {
  std::uint64_t round = 0;
  double regret = 0.0;
  std::uint64_t oracle_calls = 0;
  std::uint64_t greedy_calls = 0;
  std::uint64_t neighborhood_updates = 0;
  std::uint64_t leader_changes = 0;
  bool leader_is_optimal = false;
};

struct RunRecord {
  RunConfig config;
  std::vector<Checkpoint> rows;
  double wall_seconds = 0.0;
  /// Share of rounds t > horizon/2 whose leader (MAUB) or played basis
  /// (OMM) is the optimal basis.
  double optimal_leader_fraction_second_half = 0.0;
  Basis optimal;

  const Checkpoint& final() const { return rows.back(); }
};

inline std::uint64_t effective_stride(const RunConfig& c) {
  if (c.checkpoint_stride > 0) return c.checkpoint_stride;
  return std::max<std::uint64_t>(1, c.horizon / 500);
}

namespace detail {

template <class Learner>
RunRecord run_with(Learner learner, const Matroid& m, const RunConfig& config,
                   const RewardModel& model, SplitMix64 reward_rng) {
  constexpr bool is_maub = std::is_same_v<Learner, MaubLearner>;
  RunRecord record;
  record.config = config;
  {
    Matroid scratch = m;
    record.optimal = greedy(scratch, model.means);
  }
  const std::uint64_t stride = effective_stride(config);
  const std::uint64_t half = config.horizon / 2;
  std::uint64_t round = 0;
  std::uint64_t optimal_rounds = 0;
  double regret = 0.0;

  auto rewards = [&](const Basis& played) {
    std::vector<double> x = sample_rewards(model, played, reward_rng);
    ++round;
    regret += pseudo_regret_increment(model, played, record.optimal);
    bool optimal = false;
    if constexpr (is_maub) {
      optimal = learner.initialized() && learner.leader() == record.optimal;
    } else {
      optimal = played == record.optimal;
    }
    if (round > half && optimal) ++optimal_rounds;
    if (round % stride == 0 || round == config.horizon) {
      const LearnerCounters c = learner.counters();
      record.rows.push_back(Checkpoint{round, regret, c.oracle_calls, c.greedy_calls,
                                       c.neighborhood_updates, c.leader_changes,
                                       optimal});
    }
    return x;
  };

  const auto start = std::chrono::steady_clock::now();
  learner.initialize(rewards);
  if (round > config.horizon) {
    throw ConfigError("horizon shorter than the initialization rounds");
  }
  while (round < config.horizon) learner.step(rewards);
  if (config.record_wall_time) {
    record.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  const std::uint64_t second_half = config.horizon - half;
  record.optimal_leader_fraction_second_half =
      second_half == 0 ? 0.0
                       : static_cast<double>(optimal_rounds) /
                             static_cast<double>(second_half);
  return record;
}

}  // namespace detail

/// Runs one (matroid, algorithm, seed) experiment. Deterministic in the
/// config.
inline RunRecord run(const RunConfig& config) {
  const Matroid m = make_matroid(config.matroid);
  if (config.horizon < m.size()) {
    throw ConfigError("horizon must be at least |E| = " + std::to_string(m.size()));
  }
  if (config.sigma < 0.0) throw ConfigError("negative noise level");
  const SplitMix64 root(config.seed);
  SplitMix64 means_rng = root.split(kMeansStream);
  const RewardModel model{
      sample_means(m.size(), config.mean_range, config.delta_min, means_rng),
      config.sigma};
  SplitMix64 reward_rng = root.split(kRewardsStream);
  if (config.algorithm == Algorithm::maub) {
    return detail::run_with(MaubLearner(m), m, config, model, reward_rng);
  }
  return detail::run_with(OmmLearner(m, config.omm_alpha), m, config, model, reward_rng);
}

struct SummaryPoint {
  std::uint64_t round = 0;
  double regret_mean = 0.0;
  double regret_std = 0.0;
};

struct Summary {
  std::string matroid;
  Algorithm algorithm = Algorithm::maub;
  std::size_t runs = 0;
  std::vector<SummaryPoint> curve;
  double wall_seconds = 0.0;
  double oracle_calls = 0.0;
  double greedy_calls = 0.0;
  double neighborhood_updates = 0.0;
  double leader_changes = 0.0;
  double optimal_leader_fraction = 0.0;
};

/// Per-checkpoint mean and (population) standard deviation of regret, and
/// means of the final counters. Records must differ only by seed.
inline Summary aggregate(const std::vector<RunRecord>& records) {
  if (records.empty()) throw InvalidInput("aggregate: no records");
  const RunRecord& first = records.front();
  auto same_config = [&](const RunConfig& c) {
    const RunConfig& f = first.config;
    return c.matroid.label() == f.matroid.label() && c.algorithm == f.algorithm &&
           c.horizon == f.horizon && c.mean_range.lo == f.mean_range.lo &&
           c.mean_range.hi == f.mean_range.hi && c.sigma == f.sigma &&
           c.delta_min == f.delta_min &&
           effective_stride(c) == effective_stride(f) && c.omm_alpha == f.omm_alpha;
  };
  for (const auto& r : records) {
    if (!same_config(r.config) || r.rows.size() != first.rows.size()) {
      throw InvalidInput("aggregate: records do not share a configuration");
    }
  }
  const double n = static_cast<double>(records.size());
  Summary s;
  s.matroid = first.config.matroid.label();
  s.algorithm = first.config.algorithm;
  s.runs = records.size();
  for (std::size_t i = 0; i < first.rows.size(); ++i) {
    double sum = 0.0;
    for (const auto& r : records) sum += r.rows[i].regret;
    const double mean = sum / n;
    double var = 0.0;
    for (const auto& r : records) var += (r.rows[i].regret - mean) * (r.rows[i].regret - mean);
    s.curve.push_back({first.rows[i].round, mean, std::sqrt(var / n)});
  }
  for (const auto& r : records) {
    const Checkpoint& f = r.final();
    s.wall_seconds += r.wall_seconds / n;
    s.oracle_calls += static_cast<double>(f.oracle_calls) / n;
    s.greedy_calls += static_cast<double>(f.greedy_calls) / n;
    s.neighborhood_updates += static_cast<double>(f.neighborhood_updates) / n;
    s.leader_changes += static_cast<double>(f.leader_changes) / n;
    s.optimal_leader_fraction += r.optimal_leader_fraction_second_half / n;
  }
  return s;
}

}  // namespace maub
