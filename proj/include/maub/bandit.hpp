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

// Semi-bandit learners over the bases of a matroid.
//
// MaubLearner keeps a leader basis and its swap neighborhood, recomputes
// them only when the empirical means say the leader is beaten (greedy call)
// or when the order of the leader's own elements changes (neighborhood
// update), and otherwise plays optimistically inside the neighborhood.
//
// OmmLearner is the CUCB baseline: greedy on optimistic indices every round.
//
// Both learners own their matroid, so oracle_calls counts exactly the
// membership queries made while learning. A reward callback has signature
//   std::vector<double>(const Basis& played)
// and returns one observation per played element, in basis order.

#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "maub/matroid.hpp"
#include "maub/unimodal.hpp"

namespace maub {

enum class Algorithm { maub, omm };

inline const char* to_string(Algorithm a) {
  return a == Algorithm::maub ? "maub" : "omm";
}

template <class F>
concept RewardCallback = std::invocable<F&, const Basis&> &&
    std::convertible_to<std::invoke_result_t<F&, const Basis&>, std::vector<double>>;

struct BanditStats {
  std::vector<std::uint64_t> plays;  // N_e
  WeightVector emp_mean;             // running average of observed rewards
  std::uint64_t t = 0;               // completed rounds, initialization included
  std::map<Basis, std::uint64_t> leader_counts;  // only bases that led

  explicit BanditStats(std::size_t n = 0) : plays(n, 0), emp_mean(n, 0.0) {}

  void observe(const Basis& played, const std::vector<double>& rewards) {
    if (rewards.size() != played.size()) {
      throw InvalidInput("reward callback returned " + std::to_string(rewards.size()) +
                         " values for " + std::to_string(played.size()) + " elements");
    }
    for (std::size_t i = 0; i < played.size(); ++i) {
      const ElementId e = played[i];
      const double n = static_cast<double>(plays[e]);
      plays[e] += 1;
      emp_mean[e] = (n * emp_mean[e] + rewards[i]) / static_cast<double>(plays[e]);
    }
    ++t;
  }

  bool all_played() const {
    return std::all_of(plays.begin(), plays.end(),
                       [](std::uint64_t n) { return n > 0; });
  }
};

struct LearnerCounters {
  std::uint64_t oracle_calls = 0;
  std::uint64_t greedy_calls = 0;
  std::uint64_t neighborhood_updates = 0;  // recomputations with a stable leader
  std::uint64_t leader_changes = 0;
};

/// mean + sqrt(alpha * log(local_time) / N_e); alpha = 2 is the MAUB bonus.
inline double optimistic_index(const BanditStats& stats, ElementId e,
                               double local_time, double alpha = 2.0) {
  const double bonus = std::log(local_time) / static_cast<double>(stats.plays[e]);
  return stats.emp_mean[e] + std::sqrt(alpha * bonus);
}

namespace detail {

class LearnerBase {
 public:
  const Matroid& matroid() const { return m_; }
  const BanditStats& stats() const { return stats_; }
  bool initialized() const { return initialized_; }

  LearnerCounters counters() const {
    LearnerCounters c = counters_;
    c.oracle_calls = m_.oracle_calls();
    return c;
  }

 protected:
  explicit LearnerBase(Matroid m) : m_(std::move(m)), stats_(m_.size()) {
    m_.reset_oracle_calls();
  }

  Basis greedy_counted(const WeightVector& w) {
    ++counters_.greedy_calls;
    return greedy(m_, w);
  }

  template <RewardCallback F>
  void play(const Basis& b, F& rewards) {
    stats_.observe(b, std::invoke(rewards, b));
  }

  // Plays greedy bases on the indicator of unplayed elements until every
  // element has been observed once.
  template <RewardCallback F>
  void cover(F& rewards) {
    if (initialized_) throw std::logic_error("learner already initialized");
    while (!stats_.all_played()) {
      WeightVector w(m_.size());
      for (ElementId e = 0; e < m_.size(); ++e) w[e] = stats_.plays[e] == 0 ? 1.0 : 0.0;
      play(greedy_counted(w), rewards);
    }
  }

  void require_initialized() const {
    if (!initialized_) throw std::logic_error("learner not initialized");
  }

  Matroid m_;
  BanditStats stats_;
  LearnerCounters counters_;
  bool initialized_ = false;
};

}  // namespace detail

class MaubLearner : public detail::LearnerBase {
 public:
  explicit MaubLearner(Matroid m) : LearnerBase(std::move(m)) {}

  // leader_count_ points into stats_.leader_counts; moves keep map nodes.
  MaubLearner(const MaubLearner&) = delete;
  MaubLearner& operator=(const MaubLearner&) = delete;
  MaubLearner(MaubLearner&&) = default;
  MaubLearner& operator=(MaubLearner&&) = default;

  /// Plays every element once, then sets the first leader and neighborhood.
  template <RewardCallback F>
  void initialize(F&& rewards) {
    cover(rewards);
    set_leader(greedy_counted(stats_.emp_mean));
    initialized_ = true;
  }

  /// One learning round; returns the basis played.
  template <RewardCallback F>
  Basis step(F&& rewards) {
    require_initialized();
    const WeightVector& mean = stats_.emp_mean;

    // Leader and neighborhood maintenance.
    const double leader_mean = total_weight(leader_, mean);
    bool beaten = false;
    for (const auto& [swap, value] : neighbor_values(nh_, mean)) {
      if (value > leader_mean) {
        beaten = true;
        break;
      }
    }
    if (beaten) {
      Basis next = greedy_counted(mean);
      if (next != leader_) ++counters_.leader_changes;
      set_leader(std::move(next));
    } else if (ascending_order(leader_, mean) != nh_.leader_order) {
      nh_ = compute_neighbors(m_, leader_, mean);
      ++counters_.neighborhood_updates;
    }
    if (nh_.leader != leader_) throw std::logic_error("stale neighborhood");

    // Arm selection.
    const std::uint64_t local_time = ++*leader_count_;
    const std::uint64_t period = m_.size() - m_.rank() + 1;
    Basis played;
    if ((local_time - 1) % period == 0) {
      played = leader_;
    } else {
      WeightVector idx(m_.size());
      for (ElementId e = 0; e < m_.size(); ++e) {
        idx[e] = optimistic_index(stats_, e, static_cast<double>(local_time));
      }
      const double leader_idx = total_weight(leader_, idx);
      double best = leader_idx;
      const Swap* choice = nullptr;
      const auto values = neighbor_values(nh_, idx);
      for (const auto& [swap, value] : values) {
        if (value > best || (choice != nullptr && value == best && swap.in < choice->in)) {
          best = value;
          choice = &swap;
        }
      }
      played = choice ? swapped(leader_, choice->out, choice->in) : leader_;
    }

    play(played, rewards);
    return played;
  }

  const Basis& leader() const { return leader_; }
  const SwapNeighborhood& neighborhood() const { return nh_; }

  /// l_L for the current leader.
  std::uint64_t leader_count() const { return leader_count_ ? *leader_count_ : 0; }

 private:
  void set_leader(Basis b) {
    leader_ = std::move(b);
    nh_ = compute_neighbors(m_, leader_, stats_.emp_mean);
    leader_count_ = &stats_.leader_counts[leader_];
  }

  Basis leader_;
  SwapNeighborhood nh_;
  std::uint64_t* leader_count_ = nullptr;  // node of stats_.leader_counts
};

class OmmLearner : public detail::LearnerBase {
 public:
  explicit OmmLearner(Matroid m, double alpha = 2.0)
      : LearnerBase(std::move(m)), alpha_(alpha) {}

  template <RewardCallback F>
  void initialize(F&& rewards) {
    cover(rewards);
    initialized_ = true;
  }

  /// Greedy on mean + sqrt(alpha log t / N_e), t being the current round
  /// number counted from the first initialization round.
  template <RewardCallback F>
  Basis step(F&& rewards) {
    require_initialized();
    const std::uint64_t round = stats_.t + 1;
    WeightVector idx(m_.size());
    for (ElementId e = 0; e < m_.size(); ++e) {
      idx[e] = optimistic_index(stats_, e, static_cast<double>(round), alpha_);
    }
    Basis played = greedy_counted(idx);
    play(played, rewards);
    return played;
  }

  double alpha() const { return alpha_; }

 private:
  double alpha_;
};

}  // namespace maub
