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

// Exhaustive property checks on small matroids: the independence axioms,
// basis exchange, greedy optimality, sigma-minimality of swap neighborhoods
// and unimodality of the neighborhood graph.
//
// The axiom checks only need an IndependenceOracle, so they also run
// against hand-made non-matroids in the tests.

#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "maub/matroid.hpp"
#include "maub/rng.hpp"
#include "maub/unimodal.hpp"

namespace maub {

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

inline constexpr std::size_t kMaxExhaustiveGroundset = 20;

namespace detail {

inline std::string show(std::span<const ElementId> s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

inline ElementSet subset_from_mask(std::uint64_t mask, std::size_t n) {
  ElementSet s;
  for (ElementId e = 0; e < n; ++e) {
    if (mask >> e & 1U) s.push_back(e);
  }
  return s;
}

}  // namespace detail

/// Every independent set, by testing all 2^|E| subsets.
template <IndependenceOracle Oracle>
std::vector<ElementSet> enumerate_independent_sets(const Oracle& m) {
  const std::size_t n = m.size();
  if (n > kMaxExhaustiveGroundset) {
    throw ResourceLimit("groundset of " + std::to_string(n) +
                        " elements is too large for exhaustive checks");
  }
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ElementSet s = detail::subset_from_mask(mask, n);
    if (m.is_independent(std::span<const ElementId>(s))) out.push_back(std::move(s));
  }
  return out;
}

template <IndependenceOracle Oracle>
PropertyResult check_hereditary(const Oracle& m) {
  PropertyResult r{"hereditary"};
  const ElementSet empty;
  if (!m.is_independent(std::span<const ElementId>(empty))) {
    return {r.name, false, "empty set is dependent"};
  }
  for (const auto& s : enumerate_independent_sets(m)) {
    for (ElementId e : s) {
      const ElementSet sub = without_element(s, e);
      if (!m.is_independent(std::span<const ElementId>(sub))) {
        return {r.name, false,
                detail::show(s) + " independent but " + detail::show(sub) + " is not"};
      }
    }
  }
  return r;
}

template <IndependenceOracle Oracle>
PropertyResult check_augmentation(const Oracle& m) {
  PropertyResult r{"augmentation"};
  std::map<std::size_t, std::vector<ElementSet>> by_size;
  for (auto& s : enumerate_independent_sets(m)) by_size[s.size()].push_back(std::move(s));
  for (const auto& [k, smaller] : by_size) {
    auto it = by_size.find(k + 1);
    if (it == by_size.end()) continue;
    for (const auto& big : it->second) {
      for (const auto& small : smaller) {
        bool found = false;
        for (ElementId e : big) {
          if (contains(small, e)) continue;
          const ElementSet grown = with_element(small, e);
          if (m.is_independent(std::span<const ElementId>(grown))) {
            found = true;
            break;
          }
        }
        if (!found) {
          return {r.name, false,
                  "no element of " + detail::show(big) + " augments " + detail::show(small)};
        }
      }
    }
  }
  return r;
}

template <IndependenceOracle Oracle>
PropertyResult check_basis_exchange(const Oracle& m,
                                    std::uint64_t cap = kDefaultEnumerationCap) {
  PropertyResult r{"basis exchange"};
  const auto bases = enumerate_bases(m, cap);
  auto is_basis = [&](const ElementSet& s) {
    return std::binary_search(bases.begin(), bases.end(), s);
  };
  for (const auto& x_basis : bases) {
    for (const auto& y_basis : bases) {
      for (ElementId x : x_basis) {
        if (contains(y_basis, x)) continue;
        bool found = false;
        for (ElementId y : y_basis) {
          if (contains(x_basis, y)) continue;
          if (is_basis(swapped(x_basis, x, y))) {
            found = true;
            break;
          }
        }
        if (!found) {
          return {r.name, false,
                  "removing " + std::to_string(x) + " from " + detail::show(x_basis) +
                      " has no replacement in " + detail::show(y_basis)};
        }
      }
    }
  }
  return r;
}

inline WeightVector random_weights(std::size_t n, SplitMix64& rng) {
  WeightVector w(n);
  for (double& x : w) x = rng.uniform01();
  return w;
}

/// greedy(m, w) reaches the best total weight among all bases.
inline PropertyResult check_greedy_optimal(const Matroid& m, int trials,
                                           SplitMix64& rng) {
  PropertyResult r{"greedy optimality"};
  Matroid scratch = m;
  const auto bases = enumerate_bases(scratch);
  for (int t = 0; t < trials; ++t) {
    const WeightVector w = random_weights(m.size(), rng);
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& b : bases) best = std::max(best, total_weight(b, w));
    const Basis g = greedy(scratch, w);
    if (!std::binary_search(bases.begin(), bases.end(), g) ||
        total_weight(g, w) < best) {
      return {r.name, false, "greedy returned " + detail::show(g) + " on trial " +
                                 std::to_string(t)};
    }
  }
  return r;
}

/// extends_independent agrees with a fresh membership query along random
/// greedy traces.
inline PropertyResult check_incremental_oracle(const Matroid& m, int trials,
                                               SplitMix64& rng) {
  PropertyResult r{"incremental oracle"};
  Matroid scratch = m;
  for (int t = 0; t < trials; ++t) {
    const WeightVector w = random_weights(m.size(), rng);
    ElementSet current;
    for (ElementId e : decreasing_order(w)) {
      const bool inc = extends_independent(scratch, current, e);
      const ElementSet grown = with_element(current, e);
      if (inc != scratch.is_independent(grown)) {
        return {r.name, false, "disagreement adding " + std::to_string(e) + " to " +
                                   detail::show(current)};
      }
      if (inc) current = grown;
    }
  }
  return r;
}

/// Each recorded swap (x, e) uses the lowest-weight exchangeable leader
/// element, and every external element is mapped exactly once.
inline PropertyResult check_sigma_minimality(const Matroid& m, int trials,
                                             SplitMix64& rng) {
  PropertyResult r{"sigma minimality"};
  Matroid scratch = m;
  const auto bases = enumerate_bases(scratch);
  for (int t = 0; t < trials; ++t) {
    const WeightVector w = random_weights(m.size(), rng);
    const Basis& b = bases[rng.below(bases.size())];
    const SwapNeighborhood nh = compute_neighbors(scratch, b, w);
    if (nh.swaps.size() != m.size() - m.rank()) {
      return {r.name, false, "neighborhood of " + detail::show(b) + " has " +
                                 std::to_string(nh.swaps.size()) + " swaps"};
    }
    for (const Swap& s : nh.swaps) {
      if (!scratch.is_basis_uncounted(swapped(b, s.out, s.in))) {
        return {r.name, false, "infeasible swap recorded"};
      }
      for (ElementId y : b) {
        if (w[y] < w[s.out] && scratch.is_basis_uncounted(swapped(b, y, s.in))) {
          return {r.name, false,
                  "element " + std::to_string(s.in) + " mapped to " +
                      std::to_string(s.out) + " but lighter " + std::to_string(y) +
                      " is exchangeable"};
        }
      }
    }
  }
  return r;
}

template <class NeighborFn = MinWeightExchange>
PropertyResult check_unimodality(const Matroid& m, int trials, SplitMix64& rng,
                                 NeighborFn neighbors = {}) {
  PropertyResult r{"unimodality"};
  for (int t = 0; t < trials; ++t) {
    const WeightVector w = random_weights(m.size(), rng);
    if (!verify_unimodality(m, w, neighbors)) {
      return {r.name, false, "trial " + std::to_string(t) +
                                 " has a non-optimal basis with no better neighbor"};
    }
  }
  return r;
}

/// Runs every property on `m`. Each random check draws from its own
/// substream of `seed`.
inline std::vector<PropertyResult> run_property_suite(const Matroid& m, int trials,
                                                      std::uint64_t seed) {
  Matroid scratch = m;
  std::vector<PropertyResult> out;
  out.push_back(check_hereditary(scratch));
  out.push_back(check_augmentation(scratch));
  out.push_back(check_basis_exchange(scratch));
  const SplitMix64 root(seed);
  SplitMix64 g1 = root.split(1), g2 = root.split(2), g3 = root.split(3),
             g4 = root.split(4);
  out.push_back(check_greedy_optimal(scratch, trials, g1));
  out.push_back(check_incremental_oracle(scratch, trials, g2));
  out.push_back(check_sigma_minimality(scratch, trials, g3));
  out.push_back(check_unimodality(scratch, trials, g4));
  return out;
}

}  // namespace maub
