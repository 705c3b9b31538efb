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

// Swap neighborhoods of a basis.
//
// For a basis B and weights w, every external element e is mapped to the
// lowest-weight element x of B such that B - x + e is again a basis. The
// neighbors of B are the bases B - x + e obtained this way, one per external
// element. Every non-optimal basis has a strictly better neighbor, which is
// what lets the learner explore only around its current leader.

#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "maub/matroid.hpp"

namespace maub {

struct Swap {
  ElementId out;  // leaves the leader
  ElementId in;   // enters from outside

  friend bool operator==(const Swap&, const Swap&) = default;
};

struct SwapNeighborhood {
  Basis leader;
  std::vector<Swap> swaps;
  /// Leader elements by ascending weight at construction time, ties by id.
  std::vector<ElementId> leader_order;

  friend bool operator==(const SwapNeighborhood&, const SwapNeighborhood&) = default;
};

/// Elements of `s` sorted by ascending weight, ties by ascending id.
inline std::vector<ElementId> ascending_order(std::span<const ElementId> s,
                                              const WeightVector& w) {
  std::vector<ElementId> order(s.begin(), s.end());
  std::sort(order.begin(), order.end());
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementId a, ElementId b) { return w[a] < w[b]; });
  return order;
}

/// Builds the swap neighborhood of basis `b`.
///
/// Leader elements are visited by ascending weight; for each one, the
/// external elements not yet mapped are tried in id order and each feasible
/// swap claims its external element. Every test is one oracle call, so the
/// cost is at most D * (|E| - D) calls, and exactly |E| - D on a uniform
/// matroid.
inline SwapNeighborhood compute_neighbors(const Matroid& m, const Basis& b,
                                          const WeightVector& w) {
  validate_weights(w, m.size());
  if (!m.is_basis_uncounted(b)) throw InvalidInput("compute_neighbors: not a basis");

  SwapNeighborhood nh;
  nh.leader = b;
  std::sort(nh.leader.begin(), nh.leader.end());
  nh.leader_order = ascending_order(nh.leader, w);

  std::vector<ElementId> unmapped;
  for (ElementId e = 0; e < m.size(); ++e) {
    if (!contains(nh.leader, e)) unmapped.push_back(e);
  }

  auto session = m.session();
  for (ElementId x : nh.leader_order) {
    if (unmapped.empty()) break;
    // B - x is independent; each probe asks whether B - x + e is a basis.
    session.clear();
    for (ElementId y : nh.leader) {
      if (y != x) session.add(y);
    }
    std::vector<ElementId> still;
    still.reserve(unmapped.size());
    for (ElementId e : unmapped) {
      if (session.can_add(e)) {
        nh.swaps.push_back({x, e});
      } else {
        still.push_back(e);
      }
    }
    unmapped = std::move(still);
  }
  if (!unmapped.empty()) {
    throw std::logic_error("compute_neighbors: external element " +
                           std::to_string(unmapped.front()) +
                           " has no exchange partner (matroid loop?)");
  }
  return nh;
}

/// Value of every neighbor under per-element values `idx`, through
/// value(B - x + e) = value(B) - idx[x] + idx[e]. The difference is formed
/// first, so an equal pair gives back the leader value exactly.
inline std::vector<std::pair<Swap, double>> neighbor_values(
    const SwapNeighborhood& nh, const WeightVector& idx) {
  const double base = total_weight(nh.leader, idx);
  std::vector<std::pair<Swap, double>> out;
  out.reserve(nh.swaps.size());
  for (const Swap& s : nh.swaps) out.emplace_back(s, base + (idx[s.in] - idx[s.out]));
  return out;
}

/// Function object building neighborhoods; swap it out to test alternatives.
struct MinWeightExchange {
  SwapNeighborhood operator()(const Matroid& m, const Basis& b,
                              const WeightVector& w) const {
    return compute_neighbors(m, b, w);
  }
};

/// True iff every non-optimal basis has a strictly better neighbor.
/// Works on a private copy of `m`, so the caller's oracle counter is left
/// alone.
template <class NeighborFn = MinWeightExchange>
bool verify_unimodality(const Matroid& m, const WeightVector& w,
                        NeighborFn neighbors = {},
                        std::uint64_t cap = kDefaultEnumerationCap) {
  validate_weights(w, m.size());
  Matroid scratch = m;
  const auto bases = enumerate_bases(scratch, cap);
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& b : bases) best = std::max(best, total_weight(b, w));
  for (const auto& b : bases) {
    const double value = total_weight(b, w);
    if (value >= best) continue;
    const SwapNeighborhood nh = neighbors(scratch, b, w);
    bool improved = false;
    for (const Swap& s : nh.swaps) {
      if (total_weight(swapped(b, s.out, s.in), w) > value) {
        improved = true;
        break;
      }
    }
    if (!improved) return false;
  }
  return true;
}

}  // namespace maub
