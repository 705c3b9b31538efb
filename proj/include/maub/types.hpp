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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace maub {

/// Dense index of a groundset element, in [0, |E|).
using ElementId = std::uint32_t;

/// Sorted, duplicate-free list of element ids.
using ElementSet = std::vector<ElementId>;

/// A maximal independent set, kept sorted ascending.
using Basis = ElementSet;

/// One real value per element (true means, empirical means or indices).
using WeightVector = std::vector<double>;

/// Bad arguments: out-of-range ids, duplicate members, non-bases...
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive routine would exceed its configured cap.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matroid description that cannot be built (rank 0, loops, ...).
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Experiment configuration that cannot be satisfied.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Returns `s` with `e` inserted, keeping the order.
inline ElementSet with_element(std::span<const ElementId> s, ElementId e) {
  ElementSet out(s.begin(), s.end());
  out.insert(std::lower_bound(out.begin(), out.end(), e), e);
  return out;
}

/// Returns `s` without `e` (no-op if absent).
inline ElementSet without_element(std::span<const ElementId> s, ElementId e) {
  ElementSet out;
  out.reserve(s.size());
  for (ElementId x : s) {
    if (x != e) out.push_back(x);
  }
  return out;
}

/// B - out + in, sorted.
inline ElementSet swapped(std::span<const ElementId> s, ElementId out,
                          ElementId in) {
  return with_element(without_element(s, out), in);
}

inline bool contains(std::span<const ElementId> sorted_set, ElementId e) {
  return std::binary_search(sorted_set.begin(), sorted_set.end(), e);
}

inline double total_weight(std::span<const ElementId> s,
                           const WeightVector& w) {
  double sum = 0.0;
  for (ElementId e : s) sum += w[e];
  return sum;
}

inline void validate_weights(const WeightVector& w, std::size_t n) {
  if (w.size() != n) {
    throw InvalidInput("weight vector has " + std::to_string(w.size()) +
                       " entries, groundset has " + std::to_string(n));
  }
  for (double v : w) {
    if (!std::isfinite(v)) throw InvalidInput("non-finite weight");
  }
}

}  // namespace maub
