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

// Reproducible random streams.
//
// Generator: SplitMix64 (Steele, Lea & Flood 2014). State advances by the
// golden-ratio increment 0x9e3779b97f4a7c15 and each output is the state
// passed through the MurmurHash3-style finalizer below. Substreams are
// derived from a root seed as mix64(root + (stream + 1) * golden).
//
// Derived distributions:
//   uniform01   (x >> 11) * 2^-53                 in [0, 1)
//   open01      ((x >> 11) + 0.5) * 2^-53         in (0, 1)
//   below(k)    (x * k) >> 64 on 128-bit product  in [0, k)
//   normal      inverse CDF: -sqrt(2) * erfc_inv(2 * open01)
// One normal draw consumes exactly one 64-bit output.

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include <boost/math/special_functions/erf.hpp>

namespace maub {

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed of substream `stream` under `root`.
constexpr std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
  return mix64(root + (stream + 1) * kGoldenGamma);
}

class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    state_ += kGoldenGamma;
    return mix64(state_);
  }

  /// Independent generator for a named substream of this one's seed.
  SplitMix64 split(std::uint64_t stream) const {
    return SplitMix64(derive_seed(state_, stream));
  }

  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  double open01() {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::uint64_t below(std::uint64_t k) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>((*this)()) * k) >> 64);
  }

  double normal(double mean, double stddev) {
    const double z = -std::sqrt(2.0) * boost::math::erfc_inv(2.0 * open01());
    return mean + stddev * z;
  }

 private:
  std::uint64_t state_;
};

}  // namespace maub
