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

#include <string>
#include <vector>

#include "maub/harness.hpp"
#include "maub/matroid_spec.hpp"

namespace maub {

struct Benchmark {
  std::string name;
  MatroidSpec matroid;
  MeanRange mean_range;
};

/// The ten shipped benchmarks. The linear one uses a fixed seeded family of
/// 100 genre vectors in dimension 18 with rank 16, and ratings in [0, 5].
inline std::vector<Benchmark> benchmark_suite() {
  auto p = [](const char* s) { return parse_shorthand(s); };
  return {
      {"u7_10", p("uniform:7:10"), {}},
      {"u7_15", p("uniform:7:15"), {}},
      {"u15_20", p("uniform:15:20"), {}},
      {"u15_30", p("uniform:15:30"), {}},
      {"k5", p("graphic:complete:5"), {}},
      {"k7", p("graphic:complete:7"), {}},
      {"k15", p("graphic:complete:15"), {}},
      {"k20", p("graphic:complete:20"), {}},
      {"linear", p("linear:random:16:100:18:0"), {0.0, 5.0}},
      {"transversal", p("transversal:bench"), {}},
  };
}

/// Looks up a benchmark by name; throws InvalidInput if unknown.
inline Benchmark find_benchmark(const std::string& name) {
  for (auto& b : benchmark_suite()) {
    if (b.name == name) return b;
  }
  throw InvalidInput("unknown benchmark '" + name + "'");
}

}  // namespace maub
