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

#include "maub/bandit.hpp"
#include "maub/benchmarks.hpp"
#include "maub/csv.hpp"
#include "maub/harness.hpp"
#include "maub/matroid.hpp"
#include "maub/matroid_spec.hpp"
#include "maub/properties.hpp"
#include "maub/rng.hpp"
#include "maub/types.hpp"
#include "maub/union_find.hpp"
#include "maub/unimodal.hpp"
