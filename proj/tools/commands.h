// Copyright 2026 The stabsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>

#include "stabsym/serialize.h"

namespace stabsym::cli {

enum ExitCode { kPass = 0, kMismatch = 1, kUsage = 2, kBudget = 3 };

struct RunConfig {
  int d = 3;
  int n = 1;
  uint64_t seed = 1;
  int samples = 100;
  std::string format = "json";
  std::string variant;  // empty: the case that applies to (d, n)
  bool check = false;   // gram: brute-force cross-check
  bool timing = false;
};

struct Outcome {
  Json report;
  int code = kPass;
  std::string csv;  // set by gram when asked for csv
};

Outcome run_enumerate(const RunConfig& c);
Outcome run_gram(const RunConfig& c);
Outcome run_autgroup(const RunConfig& c);
Outcome run_verify_design(const RunConfig& c);
Outcome run_verify_clifford(const RunConfig& c);
Outcome run_facets(const RunConfig& c);
Outcome run_report(const RunConfig& c);

}  // namespace stabsym::cli
