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
#include <vector>

#include "stabsym/operators.h"
#include "stabsym/perm_group.h"

namespace stabsym {

/// Complete graph with colored vertices and edges; colors are small integers.
struct ColoredGraph {
  int n = 0;
  std::vector<int> color;  // n*n, diagonal entries are vertex colors

  int operator()(int i, int j) const { return color[static_cast<size_t>(i) * n + j]; }

  /// Colors are indices into the sorted list of distinct Gram values.
  static ColoredGraph from_gram(const GramMatrix& g);
  bool is_automorphism(const Perm& p) const;
};

struct AutomorphismResult {
  std::vector<Perm> generators;
  std::vector<int> base;           // individualized vertices of the first path
  std::vector<int> orbit_lengths;  // |G_k . base[k]|
  BigInt order;                    // product of orbit lengths
  bool certified = false;          // false if the time budget ran out
  uint64_t nodes = 0;
  double seconds = 0;
};

/// Default time budget in seconds; STABSYM_BUDGET_SECONDS overrides it.
double automorphism_budget_seconds();

/// All color-preserving vertex permutations, by individualization and refinement.
AutomorphismResult graph_automorphisms(const ColoredGraph& g, double budget_seconds = -1);

AutomorphismResult gram_automorphisms(const GramMatrix& g, double budget_seconds = -1);

}  // namespace stabsym
