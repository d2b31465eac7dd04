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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stabsym/operators.h"
#include "stabsym/phase_space.h"

namespace stabsym {

// Single-qudit (n = 1) geometry for odd prime d.

/// Pi - (1/d) 1 for one stabilizer state.
struct ShiftedVertex {
  StabilizerLabel label;
  OpMatrix matrix;
};

/// All shifted vertices, grouped by line (Lagrangian) in enumeration order.
std::vector<ShiftedVertex> shifted_vertices(int d);

struct DirectSumReport {
  int d = 0;
  bool table_ok = false;
  bool line_sums_vanish = false;
  bool blocks_orthogonal = false;
  bool pass = false;
  std::map<BigRational, size_t> overlap_values;  // multiset over ordered pairs
  std::string detail;
};

DirectSumReport direct_sum_check(int d);

/// X = (1/d) 1 + sum_i pi_{L_i}^{g_i}; choice[i] indexes coset_representatives(L_i).
struct FacetOperator {
  std::vector<int> choice;
  OpMatrix matrix;
};

/// Number of facets d^{d+1}.
uint64_t facet_count(int d);

/// All facet operators; throws BudgetExceeded above max_facets.
std::vector<FacetOperator> facet_family(int d, uint64_t max_facets = 15625);

struct FacetReport {
  int d = 0;
  uint64_t facet_count = 0;
  bool distinct = false;
  bool supporting = false;  // every facet: min over vertices of tr(X Pi) is exactly 0
  int min_vertices_per_facet = 0;
  int max_vertices_per_facet = 0;
  bool pass = false;
  std::string detail;
};

/// Supporting-hyperplane and incidence checks, computed from the overlap table.
FacetReport check_facets(int d, uint64_t max_facets = 15625);

struct Membership {
  bool inside = false;
  bool interior = false;  // all facet values strictly positive
  BigRational min_value;
  std::optional<std::vector<int>> violated;  // first violating facet choice
};

/// A in the stabilizer polytope iff tr(A X) >= 0 on all facets. A must have rational
/// overlaps with the stabilizer projectors.
Membership polytope_membership(const OpMatrix& a, int d);

/// (1 - A(0)) / (d - 1): a state with negative Wigner value at the origin.
OpMatrix wigner_negative_state(int d);

}  // namespace stabsym
