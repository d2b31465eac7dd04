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

#include <string>

#include "json.hpp"
#include "stabsym/clifford.h"
#include "stabsym/cyclotomic.h"
#include "stabsym/moments.h"
#include "stabsym/operators.h"
#include "stabsym/perm_group.h"
#include "stabsym/phase_space.h"
#include "stabsym/polytope1.h"
#include "stabsym/symmetry.h"

namespace stabsym {

using Json = nlohmann::ordered_json;

// Big integers go out as JSON numbers when they fit in 64 bits, else as decimal strings.
Json big_to_json(const BigInt& x);
BigInt big_from_json(const Json& j);

Json to_json(const PhaseVector& a);
PhaseVector phase_vector_from_json(int d, const Json& j);

Json to_json(const Subspace& s);  // {d, n, rows}
Subspace subspace_from_json(const Json& j);

Json to_json(const StabilizerLabel& l);
StabilizerLabel label_from_json(const Json& j);

Json to_json(const ZModMatrix& m);

Json to_json(const CycNumber& x);  // {m, coeffs: [[num, den], ...]}
CycNumber cyc_from_json(const Json& j);

Json to_json(const OpMatrix& a);  // {dim, conductor, entries: row-major coefficient arrays}
OpMatrix op_matrix_from_json(const Json& j);

/// One row per line, entries "p/q".
std::string gram_csv(const GramMatrix& g);
Json gram_multiset_json(const GramMatrix& g);

Json to_json(const PermGroup& g);  // {degree, base, strong_generators, order}
Json to_json(const ExtCliffordElement& e);  // {mu, a, S, alpha}

Json to_json(const DesignReport& r);
Json to_json(const ConditionReport& r);
/// Timing is left out unless asked for, so reports stay byte-identical across runs.
Json to_json(const SymmetryReport& r, bool with_timing = false);
Json to_json(const DirectSumReport& r);
Json to_json(const FacetReport& r);
Json to_json(const Membership& m);
Json to_json(const SfReport& r);

}  // namespace stabsym
