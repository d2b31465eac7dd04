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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stabsym/automorphism.h"
#include "stabsym/clifford.h"
#include "stabsym/operators.h"
#include "stabsym/perm_group.h"
#include "stabsym/qubit.h"

namespace stabsym {

enum class Variant { kWreath, kExtendedClifford, kAgsp, kRealClifford };

std::string to_string(Variant v);
std::optional<Variant> parse_variant(const std::string& s);
/// The case of the main classification that applies to (d, n).
Variant default_variant(int d, int n);

/// Ordered state set for a variant: labels (for stabilizer states) and matrices.
struct StateSet {
  int d = 0;
  int n = 0;
  std::vector<StabilizerLabel> labels;  // empty for rebits
  std::vector<OpMatrix> projectors;     // filled when needed

  size_t size() const { return labels.empty() ? projectors.size() : labels.size(); }
  GramMatrix gram() const;
};

StateSet stabilizer_states(int d, int n, bool with_matrices);
StateSet rebit_states(int n);

struct NamedPerm {
  std::string name;
  Perm perm;
};

struct PredictedGroup {
  std::string description;
  std::vector<NamedPerm> generators;
  PermGroup group;
};

/// Permutation induced by a map of states, found by exact matrix lookup.
Perm induced_permutation(const std::vector<OpMatrix>& states,
                         const std::function<OpMatrix(const OpMatrix&)>& f);
/// Permutation induced by a label map.
Perm induced_permutation(const std::vector<StabilizerLabel>& labels,
                         const std::function<StabilizerLabel(const StabilizerLabel&)>& f);

PredictedGroup predicted_group(const StateSet& states, Variant variant);

struct SymmetryReport {
  int d = 0;
  int n = 0;
  Variant variant = Variant::kWreath;
  size_t states = 0;
  BigInt computed_order;
  BigInt schreier_sims_order;
  BigInt predicted_order;
  bool certified = false;
  bool predicted_preserve_gram = false;
  bool predicted_in_computed = false;
  bool computed_in_predicted = false;
  bool basis_partition_preserved = true;  // n = 1 only
  bool match = false;
  std::string predicted_description;
  std::optional<Perm> witness;
  AutomorphismResult automorphisms;
};

SymmetryReport verify_symmetry_group(int d, int n, Variant variant, double budget_seconds = -1);

/// Order of Sp(2n, d) certified by its action on nonzero phase-space vectors.
BigInt certified_sp_order(int d, int n);

struct AgspFactors {
  BigInt translations;   // on stabilizer labels
  BigInt symplectic;     // on nonzero vectors
  BigInt similitudes;    // <K_alpha> on labels
  BigInt product;
};
AgspFactors certify_agsp_factors(int d, int n);

/// [sigma; g_1..g_{d+1}] with p(i, j) = (sigma(i), g_i(j)) on (line, state-in-line) pairs.
struct WreathCoordinates {
  Perm sigma;
  std::vector<Perm> inner;
  bool operator==(const WreathCoordinates&) const = default;
};

/// n = 1 only. Throws NotBasisPreserving when p mixes lines.
WreathCoordinates wreath_decompose(const Perm& p, int d);
Perm wreath_compose(const WreathCoordinates& w, int d);
bool preserves_basis_partition(const Perm& p, int d);

/// One row of the qubit table comparing extended Clifford generators with S_2 wr S_3 coordinates.
struct TableRow {
  std::string generator;
  std::string coordinates;  // e.g. "[t_XZ; e, t, e]" with blocks ordered X, Y, Z
};
std::vector<TableRow> qubit_wreath_table();
std::vector<TableRow> qubit_wreath_table_expected();

struct SfReport {
  PhaseVector b;
  size_t states = 0;
  bool pairwise_positive = false;
  BigRational constant;  // C in sum = C (1 + A(b))
  bool exact = false;
};
SfReport verify_sf_machinery(int d, int n, const PhaseVector& b);

}  // namespace stabsym
