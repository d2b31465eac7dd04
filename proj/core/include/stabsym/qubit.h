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

#include <map>
#include <string>
#include <vector>

#include "stabsym/operators.h"

namespace stabsym {

// Single- and two-qubit gates embedded in n qubits (qubit 0 is the most significant factor).
OpMatrix qubit_h(int n, int i);
OpMatrix qubit_s(int n, int i);
OpMatrix qubit_x(int n, int i);
OpMatrix qubit_y(int n, int i);
OpMatrix qubit_z(int n, int i);
OpMatrix qubit_cz(int n, int i, int j);

struct SignedLagrangian {
  LagrangianSubspace lagrangian;
  std::map<size_t, int> eps;  // keyed by PhaseVector::index() over L \ {0}
};

/// Every (L, eps) for which the signed Weyl operators close into a group without -1.
std::vector<SignedLagrangian> enumerate_sign_functions(int n);

/// Projectors of all qubit stabilizer states in label order.
std::vector<OpMatrix> qubit_stabilizer_projectors(int n);

struct NamedGate {
  std::string name;
  OpMatrix u;
};

struct RealCliffordOrbit {
  std::vector<OpMatrix> projectors;  // BFS order from |0..0>
  std::vector<NamedGate> generators;
};

/// Orbit of |0..0><0..0| under conjugation by Z_i, H_i, CZ_ij.
RealCliffordOrbit real_clifford_orbit(int n, size_t budget = 4096);

/// Independent count: qubit stabilizer projectors whose entries are all rational.
std::vector<OpMatrix> rational_qubit_projectors(int n);

bool is_rational_matrix(const OpMatrix& a);

/// H_i, S_i, CZ_ij generating the qubit Clifford group.
std::vector<NamedGate> qubit_clifford_generators(int n);

}  // namespace stabsym
