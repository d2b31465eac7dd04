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

#include <optional>
#include <ostream>
#include <vector>

#include "stabsym/phase_space.h"
#include "stabsym/zmod.h"

namespace stabsym {

/// Matrix of the symplectic form: [a,b] = a^T J b.
ZModMatrix symplectic_gram(int d, int n);

/// The unit alpha with [Ra, Rb] = alpha [a,b], if R is a similitude.
std::optional<int> similitude_multiplier(const ZModMatrix& r);
bool is_symplectic(const ZModMatrix& s);

/// diag(1_n, alpha 1_n).
ZModMatrix k_alpha(int d, int n, int alpha);

PhaseVector apply(const ZModMatrix& m, const PhaseVector& x);

/// x -> S K_alpha x + a.
struct AffineSimilitude {
  PhaseVector a;
  ZModMatrix s;
  int alpha = 1;

  static AffineSimilitude identity(int d, int n);
  static AffineSimilitude translation(const PhaseVector& a);
  static AffineSimilitude linear(const ZModMatrix& s, int alpha = 1);

  int modulus() const { return a.modulus(); }
  int n() const { return a.n(); }
  ZModMatrix linear_part() const;  // S K_alpha

  bool operator==(const AffineSimilitude&) const = default;
};

PhaseVector apply_affine_similitude(const AffineSimilitude& t, const PhaseVector& x);

/// (b,R,beta)(a,S,alpha) = (R K_beta a + b, R K_beta S K_beta^{-1}, beta alpha).
AffineSimilitude agsp_compose(const AffineSimilitude& t, const AffineSimilitude& s);
AffineSimilitude agsp_inverse(const AffineSimilitude& t);

/// Image of the coset L + rep under t.
StabilizerLabel apply_affine_similitude(const AffineSimilitude& t, const StabilizerLabel& label);

/// Elementary symplectic generators; each has a canonical metaplectic unitary.
struct SpGate {
  enum class Kind {
    kFourier,   // x_i -> -z_i, z_i -> x_i
    kShear,     // z_i += c x_i
    kMultiply,  // x_i -> c x_i, z_i -> c^{-1} z_i
    kCSum,      // x_j += c x_i, z_i -= c z_j
    kCZ,        // z_i += c x_j, z_j += c x_i
    kXShear,    // x_i += c z_i
    kXCZ,       // x_i += c z_j, x_j += c z_i
  };
  Kind kind;
  int i = 0;
  int j = 0;
  int c = 1;

  bool operator==(const SpGate&) const = default;
};

std::ostream& operator<<(std::ostream& os, const SpGate& g);

ZModMatrix gate_matrix(const SpGate& g, int d, int n);

/// Gates g_1..g_m with S_{g_m} ... S_{g_1} S = 1.
std::vector<SpGate> symplectic_reduction_word(const ZModMatrix& s);

/// Generating set of Sp(2n, d).
std::vector<ZModMatrix> sp_generators(int d, int n);

/// d^{n^2} prod_k (d^{2k} - 1), the textbook formula (used only as a cross-check).
unsigned long long sp_order_formula(int d, int n);

ZModMatrix random_symplectic(int d, int n, uint64_t seed);

}  // namespace stabsym
