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

#include "stabsym/metaplectic.h"
#include "stabsym/similitude.h"

namespace stabsym {

/// omega^mu T(-a) U_S C_alpha; acts on phase space as x -> S K_alpha x + a.
struct ExtCliffordElement {
  int mu = 0;
  PhaseVector a;
  ZModMatrix s;
  int alpha = 1;

  static ExtCliffordElement identity(int d, int n);
  int modulus() const { return a.modulus(); }
  int n() const { return a.n(); }

  bool operator==(const ExtCliffordElement&) const = default;
};

/// Linear part V = omega^mu T(-a) U_S plus the Galois exponent of C_alpha on Q[zeta_m].
struct ExtOperator {
  OpMatrix v;
  int d = 3;
  int alpha = 1;
  int galois_u = 1;

  /// M -> V galois(M) V^dag.
  OpMatrix conjugate(const OpMatrix& m) const;
  /// (V1, b)(V2, a) = (V1 galois_b(V2), ba).
  ExtOperator operator*(const ExtOperator& o) const;
  bool operator==(const ExtOperator& o) const { return v == o.v && alpha == o.alpha; }
};

ExtOperator ext_element_matrix(const ExtCliffordElement& e);

ExtCliffordElement ext_compose(const ExtCliffordElement& h, const ExtCliffordElement& g);

/// Forgetful map to the affine similitude (a, S, alpha).
AffineSimilitude to_agsp(const ExtCliffordElement& e);

ExtCliffordElement random_ext_element(int d, int n, uint64_t seed);
AffineSimilitude random_agsp(int d, int n, uint64_t seed);

}  // namespace stabsym
