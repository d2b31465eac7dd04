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

#include "stabsym/clifford.h"

#include <random>

namespace stabsym {

ExtCliffordElement ExtCliffordElement::identity(int d, int n) {
  return {0, PhaseVector(d, n), ZModMatrix::identity(2 * n, d), 1};
}

OpMatrix ExtOperator::conjugate(const OpMatrix& m) const {
  return v * m.galois(galois_u) * v.adjoint();
}

ExtOperator ExtOperator::operator*(const ExtOperator& o) const {
  ExtOperator r;
  r.v = v * o.v.galois(galois_u);
  r.d = d;
  r.alpha = mod(int64_t{alpha} * o.alpha, d);
  r.galois_u = static_cast<int>(int64_t{galois_u} * o.galois_u % v.conductor());
  return r;
}

ExtOperator ext_element_matrix(const ExtCliffordElement& e) {
  const int d = e.modulus();
  if (d == 2) throw OddOnly("extended Clifford elements need odd d");
  const int m = conductor_for(d);
  ExtOperator op;
  op.v = weyl(-e.a) * metaplectic(e.s) * CycNumber::zeta(m, int64_t{m / d} * e.mu);
  op.d = d;
  op.alpha = mod(e.alpha, d);
  op.galois_u = galois_exponent(e.alpha, d, m);
  return op;
}

ExtCliffordElement ext_compose(const ExtCliffordElement& h, const ExtCliffordElement& g) {
  const int d = h.modulus(), n = h.n();
  const int half = (d + 1) / 2;
  ZModMatrix rk = h.s * k_alpha(d, n, h.alpha);
  PhaseVector rka = apply(rk, g.a);
  const int64_t phase =
      h.mu + int64_t{h.alpha} * g.mu - int64_t{half} * symplectic_form(h.a, rka);
  return {mod(phase, d), rka + h.a, rk * g.s * k_alpha(d, n, inv_mod(h.alpha, d)),
          mod(int64_t{h.alpha} * g.alpha, d)};
}

AffineSimilitude to_agsp(const ExtCliffordElement& e) { return {e.a, e.s, e.alpha}; }

ExtCliffordElement random_ext_element(int d, int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(0, d - 1), unit(1, d - 1);
  ExtCliffordElement e = ExtCliffordElement::identity(d, n);
  e.mu = coord(rng);
  for (int i = 0; i < 2 * n; ++i) e.a.set(i, coord(rng));
  e.s = random_symplectic(d, n, rng());
  e.alpha = unit(rng);
  return e;
}

AffineSimilitude random_agsp(int d, int n, uint64_t seed) {
  return to_agsp(random_ext_element(d, n, seed));
}

}  // namespace stabsym
