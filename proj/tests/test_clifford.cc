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
#include "doctest.h"
#include "stabsym/clifford.h"
#include "stabsym/metaplectic.h"
#include "stabsym/symmetry.h"

using namespace stabsym;

TEST_CASE("symplectic generators and reduction words") {
  for (auto [d, n] : {std::pair{3, 1}, std::pair{5, 1}, std::pair{3, 2}, std::pair{5, 2}}) {
    for (const auto& g : sp_generators(d, n)) CHECK(is_symplectic(g));
    for (uint64_t seed = 1; seed <= 20; ++seed) {
      ZModMatrix s = random_symplectic(d, n, seed);
      REQUIRE(is_symplectic(s));
      // The word reduces S to the identity: applying the gates in order to S gives 1.
      ZModMatrix acc = s;
      for (const auto& g : symplectic_reduction_word(s)) acc = gate_matrix(g, d, n) * acc;
      CHECK(acc == ZModMatrix::identity(2 * n, d));
    }
  }
  CHECK(sp_order_formula(3, 2) == 51840);
  CHECK(certified_sp_order(3, 1) == 24);
  CHECK(certified_sp_order(5, 1) == 120);
}

TEST_CASE("metaplectic unitaries conjugate Weyl operators and compose") {
  for (auto [d, n] : {std::pair{3, 1}, std::pair{5, 1}, std::pair{3, 2}}) {
    const int dim = hilbert_dim(d, n), m = conductor_for(d);
    for (uint64_t seed = 1; seed <= 4; ++seed) {
      ZModMatrix s = random_symplectic(d, n, seed), t = random_symplectic(d, n, seed + 100);
      OpMatrix us = metaplectic(s), ut = metaplectic(t);
      CHECK(us * us.adjoint() == OpMatrix::identity(dim, m));
      CHECK(us * ut == metaplectic(s * t));
      for (size_t k = 0; k < static_cast<size_t>(dim) * dim; k += 5) {
        PhaseVector b = PhaseVector::from_index(d, n, k);
        CHECK(us * weyl(b) * us.adjoint() == weyl(apply(s, b)));
      }
    }
  }
}

TEST_CASE("AGSp group laws") {
  for (int d : {3, 5}) {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
      auto a = random_agsp(d, 2, seed), b = random_agsp(d, 2, seed + 50), c = random_agsp(d, 2, seed + 99);
      CHECK(agsp_compose(agsp_compose(a, b), c) == agsp_compose(a, agsp_compose(b, c)));
      CHECK(agsp_compose(a, agsp_inverse(a)) == AffineSimilitude::identity(d, 2));
      CHECK(similitude_multiplier(a.linear_part()) == a.alpha);
      PhaseVector x = PhaseVector::from_index(d, 2, seed * 7 % 81);
      CHECK(apply_affine_similitude(agsp_compose(a, b), x) ==
            apply_affine_similitude(a, apply_affine_similitude(b, x)));
    }
  }
}

TEST_CASE("extended Clifford elements act on phase-point operators affinely") {
  for (int d : {3, 5}) {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
      auto g = random_ext_element(d, 1, seed);
      auto u = ext_element_matrix(g);
      auto t = to_agsp(g);
      for (size_t k = 0; k < static_cast<size_t>(d * d); ++k) {
        PhaseVector x = PhaseVector::from_index(d, 1, k);
        CHECK(u.conjugate(phase_point(x)) == phase_point(apply_affine_similitude(t, x)));
      }
      auto h = random_ext_element(d, 1, seed + 1000);
      CHECK(to_agsp(ext_compose(h, g)) == agsp_compose(to_agsp(h), t));
    }
  }
}
