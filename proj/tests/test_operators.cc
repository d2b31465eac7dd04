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
#include "oracles.h"
#include "stabsym/operators.h"
#include "stabsym/qubit.h"

using namespace stabsym;

TEST_CASE("Weyl matrices agree with the monomial oracle") {
  for (auto [d, n] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 1}, std::pair{5, 1}, std::pair{3, 2}}) {
    const int64_t pts = oracle::ipow(d, 2 * n);
    for (int64_t k = 0; k < pts; k += (pts > 30 ? 7 : 1)) {
      auto p = oracle::point(d, n, k);
      CHECK(weyl(PhaseVector(d, p)) == oracle::to_matrix(oracle::weyl(p, d)));
    }
  }
}

TEST_CASE("stabilizer projectors are rank-one Hermitian idempotents") {
  for (auto [d, n] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{5, 1}, std::pair{2, 2}}) {
    const int m = conductor_for(d);
    for (const auto& l : enumerate_stabilizer_labels(d, n)) {
      OpMatrix p = projector(l);
      CHECK(p.is_hermitian());
      CHECK(p * p == p);
      CHECK(p.trace() == CycNumber::one(m));
      CHECK(matrix_rank(p) == 1);
      // Each Weyl operator in L acts on the state by a phase.
      for (const auto& b : l.lagrangian.subspace().elements()) {
        OpMatrix t = weyl(b);
        OpMatrix tp = t * p;
        CHECK(tp * t.adjoint() == p);
      }
      if (d != 2) CHECK(p == stab_projector_from_points(l));
    }
  }
}

TEST_CASE("closed-form overlaps at (3,1) and (5,1)") {
  for (int d : {3, 5}) {
    auto labels = enumerate_stabilizer_labels(d, 1);
    for (const auto& a : labels)
      for (const auto& b : labels)
        CHECK(trace_product(projector(a), projector(b)).rational() == gram_closed_form(a, b));
  }
}

TEST_CASE("odd-only constructors reject qubits") {
  auto labels = enumerate_stabilizer_labels(2, 1);
  CHECK_THROWS_AS(stab_projector(labels[0]), OddOnly);
}

TEST_CASE("inconsistent qubit signs are rejected") {
  auto ls = enumerate_lagrangians(2, 2);
  const auto& l = ls[0];
  std::map<size_t, int> eps;
  for (const auto& b : l.subspace().elements())
    if (!b.is_zero()) eps[b.index()] = 1;
  // Flip one sign only: the product of the other two no longer matches.
  eps.begin()->second = -1;
  bool threw = false;
  try {
    stab_projector_qubit(l, eps);
  } catch (const InconsistentSigns&) {
    threw = true;
  }
  auto all_plus = eps;
  for (auto& [k, v] : all_plus) v = 1;
  CHECK_NOTHROW(stab_projector_qubit(l, all_plus));
  // Either the flipped assignment is a legal sign function or it is rejected; count both.
  auto legal = enumerate_sign_functions(2);
  bool listed = false;
  for (const auto& s : legal)
    if (s.lagrangian == l && s.eps == eps) listed = true;
  CHECK(listed != threw);
  CHECK(legal.size() == 60);
}

TEST_CASE("qubit gates") {
  const int m = 8;
  OpMatrix h = qubit_h(1, 0), s = qubit_s(1, 0);
  CHECK(h * h == OpMatrix::identity(2, m));
  CHECK(s * s == qubit_z(1, 0));
  CHECK(h * qubit_x(1, 0) * h == qubit_z(1, 0));
  OpMatrix cz = qubit_cz(2, 0, 1);
  CHECK(cz * cz == OpMatrix::identity(4, m));
  CHECK(qubit_stabilizer_projectors(2).size() == 60);
  CHECK(rational_qubit_projectors(1).size() == 4);
  CHECK(real_clifford_orbit(3).projectors.size() == 240);
}
