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
#include <optional>

#include "doctest.h"
#include "stabsym/moments.h"
#include "stabsym/qubit.h"

using namespace stabsym;

namespace {

OperatorSet stabilizers(int d, int n) {
  OperatorSet q;
  for (const auto& l : enumerate_stabilizer_labels(d, n)) q.elements.push_back(projector(l));
  return q;
}

}  // namespace

TEST_CASE("bases are orthogonal with (B_i|B_j) = D delta") {
  for (auto [d, n] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}}) {
    auto b = hermitian_basis(d, n);
    const int dim = hilbert_dim(d, n);
    CHECK(b.size() == static_cast<size_t>(dim * dim));
    for (size_t i = 0; i < b.size(); ++i) {
      CHECK(b[i].is_hermitian());
      for (size_t j = 0; j < b.size(); ++j)
        CHECK(hs_inner(b[i], b[j]) == CycNumber(b[i].conductor(), BigRational(i == j ? dim : 0)));
    }
  }
  for (int n : {1, 2, 3}) {
    auto s = symmetric_basis(n);
    const int dim = 1 << n;
    CHECK(s.size() == static_cast<size_t>(dim * (dim + 1) / 2));
    for (const auto& m : s) CHECK((m.is_real() && m == m.transpose()));
  }
}

TEST_CASE("first moment and F_2 of stabilizer states") {
  for (auto [d, n] : {std::pair{3, 1}, std::pair{2, 2}}) {
    OperatorSet q = stabilizers(d, n);
    const int dim = q.dim(), m = q.elements.front().conductor();
    CHECK(first_moment(q) == OpMatrix::identity(dim, m) * BigRational(1, dim));
    // F_2(1, 1) = 1 and F_2(T, T^dag) = 1/(D+1) for a nonidentity Weyl operator.
    OpMatrix one = OpMatrix::identity(dim, m);
    CHECK(moment_form(q, {one, one}) == CycNumber::one(m));
    OpMatrix t = weyl(PhaseVector::from_index(d, n, 1));
    CHECK(moment_form(q, {t, t.adjoint()}) == CycNumber(m, BigRational(1, dim + 1)));
  }
}

TEST_CASE("the transposed real 2-moment coefficients do not fit rebits") {
  // Rebits satisfy F_2 = K (tr A tr B + 2 tr AB); the transposed pairing
  // K (2 tr A tr B + tr AB) has no consistent K.
  for (int n : {1, 2}) {
    OperatorSet q{real_clifford_orbit(n).projectors};
    auto basis = symmetric_basis(n);
    std::optional<BigRational> k;
    bool consistent = true;
    for (size_t i = 0; i < basis.size(); ++i)
      for (size_t j = i; j < basis.size(); ++j) {
        const BigRational f = moment_form(q, {basis[i], basis[j]}).rational();
        const BigRational ti = basis[i].trace().rational(), tj = basis[j].trace().rational();
        const BigRational g = 2 * ti * tj + trace_product(basis[i], basis[j]).rational();
        if (g == 0) {
          consistent = consistent && f == 0;
        } else if (!k) {
          k = f / g;
        } else {
          consistent = consistent && f == *k * g;
        }
      }
    CHECK_FALSE(consistent);
    CHECK(is_real_4design(q, basis).pass);
  }
}

TEST_CASE("design witnesses point at a failing tuple") {
  OperatorSet q = stabilizers(3, 1);
  auto basis = hermitian_basis(3, 1);
  auto r = is_complex_3design(q, basis);
  REQUIRE_FALSE(r.pass);
  REQUIRE(r.witness.size() == 3);
  std::vector<OpMatrix> args;
  for (int i : r.witness) args.push_back(basis[i]);
  const BigRational f = moment_form(q, args).rational();
  CHECK(f != 0);
  // Qubit stabilizers are not a real design for the real-only predicate.
  CHECK_FALSE(is_real_4design(stabilizers(2, 1), symmetric_basis(1)).pass);
}

TEST_CASE("span ranks") {
  CHECK(span_rank(stabilizers(3, 1)) == 9);
  CHECK(span_rank(OperatorSet{real_clifford_orbit(2).projectors}) == 10);
}
