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
#include <random>

#include "doctest.h"
#include "stabsym/automorphism.h"
#include "stabsym/perm_group.h"
#include "stabsym/symmetry.h"

using namespace stabsym;

TEST_CASE("Schreier-Sims orders of symmetric and cyclic groups") {
  for (int n : {3, 5, 8, 10}) {
    Perm cycle(n), swap = identity_perm(n);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    std::swap(swap[0], swap[1]);
    PermGroup g(n, {cycle, swap});
    BigInt fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(g.order() == fact);
    PermGroup c(n, {cycle});
    CHECK(c.order() == n);
    CHECK_FALSE(c.contains(swap));
    CHECK(c.contains(compose(cycle, cycle)));
    CHECK(g.orbit(0).size() == static_cast<size_t>(n));
  }
  Perm p{2, 0, 1};
  CHECK(compose(p, inverse(p)) == identity_perm(3));
  CHECK(is_permutation(p));
  CHECK_FALSE(is_permutation({0, 0, 1}));
}

TEST_CASE("random elements stay in the group") {
  PermGroup g(6, {{1, 0, 2, 3, 4, 5}, {0, 2, 3, 1, 4, 5}});
  CHECK(g.order() == 24);
  for (uint64_t s = 0; s < 20; ++s) {
    Perm r = g.random_element(s);
    CHECK(g.contains(r));
    CHECK(r[4] == 4);
  }
}

TEST_CASE("graph automorphisms of small graphs") {
  // Petersen graph: 120 automorphisms.
  GramMatrix gram;
  gram.size = 10;
  gram.values.assign(100, BigRational(0));
  auto edge = [&](int a, int b) {
    gram.values[a * 10 + b] = 1;
    gram.values[b * 10 + a] = 1;
  };
  for (int i = 0; i < 5; ++i) {
    edge(i, (i + 1) % 5);
    edge(5 + i, 5 + (i + 2) % 5);
    edge(i, 5 + i);
  }
  auto r = gram_automorphisms(gram);
  CHECK(r.certified);
  CHECK(r.order == 120);
  ColoredGraph g = ColoredGraph::from_gram(gram);
  for (const auto& p : r.generators) CHECK(g.is_automorphism(p));
  CHECK(PermGroup(10, r.generators).order() == 120);
}

TEST_CASE("wreath coordinates round-trip") {
  for (int d : {2, 3}) {
    auto rep = verify_symmetry_group(d, 1, Variant::kWreath);
    PermGroup grp(d * (d + 1), rep.automorphisms.generators);
    for (uint64_t s = 0; s < 10; ++s) {
      Perm p = grp.random_element(s);
      REQUIRE(preserves_basis_partition(p, d));
      CHECK(wreath_compose(wreath_decompose(p, d), d) == p);
    }
  }
  Perm mix = identity_perm(6);
  std::swap(mix[0], mix[2]);  // moves a state across lines
  CHECK_THROWS_AS(wreath_decompose(mix, 2), NotBasisPreserving);
}

TEST_CASE("qubit table matches its stated rows") {
  auto got = qubit_wreath_table();
  auto want = qubit_wreath_table_expected();
  REQUIRE(got.size() == want.size());
  for (size_t i = 0; i < got.size(); ++i) CHECK(got[i].coordinates == want[i].coordinates);
}

TEST_CASE("variant names round-trip") {
  for (Variant v : {Variant::kWreath, Variant::kExtendedClifford, Variant::kAgsp, Variant::kRealClifford})
    CHECK(parse_variant(to_string(v)) == v);
  CHECK_FALSE(parse_variant("nope").has_value());
  CHECK(default_variant(3, 2) == Variant::kAgsp);
  CHECK(default_variant(2, 2) == Variant::kExtendedClifford);
}
