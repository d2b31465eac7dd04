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
#include <set>

#include "doctest.h"
#include "stabsym/polytope1.h"

using namespace stabsym;

TEST_CASE("shifted vertices are traceless Hermitian") {
  for (int d : {3, 5}) {
    auto v = shifted_vertices(d);
    CHECK(v.size() == static_cast<size_t>(d * (d + 1)));
    for (const auto& x : v) {
      CHECK(x.matrix.is_hermitian());
      CHECK(x.matrix.trace().is_zero());
    }
  }
  CHECK_THROWS_AS(shifted_vertices(2), OddOnly);
}

TEST_CASE("simplex blocks are self-dual") {
  // Within a line, the facet normal opposite vertex g is proportional to -pi_L^g:
  // <pi^h, -pi^g> = 1/d > 0 for h != g and -(d-1)/d < 0 at h = g.
  const int d = 3;
  auto v = shifted_vertices(d);
  for (int line = 0; line <= d; ++line)
    for (int g = 0; g < d; ++g)
      for (int h = 0; h < d; ++h) {
        const BigRational x = -trace_product(v[line * d + h].matrix, v[line * d + g].matrix).rational();
        CHECK(x == (h == g ? BigRational(-(d - 1), d) : BigRational(1, d)));
      }
}

TEST_CASE("facet family size and distinctness") {
  CHECK(facet_count(3) == 81);
  CHECK(facet_count(5) == 15625);
  auto f = facet_family(3);
  std::set<std::string> keys;
  for (const auto& x : f) {
    keys.insert(canonical_key(x.matrix));
    CHECK(x.matrix.is_hermitian());
  }
  CHECK(keys.size() == 81);
  CHECK_THROWS_AS(facet_family(5, 1000), BudgetExceeded);
}

TEST_CASE("random convex combinations of vertices are inside") {
  const int d = 3, m = conductor_for(d);
  std::vector<OpMatrix> states;
  for (const auto& l : enumerate_stabilizer_labels(d, 1)) states.push_back(projector(l));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 25; ++t) {
    OpMatrix mix(d, m);
    int64_t total = 0;
    std::vector<int64_t> w(states.size());
    for (auto& x : w) total += (x = static_cast<int64_t>(rng() % 5));
    if (total == 0) continue;
    for (size_t i = 0; i < states.size(); ++i)
      if (w[i]) mix += states[i] * BigRational(w[i], total);
    CHECK(polytope_membership(mix, d).inside);
  }
  for (const auto& s : states) {
    auto r = polytope_membership(s, d);
    CHECK(r.inside);
    CHECK_FALSE(r.interior);
  }
}

TEST_CASE("direct sum at d = 5") {
  auto r = direct_sum_check(5);
  CHECK(r.line_sums_vanish);
  CHECK(r.table_ok);
  CHECK(r.blocks_orthogonal);
}
