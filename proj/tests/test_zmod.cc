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
#include "stabsym/zmod.h"

using namespace stabsym;

TEST_CASE("prime field helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  for (int d : {3, 5, 7, 11, 13}) {
    for (int a = 1; a < d; ++a) {
      CHECK(mod(int64_t{a} * inv_mod(a, d), d) == 1);
      // Euler's criterion.
      const int e = pow_mod(a, (d - 1) / 2, d);
      CHECK(legendre(a, d) == (e == 1 ? 1 : -1));
    }
    const int g = primitive_root(d);
    std::set<int> powers;
    for (int k = 0; k < d - 1; ++k) powers.insert(pow_mod(g, k, d));
    CHECK(powers.size() == static_cast<size_t>(d - 1));
  }
  CHECK(mod(-7, 5) == 3);
  CHECK_THROWS_AS(ZMod(1, 3) / ZMod(0, 3), DivisionByZero);
}

TEST_CASE("random matrices: inverse, nullspace and solve") {
  std::mt19937_64 rng(11);
  for (int d : {2, 3, 5}) {
    for (int trial = 0; trial < 40; ++trial) {
      const int r = 1 + static_cast<int>(rng() % 4), c = 1 + static_cast<int>(rng() % 5);
      ZModMatrix m(r, c, d);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.set(i, j, static_cast<int64_t>(rng() % d));
      const int rk = rank(m);
      ZModMatrix ns = nullspace(m);
      CHECK(ns.rows() == c - rk);
      for (int k = 0; k < ns.rows(); ++k) {
        auto prod = m * ns.row(k);
        for (int v : prod) CHECK(v == 0);
      }
      std::vector<int> x(c);
      for (auto& v : x) v = static_cast<int>(rng() % d);
      auto b = m * std::span<const int>(x);
      auto sol = solve(m, b);
      REQUIRE(sol.has_value());
      CHECK(m * std::span<const int>(*sol) == b);
      if (r == c && rk == r) CHECK(m * invert(m) == ZModMatrix::identity(r, d));
      if (rk < r && r == c) CHECK_THROWS_AS(invert(m), SingularMatrix);
    }
  }
}

TEST_CASE("rref is idempotent and keeps the row space") {
  ZModMatrix m(5, {{1, 2, 3, 4}, {2, 4, 1, 3}, {3, 1, 4, 2}});
  auto r = rref(m);
  CHECK(rref(r.matrix).matrix == r.matrix);
  CHECK(r.rank == rank(m));
  CHECK(rank(m.vstack(r.matrix)) == r.rank);
}
