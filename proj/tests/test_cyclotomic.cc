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
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "stabsym/cyclotomic.h"

using namespace stabsym;

namespace {

CycNumber random_cyc(std::mt19937_64& rng, int m) {
  CycNumber x(m);
  for (int k = 0; k < m; ++k)
    if (rng() % 3 == 0)
      x += CycNumber::zeta(m, k) * BigRational(static_cast<int64_t>(rng() % 11) - 5,
                                               1 + static_cast<int64_t>(rng() % 4));
  return x;
}

}  // namespace

TEST_CASE("field identities in Q[zeta_m]") {
  std::mt19937_64 rng(3);
  for (int m : {8, 12, 20, 28}) {
    for (int t = 0; t < 30; ++t) {
      CycNumber a = random_cyc(rng, m), b = random_cyc(rng, m), c = random_cyc(rng, m);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      if (!a.is_zero()) CHECK(a * a.inverse() == CycNumber::one(m));
      CHECK((a * b).conj() == a.conj() * b.conj());
      for (int u = 1; u < m; ++u) {
        if (std::gcd(u, m) != 1) continue;
        CHECK((a * b).galois(u) == a.galois(u) * b.galois(u));
      }
      const auto z = a.embed() * b.embed();
      const auto w = (a * b).embed();
      CHECK(std::abs(z - w) < 1e-9);
    }
    CHECK(CycNumber::zeta(m, m) == CycNumber::one(m));
    CHECK(CycNumber::zeta(m, 1).pow(m / 2) == CycNumber(m, BigRational(-1)));
  }
}

TEST_CASE("euler phi and square roots") {
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(20) == 8);
  for (int d : {2, 3, 5, 7}) {
    const int m = conductor_for(d);
    CycNumber s = sqrt_d(d, m);
    CHECK(s * s == CycNumber(m, BigRational(d)));
    CHECK(s.embed().real() > 0);
  }
  CHECK_THROWS_AS(CycNumber::one(12) / CycNumber(12), DivisionByZero);
}

TEST_CASE("rational detection and printing") {
  CycNumber x = CycNumber::zeta(12, 1) + CycNumber::zeta(12, 11);  // 2 cos(pi/6) = sqrt 3
  CHECK_FALSE(x.is_rational());
  CHECK((x * x).is_rational());
  CHECK((x * x).rational() == 3);
  CHECK(to_string(BigRational(-3, 6)) == "-1/2");
  CHECK(to_string(BigRational(4)) == "4");
}
