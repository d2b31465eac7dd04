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
#include <algorithm>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "stabsym/serialize.h"

using namespace stabsym;

#ifndef STABSYM_GOLDEN_DIR
#error "STABSYM_GOLDEN_DIR must be defined"
#endif

TEST_CASE("CycNumber and OpMatrix JSON round-trips") {
  CycNumber x = CycNumber::zeta(12, 5) * BigRational(-7, 3) + CycNumber(12, BigRational(1, 2));
  Json j = to_json(x);
  CHECK(j["m"] == 12);
  CHECK(j["coeffs"].size() == 4);
  CHECK(cyc_from_json(j) == x);
  CycNumber big(8, BigRational(BigInt("123456789012345678901234567890"), 7));
  CHECK(cyc_from_json(to_json(big)) == big);
  for (const auto& l : enumerate_stabilizer_labels(3, 1)) {
    OpMatrix p = projector(l);
    CHECK(op_matrix_from_json(Json::parse(to_json(p).dump())) == p);
  }
}

TEST_CASE("subspace and label round-trips") {
  for (const auto& l : enumerate_stabilizer_labels(3, 2)) {
    Json j = to_json(l);
    CHECK(label_from_json(Json::parse(j.dump())) == l);
  }
  Subspace zero(5, 2);
  CHECK(subspace_from_json(to_json(zero)) == zero);
}

TEST_CASE("Gram CSV and multiset golden at (3,2)") {
  GramMatrix g = build_gram(enumerate_stabilizer_labels(3, 1));
  std::string csv = gram_csv(g);
  CHECK(csv.substr(0, csv.find(',')) == "1");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 12);

  GramMatrix big = build_gram(enumerate_stabilizer_labels(3, 2));
  std::ifstream in(std::string(STABSYM_GOLDEN_DIR) + "/gram_multiset_d3_n2.json");
  REQUIRE(in.good());
  Json golden = Json::parse(in);
  CHECK(gram_multiset_json(big) == golden);
}

TEST_CASE("permutation group JSON") {
  PermGroup g(4, {{1, 2, 3, 0}});
  Json j = to_json(g);
  CHECK(j["degree"] == 4);
  CHECK(j["order"] == 4);
  CHECK(j["base"].size() >= 1);
}
