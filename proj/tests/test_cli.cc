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
#include <stdexcept>

#include "commands.h"
#include "doctest.h"

using namespace stabsym;

TEST_CASE("reports are deterministic and echo the seed") {
  cli::RunConfig c;
  c.d = 5;
  c.n = 1;
  c.seed = 7;
  c.samples = 20;
  auto a = cli::run_verify_clifford(c), b = cli::run_verify_clifford(c);
  CHECK(a.report.dump() == b.report.dump());
  CHECK(a.report["seed"] == 7);
  CHECK(a.code == cli::kPass);
  c.seed = 8;
  CHECK(cli::run_verify_clifford(c).report["seed"] == 8);
}

TEST_CASE("autgroup at (3,1)") {
  cli::RunConfig c;
  auto o = cli::run_autgroup(c);
  CHECK(o.report["computed_order"] == 31104);
  CHECK(o.report["predicted"] == "S_3 wr S_4");
  CHECK(o.report["match"] == true);
  CHECK(o.report.find("seconds") == o.report.end());
}

TEST_CASE("facets at d = 3") {
  cli::RunConfig c;
  auto o = cli::run_facets(c);
  CHECK(o.report["facet_count"] == 81);
  CHECK(o.report["supporting"] == true);
  CHECK(o.report["vertices_per_facet"] == 8);
  CHECK(o.code == cli::kPass);
}

TEST_CASE("enumerate and gram") {
  cli::RunConfig c;
  c.d = 2;
  c.n = 2;
  auto e = cli::run_enumerate(c);
  CHECK(e.report["lagrangian_count"] == 15);
  CHECK(e.report["state_count"] == 60);
  c.format = "csv";
  auto g = cli::run_gram(c);
  CHECK(std::count(g.csv.begin(), g.csv.end(), '\n') == 60);
  c.d = 3;
  c.n = 1;
  c.check = true;
  c.format = "json";
  CHECK(cli::run_gram(c).report["brute_force_agrees"] == true);
}

TEST_CASE("unknown variants are usage errors") {
  cli::RunConfig c;
  c.variant = "nope";
  CHECK_THROWS_AS(cli::run_autgroup(c), std::invalid_argument);
}
