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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.h"
#include "stabsym/errors.h"
#include "stabsym/zmod.h"

namespace {

using stabsym::cli::Outcome;
using stabsym::cli::RunConfig;

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabsym: exact stabilizer-polytope symmetries and moment checks"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string out_path, golden_dir;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--d", cfg.d, "prime local dimension")->required();
    sub->add_option("--n", cfg.n, "number of qudits")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "seed for sampled checks");
    sub->add_option("--samples", cfg.samples, "number of sampled checks")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--variant", cfg.variant, "wreath, extended_clifford, agsp or real_clifford");
    sub->add_option("--out", out_path, "write the report here instead of stdout");
    sub->add_option("--golden", golden_dir, "write, or compare against, golden files in this directory");
    sub->add_flag("--timing", cfg.timing, "include wall-clock timings (not reproducible)");
  };

  struct Entry {
    const char* name;
    const char* help;
    Outcome (*run)(const RunConfig&);
  };
  const Entry entries[] = {
      {"enumerate", "Lagrangian subspaces and stabilizer states", stabsym::cli::run_enumerate},
      {"gram", "overlap matrix and its value multiset", stabsym::cli::run_gram},
      {"autgroup", "Gram automorphisms vs the predicted group", stabsym::cli::run_autgroup},
      {"verify-design", "moment predicates and condition checks", stabsym::cli::run_verify_design},
      {"verify-clifford", "composition laws, adjoint and Galois actions, qubit table",
       stabsym::cli::run_verify_clifford},
      {"facets", "n = 1 facet family and membership", stabsym::cli::run_facets},
      {"report", "every check for one (d, n)", stabsym::cli::run_report},
  };
  std::vector<std::pair<CLI::App*, const Entry*>> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_common(sub);
    subs.emplace_back(sub, &e);
  }
  for (auto& [sub, e] : subs)
    if (std::string(e->name) == "gram") sub->add_flag("--check", cfg.check, "cross-check against brute-force traces");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : stabsym::cli::kUsage;
  }
  if (!stabsym::is_prime(cfg.d)) {
    std::cerr << "--d must be prime\n";
    return stabsym::cli::kUsage;
  }

  const Entry* chosen = nullptr;
  for (auto& [sub, e] : subs)
    if (sub->parsed()) chosen = e;

  Outcome outcome;
  try {
    outcome = chosen->run(cfg);
  } catch (const stabsym::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return stabsym::cli::kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return stabsym::cli::kUsage;
  } catch (const stabsym::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return stabsym::cli::kUsage;
  }

  const std::string text = outcome.csv.empty() ? outcome.report.dump(2) + "\n" : outcome.csv;
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream(out_path, std::ios::binary) << text;
  }

  int code = outcome.code;
  if (!golden_dir.empty()) {
    std::filesystem::create_directories(golden_dir);
    std::string name = std::string(chosen->name) + "_d" + std::to_string(cfg.d) + "_n" + std::to_string(cfg.n);
    if (!cfg.variant.empty()) name += "_" + cfg.variant;
    name += outcome.csv.empty() ? ".json" : ".csv";
    const auto path = std::filesystem::path(golden_dir) / name;
    if (std::filesystem::exists(path)) {
      if (read_file(path) != text) {
        std::cerr << "golden mismatch: " << path.string() << "\n";
        code = std::max(code, static_cast<int>(stabsym::cli::kMismatch));
      }
    } else {
      std::ofstream(path, std::ios::binary) << text;
      std::cerr << "wrote golden " << path.string() << "\n";
    }
  }
  return code;
}
