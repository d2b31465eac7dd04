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

#include "stabsym/qubit.h"

#include <deque>
#include <unordered_map>

namespace stabsym {

namespace {

constexpr int kM = 8;

CycNumber num(int64_t p, int64_t q = 1) { return CycNumber(kM, BigRational(p, q)); }

OpMatrix embed1(int n, int i, const OpMatrix& g) {
  const int dim = 1 << n;
  const int shift = n - 1 - i;
  OpMatrix out(dim, kM);
  for (int col = 0; col < dim; ++col) {
    const int b = (col >> shift) & 1;
    for (int a = 0; a < 2; ++a) {
      if (g(a, b).is_zero()) continue;
      const int row = (col & ~(1 << shift)) | (a << shift);
      out.at(row, col) = g(a, b);
    }
  }
  return out;
}

OpMatrix single(const CycNumber& a, const CycNumber& b, const CycNumber& c, const CycNumber& d) {
  OpMatrix g(2, kM);
  g.at(0, 0) = a;
  g.at(0, 1) = b;
  g.at(1, 0) = c;
  g.at(1, 1) = d;
  return g;
}

}  // namespace

OpMatrix qubit_h(int n, int i) {
  CycNumber r = sqrt_d(2, kM) * BigRational(1, 2);
  return embed1(n, i, single(r, r, r, -r));
}

OpMatrix qubit_s(int n, int i) {
  return embed1(n, i, single(num(1), num(0), num(0), CycNumber::zeta(kM, 2)));
}

OpMatrix qubit_x(int n, int i) { return embed1(n, i, single(num(0), num(1), num(1), num(0))); }

OpMatrix qubit_y(int n, int i) {
  CycNumber im = CycNumber::zeta(kM, 2);
  return embed1(n, i, single(num(0), -im, im, num(0)));
}

OpMatrix qubit_z(int n, int i) { return embed1(n, i, single(num(1), num(0), num(0), num(-1))); }

OpMatrix qubit_cz(int n, int i, int j) {
  const int dim = 1 << n;
  OpMatrix out(dim, kM);
  for (int q = 0; q < dim; ++q) {
    const bool both = ((q >> (n - 1 - i)) & 1) && ((q >> (n - 1 - j)) & 1);
    out.at(q, q) = num(both ? -1 : 1);
  }
  return out;
}

std::vector<SignedLagrangian> enumerate_sign_functions(int n) {
  std::vector<SignedLagrangian> out;
  for (const auto& l : enumerate_lagrangians(2, n)) {
    std::vector<size_t> nonzero;
    for (const auto& b : l.subspace().elements())
      if (!b.is_zero()) nonzero.push_back(b.index());
    for (size_t mask = 0; mask < (size_t{1} << nonzero.size()); ++mask) {
      std::map<size_t, int> eps;
      for (size_t k = 0; k < nonzero.size(); ++k) eps[nonzero[k]] = (mask >> k) & 1 ? -1 : 1;
      try {
        stab_projector_qubit(l, eps);
        out.push_back({l, std::move(eps)});
      } catch (const InconsistentSigns&) {
      }
    }
  }
  return out;
}

std::vector<OpMatrix> qubit_stabilizer_projectors(int n) {
  std::vector<OpMatrix> out;
  for (const auto& label : enumerate_stabilizer_labels(2, n)) out.push_back(qubit_projector(label));
  return out;
}

std::vector<NamedGate> qubit_clifford_generators(int n) {
  std::vector<NamedGate> gens;
  for (int i = 0; i < n; ++i) {
    gens.push_back({"H" + std::to_string(i), qubit_h(n, i)});
    gens.push_back({"S" + std::to_string(i), qubit_s(n, i)});
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      gens.push_back({"CZ" + std::to_string(i) + std::to_string(j), qubit_cz(n, i, j)});
  return gens;
}

RealCliffordOrbit real_clifford_orbit(int n, size_t budget) {
  RealCliffordOrbit orbit;
  for (int i = 0; i < n; ++i) {
    orbit.generators.push_back({"Z" + std::to_string(i), qubit_z(n, i)});
    orbit.generators.push_back({"H" + std::to_string(i), qubit_h(n, i)});
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      orbit.generators.push_back(
          {"CZ" + std::to_string(i) + std::to_string(j), qubit_cz(n, i, j)});

  OpMatrix start(1 << n, kM);
  start.at(0, 0) = num(1);
  std::unordered_map<std::string, size_t> seen{{canonical_key(start), 0}};
  orbit.projectors.push_back(start);
  std::deque<size_t> queue{0};
  while (!queue.empty()) {
    const OpMatrix p = orbit.projectors[queue.front()];
    queue.pop_front();
    for (const auto& g : orbit.generators) {
      OpMatrix q = g.u * p * g.u.adjoint();
      auto [it, fresh] = seen.emplace(canonical_key(q), orbit.projectors.size());
      if (!fresh) continue;
      if (orbit.projectors.size() >= budget)
        throw BudgetExceeded("real Clifford orbit exceeds " + std::to_string(budget) + " states");
      orbit.projectors.push_back(q);
      queue.push_back(it->second);
    }
  }
  return orbit;
}

bool is_rational_matrix(const OpMatrix& a) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (!a(i, j).is_rational()) return false;
  return true;
}

std::vector<OpMatrix> rational_qubit_projectors(int n) {
  std::vector<OpMatrix> out;
  for (auto& p : qubit_stabilizer_projectors(n))
    if (is_rational_matrix(p)) out.push_back(std::move(p));
  return out;
}

}  // namespace stabsym
