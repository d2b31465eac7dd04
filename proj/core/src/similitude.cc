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

#include "stabsym/similitude.h"

#include <random>
#include <stdexcept>

namespace stabsym {

ZModMatrix symplectic_gram(int d, int n) {
  ZModMatrix j(2 * n, 2 * n, d);
  for (int i = 0; i < n; ++i) {
    j.set(i, n + i, 1);
    j.set(n + i, i, -1);
  }
  return j;
}

std::optional<int> similitude_multiplier(const ZModMatrix& r) {
  const int d = r.modulus();
  if (r.rows() != r.cols() || r.rows() % 2) return std::nullopt;
  const int n = r.rows() / 2;
  ZModMatrix j = symplectic_gram(d, n);
  ZModMatrix g = r.transpose() * j * r;
  const int alpha = g(0, n);
  if (alpha == 0) return std::nullopt;
  for (int a = 0; a < 2 * n; ++a)
    for (int b = 0; b < 2 * n; ++b)
      if (g(a, b) != mod(int64_t{alpha} * j(a, b), d)) return std::nullopt;
  return alpha;
}

bool is_symplectic(const ZModMatrix& s) {
  auto m = similitude_multiplier(s);
  return m && *m == 1;
}

ZModMatrix k_alpha(int d, int n, int alpha) {
  ZModMatrix k = ZModMatrix::identity(2 * n, d);
  for (int i = 0; i < n; ++i) k.set(n + i, n + i, alpha);
  return k;
}

PhaseVector apply(const ZModMatrix& m, const PhaseVector& x) {
  if (m.cols() != x.size()) throw DimensionMismatch("matrix/vector size mismatch");
  return PhaseVector(x.modulus(), m * x.coords());
}

AffineSimilitude AffineSimilitude::identity(int d, int n) {
  return {PhaseVector(d, n), ZModMatrix::identity(2 * n, d), 1};
}

AffineSimilitude AffineSimilitude::translation(const PhaseVector& a) {
  return {a, ZModMatrix::identity(a.size(), a.modulus()), 1};
}

AffineSimilitude AffineSimilitude::linear(const ZModMatrix& s, int alpha) {
  if (!is_symplectic(s)) throw Error("matrix is not symplectic");
  return {PhaseVector(s.modulus(), s.rows() / 2), s, mod(alpha, s.modulus())};
}

ZModMatrix AffineSimilitude::linear_part() const { return s * k_alpha(modulus(), n(), alpha); }

PhaseVector apply_affine_similitude(const AffineSimilitude& t, const PhaseVector& x) {
  return apply(t.linear_part(), x) + t.a;
}

AffineSimilitude agsp_compose(const AffineSimilitude& t, const AffineSimilitude& s) {
  const int d = t.modulus(), n = t.n();
  ZModMatrix rk = t.linear_part();
  ZModMatrix kinv = k_alpha(d, n, inv_mod(t.alpha, d));
  return {apply(rk, s.a) + t.a, rk * s.s * kinv, mod(int64_t{t.alpha} * s.alpha, d)};
}

AffineSimilitude agsp_inverse(const AffineSimilitude& t) {
  // x = S K a' ... solve via the linear part.
  const int d = t.modulus(), n = t.n();
  const int beta = inv_mod(t.alpha, d);
  ZModMatrix rinv = invert(t.linear_part());
  // Inverse map y -> R^{-1}(y - a) = K_beta^{-1}... expressed as (S', beta) with S' K_beta = R^{-1}.
  ZModMatrix s = rinv * k_alpha(d, n, t.alpha);
  return {-apply(rinv, t.a), s, beta};
}

StabilizerLabel apply_affine_similitude(const AffineSimilitude& t, const StabilizerLabel& label) {
  Subspace img = label.lagrangian.subspace().image(t.linear_part());
  return StabilizerLabel(LagrangianSubspace(std::move(img)), apply_affine_similitude(t, label.rep));
}

// ---------------------------------------------------------------------------

std::ostream& operator<<(std::ostream& os, const SpGate& g) {
  static const char* names[] = {"F", "D", "M", "CSUM", "CZ", "XD", "XCZ"};
  os << names[static_cast<int>(g.kind)] << '(' << g.i;
  if (g.kind == SpGate::Kind::kCSum || g.kind == SpGate::Kind::kCZ || g.kind == SpGate::Kind::kXCZ)
    os << ',' << g.j;
  return os << ';' << g.c << ')';
}

ZModMatrix gate_matrix(const SpGate& g, int d, int n) {
  ZModMatrix m = ZModMatrix::identity(2 * n, d);
  const int i = g.i, j = g.j;
  const int64_t c = g.c;
  auto X = [](int k) { return k; };
  auto Z = [n](int k) { return n + k; };
  switch (g.kind) {
    case SpGate::Kind::kFourier:
      m.set(X(i), X(i), 0);
      m.set(Z(i), Z(i), 0);
      m.set(X(i), Z(i), -1);
      m.set(Z(i), X(i), 1);
      break;
    case SpGate::Kind::kShear:
      m.set(Z(i), X(i), c);
      break;
    case SpGate::Kind::kMultiply:
      if (mod(c, d) == 0) throw DivisionByZero("multiplier gate needs a unit");
      m.set(X(i), X(i), c);
      m.set(Z(i), Z(i), inv_mod(mod(c, d), d));
      break;
    case SpGate::Kind::kCSum:
      m.set(X(j), X(i), c);
      m.set(Z(i), Z(j), -c);
      break;
    case SpGate::Kind::kCZ:
      m.set(Z(i), X(j), c);
      m.set(Z(j), X(i), c);
      break;
    case SpGate::Kind::kXShear:
      m.set(X(i), Z(i), c);
      break;
    case SpGate::Kind::kXCZ:
      m.set(X(i), Z(j), c);
      m.set(X(j), Z(i), c);
      break;
  }
  return m;
}

std::vector<SpGate> symplectic_reduction_word(const ZModMatrix& s) {
  if (!is_symplectic(s)) throw Error("symplectic_reduction_word: matrix is not symplectic");
  const int d = s.modulus(), n = s.rows() / 2;
  using K = SpGate::Kind;
  ZModMatrix cur = s;
  std::vector<SpGate> word;
  auto push = [&](SpGate g) {
    if (g.kind != K::kFourier && g.kind != K::kMultiply && mod(g.c, d) == 0) return;
    if (g.kind == K::kMultiply && mod(g.c, d) == 1) return;
    g.c = mod(g.c, d);
    cur = gate_matrix(g, d, n) * cur;
    word.push_back(g);
  };
  for (int k = 0; k < n; ++k) {
    auto col_x = [&](int r) { return cur(r, k); };
    auto col_z = [&](int r) { return cur(r, n + k); };
    int j0 = -1;
    for (int j = k; j < n && j0 < 0; ++j)
      if (col_x(j) != 0) j0 = j;
    if (j0 < 0) {
      for (int j = k; j < n && j0 < 0; ++j)
        if (col_x(n + j) != 0) j0 = j;
      if (j0 < 0) throw std::logic_error("symplectic column vanishes on remaining qudits");
      push({K::kFourier, j0, 0, 1});
    }
    if (col_x(k) == 0) push({K::kCSum, j0, k, 1});
    push({K::kMultiply, k, 0, inv_mod(col_x(k), d)});
    for (int j = k + 1; j < n; ++j) push({K::kCSum, k, j, -col_x(j)});
    for (int j = k + 1; j < n; ++j) push({K::kCZ, k, j, -col_x(n + j)});
    push({K::kShear, k, 0, -col_x(n + k)});
    for (int j = k + 1; j < n; ++j) push({K::kCSum, j, k, col_z(n + j)});
    push({K::kXShear, k, 0, -col_z(k)});
    for (int j = k + 1; j < n; ++j) push({K::kXCZ, k, j, -col_z(j)});
  }
  if (cur != ZModMatrix::identity(2 * n, d))
    throw std::logic_error("symplectic reduction did not reach the identity");
  return word;
}

std::vector<ZModMatrix> sp_generators(int d, int n) {
  std::vector<ZModMatrix> gens;
  using K = SpGate::Kind;
  for (int i = 0; i < n; ++i) {
    gens.push_back(gate_matrix({K::kFourier, i, 0, 1}, d, n));
    gens.push_back(gate_matrix({K::kShear, i, 0, 1}, d, n));
  }
  for (int i = 0; i + 1 < n; ++i) {
    gens.push_back(gate_matrix({K::kCSum, i, i + 1, 1}, d, n));
    gens.push_back(gate_matrix({K::kCSum, i + 1, i, 1}, d, n));
  }
  return gens;
}

unsigned long long sp_order_formula(int d, int n) {
  unsigned long long order = 1, dk = 1;
  for (int i = 0; i < n * n; ++i) order *= d;
  for (int k = 1; k <= n; ++k) {
    dk *= static_cast<unsigned long long>(d) * d;
    order *= dk - 1;
  }
  return order;
}

ZModMatrix random_symplectic(int d, int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ZModMatrix> gens = sp_generators(d, n);
  ZModMatrix s = ZModMatrix::identity(2 * n, d);
  std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
  for (int step = 0; step < 40 * n; ++step) s = gens[pick(rng)] * s;
  return s;
}

}  // namespace stabsym
