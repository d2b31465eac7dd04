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

#pragma once

// Independent reference computations shared by the unit and acceptance tests. Nothing here
// calls into the library's phase-space or operator code; only CycNumber/OpMatrix are used as
// exact containers.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "stabsym/operators.h"

namespace oracle {

inline int conductor(int d) { return d == 2 ? 8 : 4 * d; }

inline int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Phase-space points as plain coordinate vectors (x_0..x_{n-1}, z_0..z_{n-1}).
using Point = std::vector<int>;

inline Point point(int d, int n, int64_t code) {
  Point p(2 * n);
  for (int i = 2 * n - 1; i >= 0; --i) {
    p[i] = static_cast<int>(code % d);
    code /= d;
  }
  return p;
}

inline int64_t code(const Point& p, int d) {
  int64_t c = 0;
  for (int v : p) c = c * d + v;
  return c;
}

inline int form(const Point& a, const Point& b, int d) {
  const int n = static_cast<int>(a.size()) / 2;
  int64_t s = 0;
  for (int i = 0; i < n; ++i) s += int64_t{a[i]} * b[n + i] - int64_t{b[i]} * a[n + i];
  return static_cast<int>(((s % d) + d) % d);
}

inline Point add(const Point& a, const Point& b, int d) {
  Point c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % d;
  return c;
}

// Monomial matrix: column q has a single entry zeta_m^{exp[q]} in row target[q].
struct Mono {
  int m = 1;
  std::vector<int> target;
  std::vector<int64_t> exp;
};

inline Mono weyl(const Point& a, int d) {
  const int n = static_cast<int>(a.size()) / 2;
  const int m = conductor(d);
  const int w = m / d;
  // tau = i for qubits, otherwise omega^{(d+1)/2}; x.z taken over the integers.
  const int64_t tau = d == 2 ? 2 : int64_t{w} * ((d + 1) / 2);
  int64_t xz = 0;
  for (int i = 0; i < n; ++i) xz += int64_t{a[i]} * a[n + i];
  const int dim = static_cast<int>(ipow(d, n));
  Mono out{m, std::vector<int>(dim), std::vector<int64_t>(dim)};
  for (int col = 0; col < dim; ++col) {
    int rest = col, row = 0;
    std::vector<int> q(n);
    for (int i = n - 1; i >= 0; --i) {
      q[i] = rest % d;
      rest /= d;
    }
    int64_t e = -tau * xz;
    for (int i = 0; i < n; ++i) {
      const int s = (q[i] + a[i]) % d;
      row = row * d + s;
      e += int64_t{w} * a[n + i] * s;
    }
    out.target[col] = row;
    out.exp[col] = ((e % m) + m) % m;
  }
  return out;
}

inline Mono mul(const Mono& a, const Mono& b) {
  Mono out{a.m, std::vector<int>(a.target.size()), std::vector<int64_t>(a.target.size())};
  for (size_t c = 0; c < b.target.size(); ++c) {
    out.target[c] = a.target[b.target[c]];
    out.exp[c] = (b.exp[c] + a.exp[b.target[c]]) % a.m;
  }
  return out;
}

inline Mono scale(Mono a, int64_t e) {
  for (auto& x : a.exp) x = (((x + e) % a.m) + a.m) % a.m;
  return a;
}

inline bool same(const Mono& a, const Mono& b) { return a.target == b.target && a.exp == b.exp; }

inline stabsym::OpMatrix to_matrix(const Mono& a) {
  const int dim = static_cast<int>(a.target.size());
  stabsym::OpMatrix out(dim, a.m);
  for (int c = 0; c < dim; ++c) out.at(a.target[c], c) = stabsym::CycNumber::zeta(a.m, a.exp[c]);
  return out;
}

// Phase-point operator d^{-n} sum_b omega^{[a,b]} T(b), built from the monomial Weyl matrices.
inline stabsym::OpMatrix phase_point(const Point& a, int d) {
  const int n = static_cast<int>(a.size()) / 2;
  const int m = conductor(d);
  const int dim = static_cast<int>(ipow(d, n));
  stabsym::OpMatrix out(dim, m);
  for (int64_t k = 0; k < ipow(d, 2 * n); ++k) {
    Point b = point(d, n, k);
    out += to_matrix(scale(weyl(b, d), int64_t{m / d} * form(a, b, d)));
  }
  return out * stabsym::BigRational(1, dim);
}

// Lagrangians by brute force: n-element spanning sets that are pairwise orthogonal, taken up to
// their element sets (as sorted point codes).
inline std::set<std::vector<int64_t>> lagrangians(int d, int n) {
  const int64_t points = ipow(d, 2 * n);
  std::set<std::vector<int64_t>> out;
  std::vector<int64_t> chosen;
  auto span_of = [&](const std::vector<int64_t>& gens) {
    std::set<int64_t> elems{0};
    for (int64_t g : gens) {
      std::set<int64_t> next;
      Point gp = point(d, n, g);
      for (int64_t e : elems) {
        Point cur = point(d, n, e);
        for (int k = 0; k < d; ++k) {
          next.insert(code(cur, d));
          cur = add(cur, gp, d);
        }
      }
      elems = next;
    }
    return std::vector<int64_t>(elems.begin(), elems.end());
  };
  // Depth-first over increasing generators; keep those whose span has d^n elements.
  auto rec = [&](auto&& self, int64_t start) -> void {
    if (static_cast<int>(chosen.size()) == n) {
      auto s = span_of(chosen);
      if (static_cast<int64_t>(s.size()) == ipow(d, n)) out.insert(s);
      return;
    }
    for (int64_t g = start; g < points; ++g) {
      Point gp = point(d, n, g);
      bool ok = true;
      for (int64_t h : chosen) ok = ok && form(gp, point(d, n, h), d) == 0;
      if (!ok) continue;
      chosen.push_back(g);
      self(self, g + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// Number of distinct cosets of each Lagrangian: d^{2n} / d^n.
inline int64_t states_from_lagrangians(const std::set<std::vector<int64_t>>& ls, int d, int n) {
  int64_t total = 0;
  for (const auto& l : ls) {
    std::set<std::vector<int64_t>> cosets;
    for (int64_t a = 0; a < ipow(d, 2 * n); ++a) {
      std::vector<int64_t> c;
      for (int64_t e : l) c.push_back(code(add(point(d, n, e), point(d, n, a), d), d));
      std::sort(c.begin(), c.end());
      cosets.insert(c);
    }
    total += static_cast<int64_t>(cosets.size());
  }
  return total;
}

}  // namespace oracle
