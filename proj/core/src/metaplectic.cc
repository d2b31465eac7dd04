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

#include "stabsym/metaplectic.h"

namespace stabsym {

namespace {

std::vector<int> digits(int index, int d, int n) {
  std::vector<int> q(n);
  for (int i = n - 1; i >= 0; --i) {
    q[i] = index % d;
    index /= d;
  }
  return q;
}

int undigits(const std::vector<int>& q, int d) {
  int idx = 0;
  for (int v : q) idx = idx * d + v;
  return idx;
}

// sum_q omega^{2 q^2} / d
CycNumber fourier_scale(int d, int m) {
  CycNumber g(m);
  for (int q = 0; q < d; ++q) g += CycNumber::zeta(m, int64_t{m / d} * 2 * q * q);
  return g * BigRational(1, d);
}

OpMatrix fourier(int i, int d, int n, int m, bool inverse) {
  const int dim = hilbert_dim(d, n);
  CycNumber scale = fourier_scale(d, m);
  if (inverse) scale = scale.conj();
  const int sgn = inverse ? -1 : 1;
  OpMatrix u(dim, m);
  for (int col = 0; col < dim; ++col) {
    std::vector<int> q = digits(col, d, n);
    const int k = q[i];
    for (int j = 0; j < d; ++j) {
      q[i] = j;
      u.at(undigits(q, d), col) = CycNumber::zeta(m, int64_t{sgn} * (m / d) * j * k) * scale;
    }
  }
  return u;
}

}  // namespace

OpMatrix gate_unitary(const SpGate& g, int d, int n) {
  if (d == 2) throw OddOnly("metaplectic unitaries need odd d");
  using K = SpGate::Kind;
  const int m = conductor_for(d);
  const int dim = hilbert_dim(d, n);
  const int w = m / d;
  const int64_t c = mod(g.c, d);
  OpMatrix u(dim, m);
  switch (g.kind) {
    case K::kFourier:
      return fourier(g.i, d, n, m, false);
    case K::kXShear: {
      OpMatrix shear = gate_unitary({K::kShear, g.i, 0, static_cast<int>(-c)}, d, n);
      return fourier(g.i, d, n, m, false) * shear * fourier(g.i, d, n, m, true);
    }
    case K::kXCZ: {
      OpMatrix cz = gate_unitary({K::kCZ, g.i, g.j, static_cast<int>(-c)}, d, n);
      OpMatrix f = fourier(g.i, d, n, m, false) * fourier(g.j, d, n, m, false);
      OpMatrix finv = fourier(g.j, d, n, m, true) * fourier(g.i, d, n, m, true);
      return f * cz * finv;
    }
    default:
      break;
  }
  const int t = tau_exponent(d, m);
  for (int col = 0; col < dim; ++col) {
    std::vector<int> q = digits(col, d, n);
    switch (g.kind) {
      case K::kShear:
        u.at(col, col) = CycNumber::zeta(m, t * c * q[g.i] * q[g.i]);
        break;
      case K::kCZ:
        u.at(col, col) = CycNumber::zeta(m, w * c * q[g.i] * q[g.j]);
        break;
      case K::kMultiply: {
        std::vector<int> r = q;
        r[g.i] = mod(c * q[g.i], d);
        u.at(undigits(r, d), col) = CycNumber(m, BigRational(legendre(c, d)));
        break;
      }
      case K::kCSum: {
        std::vector<int> r = q;
        r[g.j] = mod(r[g.j] + c * q[g.i], d);
        u.at(undigits(r, d), col) = CycNumber::one(m);
        break;
      }
      default:
        break;
    }
  }
  return u;
}

OpMatrix metaplectic(const ZModMatrix& s) {
  const int d = s.modulus(), n = s.rows() / 2;
  if (d == 2) throw OddOnly("metaplectic representation needs odd d");
  std::vector<SpGate> word = symplectic_reduction_word(s);
  OpMatrix u = OpMatrix::identity(hilbert_dim(d, n), conductor_for(d));
  for (const auto& g : word) u = u * gate_unitary(g, d, n).adjoint();
  return u;
}

}  // namespace stabsym
