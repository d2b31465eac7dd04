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

#include "stabsym/zmod.h"

#include <algorithm>
#include <cassert>
#include <string>

namespace stabsym {

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

int pow_mod(int64_t base, int64_t exp, int d) {
  int64_t result = 1 % d;
  int64_t b = mod(base, d);
  while (exp > 0) {
    if (exp & 1) result = result * b % d;
    b = b * b % d;
    exp >>= 1;
  }
  return static_cast<int>(result);
}

int inv_mod(int a, int d) {
  a = mod(a, d);
  if (a == 0) throw SingularMatrix("zero has no inverse modulo " + std::to_string(d));
  // Extended Euclid; d is prime so gcd(a, d) = 1.
  int64_t t = 0, new_t = 1, r = d, new_r = a;
  while (new_r != 0) {
    int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  return mod(t, d);
}

int primitive_root(int d) {
  if (d == 2) return 1;
  std::vector<int> factors;
  int m = d - 1;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      factors.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) factors.push_back(m);
  for (int g = 2; g < d; ++g) {
    bool ok = std::all_of(factors.begin(), factors.end(),
                          [&](int p) { return pow_mod(g, (d - 1) / p, d) != 1; });
    if (ok) return g;
  }
  return 1;
}

ZMod::ZMod(int64_t value, int modulus) : value_(0), modulus_(modulus) {
  if (!is_prime(modulus)) throw NotPrime("modulus " + std::to_string(modulus) + " is not prime");
  value_ = mod(value, modulus);
}

ZMod ZMod::operator+(ZMod o) const {
  assert(modulus_ == o.modulus_);
  return {mod(int64_t{value_} + o.value_, modulus_), modulus_, Unchecked{}};
}

ZMod ZMod::operator-(ZMod o) const {
  assert(modulus_ == o.modulus_);
  return {mod(int64_t{value_} - o.value_, modulus_), modulus_, Unchecked{}};
}

ZMod ZMod::operator*(ZMod o) const {
  assert(modulus_ == o.modulus_);
  return {mod(int64_t{value_} * o.value_, modulus_), modulus_, Unchecked{}};
}

ZMod ZMod::operator/(ZMod o) const { return *this * o.inverse(); }

ZMod ZMod::operator-() const { return {mod(-int64_t{value_}, modulus_), modulus_, Unchecked{}}; }

ZMod ZMod::inverse() const {
  if (value_ == 0) throw DivisionByZero("inverse of 0 in Z_" + std::to_string(modulus_));
  return {inv_mod(value_, modulus_), modulus_, Unchecked{}};
}

std::ostream& operator<<(std::ostream& os, ZMod x) { return os << x.value(); }

int legendre(int64_t a, int d) {
  int r = mod(a, d);
  if (r == 0) return 0;
  if (d == 2) return 1;
  return pow_mod(r, (d - 1) / 2, d) == 1 ? 1 : -1;
}

int legendre(ZMod a) { return legendre(a.value(), a.modulus()); }

// ---------------------------------------------------------------------------

ZModMatrix::ZModMatrix(int rows, int cols, int d)
    : rows_(rows), cols_(cols), d_(d), data_(static_cast<size_t>(rows) * cols, 0) {}

ZModMatrix::ZModMatrix(int d, const std::vector<std::vector<int64_t>>& rows)
    : rows_(static_cast<int>(rows.size())),
      cols_(rows.empty() ? 0 : static_cast<int>(rows.front().size())),
      d_(d) {
  data_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw DimensionMismatch("ragged matrix rows");
    for (int64_t v : r) data_.push_back(mod(v, d));
  }
}

ZModMatrix ZModMatrix::identity(int size, int d) {
  ZModMatrix m(size, size, d);
  for (int i = 0; i < size; ++i) m.set(i, i, 1);
  return m;
}

std::vector<int> ZModMatrix::column(int c) const {
  std::vector<int> out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

ZModMatrix ZModMatrix::operator*(const ZModMatrix& o) const {
  if (cols_ != o.rows_ || d_ != o.d_) throw DimensionMismatch("matrix product shape mismatch");
  ZModMatrix out(rows_, o.cols_, d_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      int64_t acc = 0;
      for (int k = 0; k < cols_; ++k) acc += int64_t{(*this)(i, k)} * o(k, j);
      out.set(i, j, acc);
    }
  return out;
}

std::vector<int> ZModMatrix::operator*(std::span<const int> v) const {
  if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
  std::vector<int> out(rows_);
  for (int i = 0; i < rows_; ++i) {
    int64_t acc = 0;
    for (int k = 0; k < cols_; ++k) acc += int64_t{(*this)(i, k)} * v[k];
    out[i] = mod(acc, d_);
  }
  return out;
}

ZModMatrix ZModMatrix::transpose() const {
  ZModMatrix out(cols_, rows_, d_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(j, i, (*this)(i, j));
  return out;
}

ZModMatrix ZModMatrix::vstack(const ZModMatrix& o) const {
  if (rows_ == 0) return o;
  if (o.rows_ == 0) return *this;
  if (cols_ != o.cols_ || d_ != o.d_) throw DimensionMismatch("vstack shape mismatch");
  ZModMatrix out = *this;
  out.rows_ += o.rows_;
  out.data_.insert(out.data_.end(), o.data_.begin(), o.data_.end());
  return out;
}

std::ostream& operator<<(std::ostream& os, const ZModMatrix& m) {
  os << '[';
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

RrefResult rref(const ZModMatrix& m) {
  RrefResult res{m, {}, 0};
  ZModMatrix& a = res.matrix;
  const int d = m.modulus();
  int lead_row = 0;
  for (int c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
    int pivot = -1;
    for (int r = lead_row; r < a.rows(); ++r)
      if (a(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != lead_row)
      for (int j = 0; j < a.cols(); ++j) {
        int tmp = a(pivot, j);
        a.set(pivot, j, a(lead_row, j));
        a.set(lead_row, j, tmp);
      }
    const int inv = inv_mod(a(lead_row, c), d);
    for (int j = c; j < a.cols(); ++j) a.set(lead_row, j, int64_t{a(lead_row, j)} * inv);
    for (int r = 0; r < a.rows(); ++r) {
      if (r == lead_row || a(r, c) == 0) continue;
      const int64_t f = a(r, c);
      for (int j = c; j < a.cols(); ++j) a.set(r, j, a(r, j) - f * a(lead_row, j));
    }
    res.pivots.push_back(c);
    ++lead_row;
  }
  res.rank = lead_row;
  return res;
}

int rank(const ZModMatrix& m) { return rref(m).rank; }

ZModMatrix invert(const ZModMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("invert requires a square matrix");
  const int size = m.rows();
  const int d = m.modulus();
  ZModMatrix aug(size, 2 * size, d);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) aug.set(i, j, m(i, j));
    aug.set(i, size + i, 1);
  }
  RrefResult r = rref(aug);
  if (r.rank < size || r.pivots[size - 1] != size - 1) throw SingularMatrix("matrix is singular");
  ZModMatrix out(size, size, d);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) out.set(i, j, r.matrix(i, size + j));
  return out;
}

ZModMatrix nullspace(const ZModMatrix& m) {
  RrefResult r = rref(m);
  const int d = m.modulus();
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<int64_t>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<int64_t> v(m.cols(), 0);
    v[free] = 1;
    for (int i = 0; i < r.rank; ++i) v[r.pivots[i]] = mod(-int64_t{r.matrix(i, free)}, d);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return ZModMatrix(0, m.cols(), d);
  return ZModMatrix(d, basis);
}

std::optional<std::vector<int>> solve(const ZModMatrix& m, std::span<const int> b) {
  if (static_cast<int>(b.size()) != m.rows()) throw DimensionMismatch("solve: rhs length mismatch");
  ZModMatrix aug(m.rows(), m.cols() + 1, m.modulus());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.set(i, j, m(i, j));
    aug.set(i, m.cols(), b[i]);
  }
  RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  std::vector<int> x(m.cols(), 0);
  for (int i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.matrix(i, m.cols());
  return x;
}

}  // namespace stabsym
