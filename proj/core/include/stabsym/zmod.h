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

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <tuple>
#include <vector>

#include "stabsym/errors.h"

namespace stabsym {

bool is_prime(int64_t n);

/// Reduces x into [0, d).
constexpr int mod(int64_t x, int d) {
  int64_t r = x % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

/// Multiplicative inverse of a nonzero residue modulo a prime d.
int inv_mod(int a, int d);
int pow_mod(int64_t base, int64_t exp, int d);

/// Smallest generator of Z_d^x.
int primitive_root(int d);

/// An element of the prime field Z_d.
class ZMod {
 public:
  ZMod(int64_t value, int modulus);

  int value() const { return value_; }
  int modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  ZMod operator+(ZMod o) const;
  ZMod operator-(ZMod o) const;
  ZMod operator*(ZMod o) const;
  ZMod operator/(ZMod o) const;
  ZMod operator-() const;
  ZMod inverse() const;

  bool operator==(const ZMod&) const = default;

 private:
  struct Unchecked {};
  ZMod(int value, int modulus, Unchecked) : value_(value), modulus_(modulus) {}

  int value_;
  int modulus_;
};

std::ostream& operator<<(std::ostream& os, ZMod x);

/// Legendre symbol (a/d) for odd prime d: +1, -1 or 0.
int legendre(ZMod a);
int legendre(int64_t a, int d);

/// Dense row-major matrix over Z_d. Entries are stored reduced.
class ZModMatrix {
 public:
  ZModMatrix() = default;
  ZModMatrix(int rows, int cols, int d);
  ZModMatrix(int d, const std::vector<std::vector<int64_t>>& rows);

  static ZModMatrix identity(int size, int d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int modulus() const { return d_; }

  int operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, int64_t v) { data_[static_cast<size_t>(r) * cols_ + c] = mod(v, d_); }

  std::span<const int> row(int r) const {
    return {data_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)};
  }
  std::vector<int> column(int c) const;
  const std::vector<int>& data() const { return data_; }

  ZModMatrix operator*(const ZModMatrix& o) const;
  std::vector<int> operator*(std::span<const int> v) const;
  ZModMatrix transpose() const;

  /// Stacks the rows of o below this matrix.
  ZModMatrix vstack(const ZModMatrix& o) const;

  bool operator==(const ZModMatrix&) const = default;
  auto operator<=>(const ZModMatrix& o) const {
    return std::tie(rows_, cols_, data_) <=> std::tie(o.rows_, o.cols_, o.data_);
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  int d_ = 2;
  std::vector<int> data_;
};

std::ostream& operator<<(std::ostream& os, const ZModMatrix& m);

struct RrefResult {
  ZModMatrix matrix;
  std::vector<int> pivots;
  int rank = 0;
};

RrefResult rref(const ZModMatrix& m);
int rank(const ZModMatrix& m);
ZModMatrix invert(const ZModMatrix& m);

/// Basis (as rows) of {x : m x = 0}.
ZModMatrix nullspace(const ZModMatrix& m);

/// Some x with m x = b, if one exists.
std::optional<std::vector<int>> solve(const ZModMatrix& m, std::span<const int> b);

}  // namespace stabsym
