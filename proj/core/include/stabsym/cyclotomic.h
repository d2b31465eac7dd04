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

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <ostream>
#include <vector>

#include "stabsym/errors.h"

namespace stabsym {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

std::string to_string(const BigRational& q);  // "p/q" or "p"

/// Euler phi.
int euler_phi(int m);

/// Conductor used for all matrices over Z_d: 8 for d = 2, lcm(4, d) otherwise.
int conductor_for(int d);

/// Reduction data for Q[zeta_m]: zeta^j in the power basis of length phi(m).
struct CycContext {
  int m = 1;
  int phi = 1;
  std::vector<std::vector<int64_t>> power;  // power[j], j < m

  static const CycContext& get(int m);
};

/// An element of Q[zeta_m], stored as integer coordinates over a common positive denominator.
class CycNumber {
 public:
  CycNumber() = default;
  explicit CycNumber(int m);  // zero
  CycNumber(int m, const BigRational& q);

  static CycNumber zeta(int m, int64_t k);  // zeta_m^k
  static CycNumber one(int m) { return CycNumber(m, BigRational(1)); }
  static CycNumber zero(int m) { return CycNumber(m); }

  int conductor() const { return m_; }
  bool is_zero() const;
  bool is_rational() const;
  /// Only valid when is_rational().
  BigRational rational() const;
  BigRational coefficient(int k) const;

  CycNumber operator+(const CycNumber& o) const;
  CycNumber operator-(const CycNumber& o) const;
  CycNumber operator-() const;
  CycNumber operator*(const CycNumber& o) const;
  CycNumber operator*(const BigRational& q) const;
  CycNumber operator/(const CycNumber& o) const;
  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator*=(const CycNumber& o) { return *this = *this * o; }

  CycNumber inverse() const;
  CycNumber conj() const;
  /// zeta_m -> zeta_m^u, gcd(u, m) = 1.
  CycNumber galois(int64_t u) const;
  CycNumber pow(int64_t e) const;

  std::complex<double> embed() const;

  bool operator==(const CycNumber& o) const;

  const std::vector<BigInt>& numerators() const { return num_; }
  const BigInt& denominator() const { return den_; }

 private:
  CycNumber(int m, std::vector<BigInt> num, BigInt den);
  void normalize();

  int m_ = 1;
  std::vector<BigInt> num_{BigInt(0)};
  BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const CycNumber& x);

/// Positive square root of d in Q[zeta_m]; needs 4d | m (8 | m for d = 2).
CycNumber sqrt_d(int d, int m);

/// Galois exponent u mod m with u = alpha (mod d) and u = 1 on the 4th/8th root part.
int galois_exponent(int alpha, int d, int m);

}  // namespace stabsym
