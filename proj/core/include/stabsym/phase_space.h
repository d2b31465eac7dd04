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

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "stabsym/zmod.h"

namespace stabsym {

/// A point a = (a_X, a_Z) of the phase space Z_d^{2n}.
class PhaseVector {
 public:
  PhaseVector() = default;
  PhaseVector(int d, int n) : d_(d), v_(static_cast<size_t>(2 * n), 0) {}
  PhaseVector(int d, std::vector<int> coords);

  static PhaseVector unit(int d, int n, int index);

  int modulus() const { return d_; }
  int n() const { return static_cast<int>(v_.size()) / 2; }
  int size() const { return static_cast<int>(v_.size()); }

  int operator[](int i) const { return v_[i]; }
  int x(int i) const { return v_[i]; }
  int z(int i) const { return v_[n() + i]; }
  void set(int i, int64_t value) { v_[i] = mod(value, d_); }

  std::span<const int> coords() const { return v_; }
  bool is_zero() const;

  PhaseVector operator+(const PhaseVector& o) const;
  PhaseVector operator-(const PhaseVector& o) const;
  PhaseVector operator-() const;
  PhaseVector operator*(int64_t s) const;

  /// Index in [0, d^{2n}) with coordinate 0 most significant.
  size_t index() const;
  static PhaseVector from_index(int d, int n, size_t index);

  bool operator==(const PhaseVector&) const = default;
  auto operator<=>(const PhaseVector&) const = default;

 private:
  int d_ = 2;
  std::vector<int> v_;
};

std::ostream& operator<<(std::ostream& os, const PhaseVector& a);

/// [a,b] = a_X . b_Z - b_X . a_Z.
int symplectic_form(const PhaseVector& a, const PhaseVector& b);

/// Integer dot product a_X . a_Z without reduction (qubit phases need the lift).
int xz_dot(const PhaseVector& a);

/// A linear subspace of Z_d^{2n}, stored as the RREF of a spanning set.
class Subspace {
 public:
  Subspace() = default;
  Subspace(int d, int n);  // zero subspace
  static Subspace span(int d, int n, std::span<const PhaseVector> vectors);
  static Subspace from_rows(const ZModMatrix& rows);
  static Subspace whole(int d, int n);

  int modulus() const { return d_; }
  int n() const { return n_; }
  int dim() const { return basis_.rows(); }
  const ZModMatrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  PhaseVector basis_vector(int i) const;

  bool contains(const PhaseVector& v) const;
  bool is_isotropic() const;

  /// Lexicographically smallest element of v + this subspace.
  PhaseVector reduce(const PhaseVector& v) const;

  /// All d^dim elements, in the order of coefficient tuples.
  std::vector<PhaseVector> elements() const;

  Subspace intersect(const Subspace& o) const;
  Subspace sum(const Subspace& o) const;
  Subspace image(const ZModMatrix& m) const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_ && n_ == o.n_; }
  auto operator<=>(const Subspace& o) const { return basis_ <=> o.basis_; }

 private:
  int d_ = 2;
  int n_ = 0;
  ZModMatrix basis_;
  std::vector<int> pivots_;
};

/// An isotropic subspace of dimension exactly n.
class LagrangianSubspace {
 public:
  explicit LagrangianSubspace(Subspace s);

  const Subspace& subspace() const { return s_; }
  int modulus() const { return s_.modulus(); }
  int n() const { return s_.n(); }

  bool operator==(const LagrangianSubspace&) const = default;
  auto operator<=>(const LagrangianSubspace& o) const { return s_ <=> o.s_; }

 private:
  Subspace s_;
};

/// A stabilizer state as the affine Lagrangian coset L + rep.
struct StabilizerLabel {
  LagrangianSubspace lagrangian;
  PhaseVector rep;  // canonical: reduced against L

  StabilizerLabel(LagrangianSubspace l, const PhaseVector& a);

  bool operator==(const StabilizerLabel&) const = default;
  auto operator<=>(const StabilizerLabel&) const = default;
};

struct AffineSubspace {
  Subspace direction;
  PhaseVector rep;  // canonical

  AffineSubspace(Subspace dir, const PhaseVector& a);

  bool contains(const PhaseVector& v) const { return direction.contains(v - rep); }
  bool operator==(const AffineSubspace&) const = default;
};

/// Default size cap for enumerations: number of phase-space points d^{2n}.
inline constexpr size_t kDefaultEnumerationBudget = size_t{1} << 20;

std::vector<LagrangianSubspace> enumerate_lagrangians(
    int d, int n, size_t budget = kDefaultEnumerationBudget);

/// Sorted by Lagrangian (enumeration order), then canonical representative.
std::vector<StabilizerLabel> enumerate_stabilizer_labels(
    int d, int n, size_t budget = kDefaultEnumerationBudget);

/// The d^n canonical coset representatives of L, sorted.
std::vector<PhaseVector> coset_representatives(const LagrangianSubspace& l);

std::optional<AffineSubspace> intersect(const AffineSubspace& a, const AffineSubspace& b);

/// Label whose representative a satisfies [a, b_i] = values[i] on the basis rows b_i of L.
StabilizerLabel label_from_functional(const LagrangianSubspace& l, std::span<const int> values);

/// Values [rep, b_i] on the basis rows of L.
std::vector<int> functional_values(const StabilizerLabel& label);

size_t lagrangian_count(int d, int n);  // prod_{k=1..n} (d^k + 1)

}  // namespace stabsym

template <>
struct std::hash<stabsym::PhaseVector> {
  size_t operator()(const stabsym::PhaseVector& a) const noexcept { return a.index(); }
};
