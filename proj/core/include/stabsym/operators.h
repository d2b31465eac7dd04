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

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "stabsym/cyclotomic.h"
#include "stabsym/phase_space.h"

namespace stabsym {

/// Dense square matrix over Q[zeta_m].
class OpMatrix {
 public:
  OpMatrix() = default;
  OpMatrix(int dim, int m);  // zero matrix

  static OpMatrix identity(int dim, int m);

  int dim() const { return dim_; }
  int conductor() const { return m_; }

  const CycNumber& operator()(int r, int c) const { return e_[static_cast<size_t>(r) * dim_ + c]; }
  CycNumber& at(int r, int c) { return e_[static_cast<size_t>(r) * dim_ + c]; }

  OpMatrix operator+(const OpMatrix& o) const;
  OpMatrix operator-(const OpMatrix& o) const;
  OpMatrix operator*(const OpMatrix& o) const;
  OpMatrix operator*(const CycNumber& s) const;
  OpMatrix operator*(const BigRational& s) const;
  OpMatrix& operator+=(const OpMatrix& o);

  OpMatrix adjoint() const;
  OpMatrix transpose() const;
  OpMatrix conj() const;
  OpMatrix galois(int64_t u) const;  // entrywise

  CycNumber trace() const;
  bool is_hermitian() const { return *this == adjoint(); }
  bool is_zero() const;
  bool is_real() const;

  bool operator==(const OpMatrix& o) const = default;

 private:
  int dim_ = 0;
  int m_ = 1;
  std::vector<CycNumber> e_;
};

std::ostream& operator<<(std::ostream& os, const OpMatrix& a);

/// tr(A^dag B).
CycNumber hs_inner(const OpMatrix& a, const OpMatrix& b);
/// tr(AB).
CycNumber trace_product(const OpMatrix& a, const OpMatrix& b);
int matrix_rank(const OpMatrix& a);

int hilbert_dim(int d, int n);

/// Exact, canonical text key of a matrix (for hashing and deduplication).
std::string canonical_key(const OpMatrix& a);

/// Exponent t with tau = zeta_m^t (tau = omega^{(d+1)/2}, or i for d = 2).
int tau_exponent(int d, int m);

OpMatrix weyl(const PhaseVector& a);
OpMatrix phase_point(const PhaseVector& a);

/// Pi = d^{-n} sum_{b in L} omega^{[a,b]} T(b) for odd d.
OpMatrix stab_projector(const StabilizerLabel& label);
/// Same state as d^{-n} sum_{c in L + a} A(c).
OpMatrix stab_projector_from_points(const StabilizerLabel& label);

/// Qubit projector 2^{-n} sum_{b in L} eps(b) T(b); signs indexed by PhaseVector::index().
OpMatrix stab_projector_qubit(const LagrangianSubspace& l, const std::map<size_t, int>& eps);

/// Qubit state with label L + a: signs (-1)^{[a,b]} relative to the all-plus basis products.
OpMatrix qubit_projector(const StabilizerLabel& label);

/// The projector for any d: stab_projector for odd d, qubit_projector for d = 2.
OpMatrix projector(const StabilizerLabel& label);

/// tr(Pi_x Pi_y) from Lagrangian intersections (odd d).
BigRational gram_closed_form(const StabilizerLabel& x, const StabilizerLabel& y);

struct GramMatrix {
  int size = 0;
  std::vector<BigRational> values;  // row-major

  const BigRational& operator()(int i, int j) const {
    return values[static_cast<size_t>(i) * size + j];
  }
  /// Distinct values with multiplicities, sorted by value.
  std::map<BigRational, size_t> multiset() const;
};

/// Gram of trace overlaps; closed form for odd d, brute force otherwise.
GramMatrix build_gram(const std::vector<StabilizerLabel>& states,
                      size_t budget = size_t{1} << 22);
/// Gram of tr(P_i P_j) over explicit (rational-overlap) matrices.
GramMatrix build_gram(const std::vector<OpMatrix>& ops);

}  // namespace stabsym
