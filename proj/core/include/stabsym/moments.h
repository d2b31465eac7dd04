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

#include <optional>
#include <string>
#include <vector>

#include "stabsym/operators.h"

namespace stabsym {

/// Finite set of Hermitian operators with the uniform (counting) measure.
struct OperatorSet {
  std::vector<OpMatrix> elements;
  int dim() const { return elements.empty() ? 0 : elements.front().dim(); }
};

/// F_k(A_1..A_k) = mean over q of prod_i tr(A_i q).
CycNumber moment_form(const OperatorSet& q, const std::vector<OpMatrix>& args);

/// First moment: the mean of the elements.
OpMatrix first_moment(const OperatorSet& q);

/// Orthogonal Hermitian basis with (B_i|B_j) = D delta_ij: A(a) for odd d, Paulis for d = 2.
std::vector<OpMatrix> hermitian_basis(int d, int n);
/// Real symmetric Paulis (an even number of Y factors), a basis of Sym.
std::vector<OpMatrix> symmetric_basis(int n);

struct DesignReport {
  std::string predicate;
  bool pass = false;
  std::vector<BigRational> constants;
  std::vector<int> witness;  // basis indices of the first violating tuple
  std::string detail;
};

DesignReport is_complex_2design(const OperatorSet& q, const std::vector<OpMatrix>& basis);
DesignReport is_complex_3design(const OperatorSet& q, const std::vector<OpMatrix>& basis);
/// F_2 = K (tr A tr B + 2 tr AB), K solved.
DesignReport is_real_4design(const OperatorSet& q, const std::vector<OpMatrix>& basis);
/// F_3 = K1 trA trB trC + K2 (trA trBC + ...) + K3 (tr ABC + tr ACB), constants solved.
DesignReport is_real_6design(const OperatorSet& q, const std::vector<OpMatrix>& basis);

struct Clause {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ConditionReport {
  std::string condition;
  bool pass = false;
  int dir_dimension = 0;
  std::vector<Clause> clauses;
};

ConditionReport check_lin_wig_condition(const OperatorSet& q);
ConditionReport check_lin_jor_condition(const OperatorSet& q);

/// Rank of the span of the set, over the rationals, via coordinates in a Hermitian basis.
int span_rank(const OperatorSet& q);

}  // namespace stabsym
