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
#include <ostream>
#include <vector>

#include "stabsym/cyclotomic.h"

namespace stabsym {

/// A permutation of {0..N-1} as its image list.
using Perm = std::vector<int>;

Perm identity_perm(int n);
bool is_identity(const Perm& p);
/// (p * q)(i) = p(q(i)): apply q first.
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
bool is_permutation(const Perm& p);
std::ostream& print_cycles(std::ostream& os, const Perm& p);

/// Permutation group with a stabilizer chain built by deterministic Schreier-Sims.
class PermGroup {
 public:
  explicit PermGroup(int degree);
  PermGroup(int degree, const std::vector<Perm>& gens);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  /// Adds g unless already a member. Returns true if the group grew.
  bool add_generator(const Perm& g);

  bool contains(const Perm& p) const;
  BigInt order() const;

  std::vector<int> base() const;
  std::vector<int> orbit_lengths() const;
  /// Strong generators: union of level generators.
  std::vector<Perm> strong_generators() const;

  /// Orbit of a point under the whole group.
  std::vector<int> orbit(int point) const;

  /// A product of generators picked by the seed (for tests).
  Perm random_element(uint64_t seed) const;

 private:
  struct Level {
    int beta = 0;
    std::vector<Perm> gens;
    std::vector<int> orbit;
    std::vector<int> rep_index;  // point -> index into reps, or -1
    std::vector<Perm> reps;      // u with u(beta) = point
    std::vector<std::vector<bool>> tested;  // [gen][orbit position]
  };

  /// Returns the residue and the level where sifting stopped.
  std::pair<Perm, size_t> sift(Perm g, size_t from) const;
  void insert(size_t k, const Perm& g);

  int degree_;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
};

}  // namespace stabsym
