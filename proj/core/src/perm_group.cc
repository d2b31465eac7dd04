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

#include "stabsym/perm_group.h"

#include <random>

namespace stabsym {

Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

bool is_identity(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

Perm compose(const Perm& p, const Perm& q) {
  Perm r(q.size());
  for (size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

bool is_permutation(const Perm& p) {
  std::vector<bool> hit(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

std::ostream& print_cycles(std::ostream& os, const Perm& p) {
  std::vector<bool> done(p.size(), false);
  bool any = false;
  for (size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == static_cast<int>(i)) continue;
    any = true;
    os << '(';
    for (size_t j = i; !done[j]; j = p[j]) {
      done[j] = true;
      os << j << (done[p[j]] ? "" : " ");
    }
    os << ')';
  }
  if (!any) os << "()";
  return os;
}

// ---------------------------------------------------------------------------

PermGroup::PermGroup(int degree) : degree_(degree) {}

PermGroup::PermGroup(int degree, const std::vector<Perm>& gens) : degree_(degree) {
  for (const auto& g : gens) add_generator(g);
}

std::pair<Perm, size_t> PermGroup::sift(Perm g, size_t from) const {
  for (size_t k = from; k < levels_.size(); ++k) {
    const Level& l = levels_[k];
    const int b = g[l.beta];
    if (l.rep_index[b] < 0) return {std::move(g), k};
    const Perm& u = l.reps[l.rep_index[b]];
    // g <- u^{-1} g
    g = compose(inverse(u), g);
  }
  return {std::move(g), levels_.size()};
}

bool PermGroup::contains(const Perm& p) const {
  if (static_cast<int>(p.size()) != degree_) return false;
  auto [residue, level] = sift(p, 0);
  return level == levels_.size() && is_identity(residue);
}

bool PermGroup::add_generator(const Perm& g) {
  if (static_cast<int>(g.size()) != degree_ || !is_permutation(g))
    throw DimensionMismatch("generator is not a permutation of the right degree");
  if (contains(g)) return false;
  gens_.push_back(g);
  insert(0, g);
  return true;
}

void PermGroup::insert(size_t k, const Perm& g) {
  if (k == levels_.size()) {
    Level l;
    int moved = 0;
    while (g[moved] == moved) ++moved;
    l.beta = moved;
    l.orbit = {moved};
    l.rep_index.assign(degree_, -1);
    l.rep_index[moved] = 0;
    l.reps.push_back(identity_perm(degree_));
    levels_.push_back(std::move(l));
  }
  {
    Level& l = levels_[k];
    l.gens.push_back(g);
    l.tested.emplace_back(l.orbit.size(), false);
    // Extend the orbit with every generator.
    for (size_t pos = 0; pos < l.orbit.size(); ++pos) {
      const int pt = l.orbit[pos];
      for (const auto& s : l.gens) {
        const int img = s[pt];
        if (l.rep_index[img] >= 0) continue;
        l.rep_index[img] = static_cast<int>(l.reps.size());
        l.reps.push_back(compose(s, l.reps[l.rep_index[pt]]));
        l.orbit.push_back(img);
      }
    }
    for (auto& t : l.tested) t.resize(l.orbit.size(), false);
  }
  // Schreier generators u_{s(b)}^{-1} s u_b for untested pairs.
  for (size_t gi = 0; gi < levels_[k].gens.size(); ++gi) {
    for (size_t pos = 0; pos < levels_[k].orbit.size(); ++pos) {
      if (levels_[k].tested[gi][pos]) continue;
      levels_[k].tested[gi][pos] = true;
      const Level& l = levels_[k];
      const int b = l.orbit[pos];
      const Perm& s = l.gens[gi];
      Perm h = compose(inverse(l.reps[l.rep_index[s[b]]]), compose(s, l.reps[l.rep_index[b]]));
      if (is_identity(h)) continue;
      auto [residue, level] = sift(std::move(h), k + 1);
      if (level == levels_.size() && is_identity(residue)) continue;
      insert(k + 1, residue);
      // insert at deeper levels never changes level k, so the loop stays valid.
    }
  }
}

BigInt PermGroup::order() const {
  BigInt o = 1;
  for (const auto& l : levels_) o *= static_cast<int64_t>(l.orbit.size());
  return o;
}

std::vector<int> PermGroup::base() const {
  std::vector<int> b;
  for (const auto& l : levels_) b.push_back(l.beta);
  return b;
}

std::vector<int> PermGroup::orbit_lengths() const {
  std::vector<int> o;
  for (const auto& l : levels_) o.push_back(static_cast<int>(l.orbit.size()));
  return o;
}

std::vector<Perm> PermGroup::strong_generators() const {
  std::vector<Perm> out;
  for (const auto& l : levels_)
    for (const auto& g : l.gens) out.push_back(g);
  return out;
}

std::vector<int> PermGroup::orbit(int point) const {
  std::vector<int> orb{point};
  std::vector<bool> seen(degree_, false);
  seen[point] = true;
  for (size_t i = 0; i < orb.size(); ++i)
    for (const auto& g : gens_)
      if (!seen[g[orb[i]]]) {
        seen[g[orb[i]]] = true;
        orb.push_back(g[orb[i]]);
      }
  return orb;
}

Perm PermGroup::random_element(uint64_t seed) const {
  std::mt19937_64 rng(seed);
  Perm p = identity_perm(degree_);
  if (gens_.empty()) return p;
  std::uniform_int_distribution<size_t> pick(0, gens_.size() - 1);
  for (int step = 0; step < 64; ++step) p = compose(gens_[pick(rng)], p);
  return p;
}

}  // namespace stabsym
