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

#include "stabsym/polytope1.h"

#include <set>
#include <sstream>

#include "stabsym/errors.h"
#include "stabsym/zmod.h"

namespace stabsym {

namespace {

void require_odd_prime(int d) {
  if (d == 2 || !is_prime(d)) throw OddOnly("n = 1 geometry needs an odd prime d");
}

struct Lines {
  std::vector<LagrangianSubspace> lagrangians;
  std::vector<std::vector<StabilizerLabel>> labels;  // labels[line][g]
};

Lines lines(int d) {
  Lines out;
  out.lagrangians = enumerate_lagrangians(d, 1);
  for (const auto& l : out.lagrangians) {
    std::vector<StabilizerLabel> row;
    for (const auto& a : coset_representatives(l)) row.emplace_back(l, a);
    out.labels.push_back(std::move(row));
  }
  return out;
}

// Rational tr(pi_L^g Pi_v) for all (line, g) against every vertex v, via the closed form.
// table[line][g][v], vertices ordered line-major.
std::vector<std::vector<std::vector<BigRational>>> shifted_table(const Lines& ls, int d) {
  std::vector<StabilizerLabel> flat;
  for (const auto& row : ls.labels) flat.insert(flat.end(), row.begin(), row.end());
  std::vector<std::vector<std::vector<BigRational>>> t(ls.labels.size());
  const BigRational inv_d(1, d);
  for (size_t i = 0; i < ls.labels.size(); ++i)
    for (const auto& lab : ls.labels[i]) {
      std::vector<BigRational> row;
      for (const auto& v : flat) row.push_back(gram_closed_form(lab, v) - inv_d);
      t[i].push_back(std::move(row));
    }
  return t;
}

bool next_choice(std::vector<int>& c, int d) {
  for (size_t i = c.size(); i-- > 0;) {
    if (++c[i] < d) return true;
    c[i] = 0;
  }
  return false;
}

}  // namespace

std::vector<ShiftedVertex> shifted_vertices(int d) {
  require_odd_prime(d);
  const int m = conductor_for(d);
  const OpMatrix shift = OpMatrix::identity(d, m) * BigRational(1, d);
  std::vector<ShiftedVertex> out;
  for (const auto& row : lines(d).labels)
    for (const auto& lab : row) out.push_back({lab, projector(lab) - shift});
  return out;
}

DirectSumReport direct_sum_check(int d) {
  DirectSumReport r;
  r.d = d;
  auto v = shifted_vertices(d);
  const int m = conductor_for(d);
  const BigRational same(d - 1, d), other(-1, d);
  r.table_ok = true;
  r.blocks_orthogonal = true;
  std::ostringstream detail;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) {
      CycNumber c = trace_product(v[i].matrix, v[j].matrix);
      if (!c.is_rational()) {
        r.table_ok = false;
        continue;
      }
      const BigRational x = c.rational();
      ++r.overlap_values[x];
      const bool same_line = v[i].label.lagrangian == v[j].label.lagrangian;
      const BigRational expect = !same_line ? BigRational(0) : (i == j ? same : other);
      if (x != expect) {
        if (r.table_ok && r.blocks_orthogonal) detail << "pair (" << i << "," << j << ") = " << x << "; ";
        if (same_line) r.table_ok = false;
        else r.blocks_orthogonal = false;
      }
    }
  r.line_sums_vanish = true;
  for (size_t start = 0; start < v.size(); start += d) {
    OpMatrix sum(d, m);
    for (int g = 0; g < d; ++g) sum += v[start + g].matrix;
    if (!sum.is_zero()) {
      r.line_sums_vanish = false;
      detail << "line " << start / d << " sum nonzero; ";
    }
  }
  r.pass = r.table_ok && r.line_sums_vanish && r.blocks_orthogonal;
  r.detail = detail.str();
  return r;
}

uint64_t facet_count(int d) {
  uint64_t c = 1;
  for (int i = 0; i <= d; ++i) c *= static_cast<uint64_t>(d);
  return c;
}

std::vector<FacetOperator> facet_family(int d, uint64_t max_facets) {
  require_odd_prime(d);
  if (facet_count(d) > max_facets) throw BudgetExceeded("facet family too large");
  auto v = shifted_vertices(d);
  const int m = conductor_for(d);
  const OpMatrix center = OpMatrix::identity(d, m) * BigRational(1, d);
  std::vector<FacetOperator> out;
  std::vector<int> c(d + 1, 0);
  do {
    OpMatrix x = center;
    for (int i = 0; i <= d; ++i) x += v[static_cast<size_t>(i) * d + c[i]].matrix;
    out.push_back({c, std::move(x)});
  } while (next_choice(c, d));
  return out;
}

FacetReport check_facets(int d, uint64_t max_facets) {
  require_odd_prime(d);
  FacetReport r;
  r.d = d;
  if (facet_count(d) > max_facets) throw BudgetExceeded("facet family too large");
  auto family = facet_family(d, max_facets);
  r.facet_count = family.size();
  std::set<std::string> keys;
  for (const auto& f : family) keys.insert(canonical_key(f.matrix));
  r.distinct = keys.size() == family.size();

  Lines ls = lines(d);
  auto t = shifted_table(ls, d);
  const size_t nv = static_cast<size_t>(d) * (d + 1);
  const BigRational inv_d(1, d);
  r.supporting = true;
  r.min_vertices_per_facet = static_cast<int>(nv);
  r.max_vertices_per_facet = 0;
  std::ostringstream detail;
  for (const auto& f : family) {
    BigRational lo;
    int zeros = 0;
    for (size_t vi = 0; vi < nv; ++vi) {
      // tr(X Pi_v) = 1/d + sum_i tr(pi_i Pi_v).
      BigRational s = inv_d;
      for (int i = 0; i <= d; ++i) s += t[i][f.choice[i]][vi];
      if (vi == 0 || s < lo) lo = s;
      if (s == 0) ++zeros;
    }
    if (lo != 0) {
      if (r.supporting) detail << "facet min " << lo << "; ";
      r.supporting = false;
    }
    r.min_vertices_per_facet = std::min(r.min_vertices_per_facet, zeros);
    r.max_vertices_per_facet = std::max(r.max_vertices_per_facet, zeros);
  }
  r.pass = r.distinct && r.supporting && r.facet_count == facet_count(d) &&
           r.min_vertices_per_facet == r.max_vertices_per_facet;
  r.detail = detail.str();
  return r;
}

Membership polytope_membership(const OpMatrix& a, int d) {
  require_odd_prime(d);
  Lines ls = lines(d);
  const BigRational inv_d(1, d);
  CycNumber tr = a.trace();
  if (!tr.is_rational()) throw Error("trace must be rational");
  // w[i][g] = tr(A pi_{L_i}^g).
  std::vector<std::vector<BigRational>> w(ls.labels.size());
  for (size_t i = 0; i < ls.labels.size(); ++i)
    for (const auto& lab : ls.labels[i]) {
      CycNumber c = trace_product(a, projector(lab));
      if (!c.is_rational()) throw Error("overlap with a stabilizer state is not rational");
      w[i].push_back(c.rational() - tr.rational() * inv_d);
    }
  Membership out;
  out.inside = true;
  out.interior = true;
  std::vector<int> c(d + 1, 0);
  bool first = true;
  do {
    BigRational s = tr.rational() * inv_d;
    for (int i = 0; i <= d; ++i) s += w[i][c[i]];
    if (first || s < out.min_value) out.min_value = s;
    first = false;
    if (s <= 0) out.interior = false;
    if (s < 0 && out.inside) {
      out.inside = false;
      out.violated = c;
    }
  } while (next_choice(c, d));
  return out;
}

OpMatrix wigner_negative_state(int d) {
  require_odd_prime(d);
  const int m = conductor_for(d);
  PhaseVector origin = PhaseVector::from_index(d, 1, 0);
  return (OpMatrix::identity(d, m) - phase_point(origin)) * BigRational(1, d - 1);
}

}  // namespace stabsym
