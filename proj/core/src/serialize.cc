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

#include "stabsym/serialize.h"

#include <limits>
#include <sstream>

#include "stabsym/errors.h"

namespace stabsym {

namespace {

Json rational_pair(const BigRational& q) {
  return Json::array({big_to_json(numerator(q)), big_to_json(boost::multiprecision::denominator(q))});
}

Json perm_json(const Perm& p) { return Json(p); }

Json rational_list(const std::vector<BigRational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace

Json big_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<int64_t>::min() && x <= std::numeric_limits<int64_t>::max())
    return static_cast<int64_t>(x);
  return x.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<int64_t>());
}

Json to_json(const PhaseVector& a) {
  return Json(std::vector<int>(a.coords().begin(), a.coords().end()));
}

PhaseVector phase_vector_from_json(int d, const Json& j) {
  return PhaseVector(d, j.get<std::vector<int>>());
}

Json to_json(const ZModMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    rows.push_back(std::vector<int>(row.begin(), row.end()));
  }
  return rows;
}

Json to_json(const Subspace& s) {
  return Json{{"d", s.modulus()}, {"n", s.n()}, {"rows", to_json(s.basis())}};
}

Subspace subspace_from_json(const Json& j) {
  const int d = j.at("d").get<int>();
  const int n = j.at("n").get<int>();
  auto rows = j.at("rows").get<std::vector<std::vector<int64_t>>>();
  if (rows.empty()) return Subspace(d, n);
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != 2 * n) throw DimensionMismatch("subspace row length");
  return Subspace::from_rows(ZModMatrix(d, rows));
}

Json to_json(const StabilizerLabel& l) {
  return Json{{"lagrangian", to_json(l.lagrangian.subspace())}, {"rep", to_json(l.rep)}};
}

StabilizerLabel label_from_json(const Json& j) {
  Subspace s = subspace_from_json(j.at("lagrangian"));
  return StabilizerLabel(LagrangianSubspace(s), phase_vector_from_json(s.modulus(), j.at("rep")));
}

Json to_json(const CycNumber& x) {
  Json coeffs = Json::array();
  for (size_t k = 0; k < x.numerators().size(); ++k)
    coeffs.push_back(rational_pair(x.coefficient(static_cast<int>(k))));
  return Json{{"m", x.conductor()}, {"coeffs", coeffs}};
}

CycNumber cyc_from_json(const Json& j) {
  const int m = j.at("m").get<int>();
  CycNumber out(m);
  const auto& coeffs = j.at("coeffs");
  for (size_t k = 0; k < coeffs.size(); ++k) {
    BigRational q(big_from_json(coeffs[k][0]), big_from_json(coeffs[k][1]));
    if (q != 0) out += CycNumber::zeta(m, static_cast<int64_t>(k)) * q;
  }
  return out;
}

Json to_json(const OpMatrix& a) {
  Json entries = Json::array();
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) entries.push_back(to_json(a(r, c)).at("coeffs"));
  return Json{{"dim", a.dim()}, {"conductor", a.conductor()}, {"entries", entries}};
}

OpMatrix op_matrix_from_json(const Json& j) {
  const int dim = j.at("dim").get<int>();
  const int m = j.at("conductor").get<int>();
  const auto& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != dim * dim) throw DimensionMismatch("entry count");
  OpMatrix out(dim, m);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      out.at(r, c) = cyc_from_json(Json{{"m", m}, {"coeffs", entries[static_cast<size_t>(r) * dim + c]}});
  return out;
}

std::string gram_csv(const GramMatrix& g) {
  std::ostringstream os;
  for (int i = 0; i < g.size; ++i) {
    for (int j = 0; j < g.size; ++j) {
      if (j) os << ',';
      os << to_string(g(i, j));
    }
    os << '\n';
  }
  return os.str();
}

Json gram_multiset_json(const GramMatrix& g) {
  Json out = Json::array();
  for (const auto& [value, count] : g.multiset())
    out.push_back(Json{{"value", to_string(value)}, {"count", count}});
  return out;
}

Json to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.strong_generators()) gens.push_back(perm_json(p));
  return Json{{"degree", g.degree()},
              {"base", g.base()},
              {"strong_generators", gens},
              {"order", big_to_json(g.order())}};
}

Json to_json(const ExtCliffordElement& e) {
  return Json{{"mu", e.mu}, {"a", to_json(e.a)}, {"S", to_json(e.s)}, {"alpha", e.alpha}};
}

Json to_json(const DesignReport& r) {
  return Json{{"predicate", r.predicate},
              {"pass", r.pass},
              {"constants", rational_list(r.constants)},
              {"witness", r.witness},
              {"detail", r.detail}};
}

Json to_json(const ConditionReport& r) {
  Json clauses = Json::array();
  for (const auto& c : r.clauses)
    clauses.push_back(Json{{"clause", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return Json{{"condition", r.condition},
              {"pass", r.pass},
              {"dir_dimension", r.dir_dimension},
              {"clauses", clauses}};
}

Json to_json(const SymmetryReport& r, bool with_timing) {
  Json gens = Json::array();
  for (const auto& p : r.automorphisms.generators) gens.push_back(perm_json(p));
  Json j{{"d", r.d},
         {"n", r.n},
         {"variant", to_string(r.variant)},
         {"states", r.states},
         {"computed_order", big_to_json(r.computed_order)},
         {"schreier_sims_order", big_to_json(r.schreier_sims_order)},
         {"predicted_order", big_to_json(r.predicted_order)},
         {"predicted", r.predicted_description},
         {"certified", r.certified},
         {"predicted_preserve_gram", r.predicted_preserve_gram},
         {"predicted_in_computed", r.predicted_in_computed},
         {"computed_in_predicted", r.computed_in_predicted},
         {"basis_partition_preserved", r.basis_partition_preserved},
         {"match", r.match},
         {"witness", r.witness ? Json(*r.witness) : Json(nullptr)},
         {"base", r.automorphisms.base},
         {"orbit_lengths", r.automorphisms.orbit_lengths},
         {"generators", gens},
         {"search_nodes", r.automorphisms.nodes}};
  if (with_timing) j["seconds"] = r.automorphisms.seconds;
  return j;
}

Json to_json(const DirectSumReport& r) {
  Json values = Json::array();
  for (const auto& [v, c] : r.overlap_values) values.push_back(Json{{"value", to_string(v)}, {"count", c}});
  return Json{{"d", r.d},
              {"pass", r.pass},
              {"overlap_table", r.table_ok},
              {"line_sums_vanish", r.line_sums_vanish},
              {"blocks_orthogonal", r.blocks_orthogonal},
              {"overlap_values", values},
              {"detail", r.detail}};
}

Json to_json(const FacetReport& r) {
  Json j{{"d", r.d},
         {"pass", r.pass},
         {"facet_count", r.facet_count},
         {"distinct", r.distinct},
         {"supporting", r.supporting}};
  if (r.min_vertices_per_facet == r.max_vertices_per_facet)
    j["vertices_per_facet"] = r.min_vertices_per_facet;
  else
    j["vertices_per_facet"] = Json{{"min", r.min_vertices_per_facet}, {"max", r.max_vertices_per_facet}};
  j["detail"] = r.detail;
  return j;
}

Json to_json(const Membership& m) {
  return Json{{"inside", m.inside},
              {"interior", m.interior},
              {"min_facet_value", to_string(m.min_value)},
              {"violated_facet", m.violated ? Json(*m.violated) : Json(nullptr)}};
}

Json to_json(const SfReport& r) {
  return Json{{"b", to_json(r.b)},
              {"states", r.states},
              {"pairwise_positive", r.pairwise_positive},
              {"constant", to_string(r.constant)},
              {"exact", r.exact}};
}

}  // namespace stabsym
