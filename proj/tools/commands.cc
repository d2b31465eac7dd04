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

#include "commands.h"

#include <algorithm>

#include "stabsym/errors.h"
#include "stabsym/zmod.h"

namespace stabsym::cli {

namespace {

Json header(const char* command, const RunConfig& c) {
  return Json{{"command", command}, {"d", c.d}, {"n", c.n}, {"seed", c.seed}};
}

int worst(int a, int b) { return std::max(a, b); }

Variant variant_of(const RunConfig& c) {
  if (c.variant.empty()) return default_variant(c.d, c.n);
  auto v = parse_variant(c.variant);
  if (!v) throw std::invalid_argument("unknown variant " + c.variant);
  return *v;
}

uint64_t ipow(uint64_t b, int e) {
  uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

OperatorSet state_set(const RunConfig& c, Variant v) {
  OperatorSet q;
  if (v == Variant::kRealClifford) {
    q.elements = rebit_states(c.n).projectors;
  } else {
    for (const auto& l : enumerate_stabilizer_labels(c.d, c.n)) q.elements.push_back(projector(l));
  }
  return q;
}

Json check_entry(const std::string& name, bool expected, bool observed, Json detail) {
  return Json{{"check", name}, {"expected", expected}, {"observed", observed},
              {"pass", expected == observed}, {"report", std::move(detail)}};
}

}  // namespace

Outcome run_enumerate(const RunConfig& c) {
  Outcome o;
  o.report = header("enumerate", c);
  auto lags = enumerate_lagrangians(c.d, c.n);
  auto labels = enumerate_stabilizer_labels(c.d, c.n);
  const uint64_t expect_l = lagrangian_count(c.d, c.n);
  const uint64_t expect_s = expect_l * ipow(c.d, c.n);
  Json lj = Json::array();
  for (const auto& l : lags) lj.push_back(to_json(l.subspace()));
  Json sj = Json::array();
  for (const auto& s : labels) sj.push_back(to_json(s));
  o.report["lagrangian_count"] = lags.size();
  o.report["state_count"] = labels.size();
  o.report["expected_lagrangian_count"] = expect_l;
  o.report["expected_state_count"] = expect_s;
  const bool pass = lags.size() == expect_l && labels.size() == expect_s;
  o.report["pass"] = pass;
  o.report["lagrangians"] = lj;
  o.report["states"] = sj;
  o.code = pass ? kPass : kMismatch;
  return o;
}

Outcome run_gram(const RunConfig& c) {
  Outcome o;
  o.report = header("gram", c);
  Variant v = variant_of(c);
  o.report["variant"] = to_string(v);
  StateSet states = v == Variant::kRealClifford ? rebit_states(c.n) : stabilizer_states(c.d, c.n, false);
  GramMatrix g = states.gram();
  o.report["size"] = g.size;
  o.report["multiset"] = gram_multiset_json(g);
  bool pass = true;
  if (c.check && v != Variant::kRealClifford) {
    StateSet full = stabilizer_states(c.d, c.n, true);
    GramMatrix brute = build_gram(full.projectors);
    const bool same = brute.values == g.values;
    o.report["brute_force_agrees"] = same;
    pass = same;
  }
  o.report["pass"] = pass;
  if (c.format == "csv") o.csv = gram_csv(g);
  o.code = pass ? kPass : kMismatch;
  return o;
}

Outcome run_autgroup(const RunConfig& c) {
  Outcome o;
  Variant v = variant_of(c);
  SymmetryReport r = verify_symmetry_group(c.d, c.n, v);
  o.report = header("autgroup", c);
  const Json body = to_json(r, c.timing);
  for (const auto& [k, val] : body.items())
    if (k != "d" && k != "n") o.report[k] = val;
  if (v == Variant::kAgsp) {
    AgspFactors f = certify_agsp_factors(c.d, c.n);
    o.report["factors"] = Json{{"translations", big_to_json(f.translations)},
                               {"symplectic", big_to_json(f.symplectic)},
                               {"similitudes", big_to_json(f.similitudes)},
                               {"product", big_to_json(f.product)},
                               {"product_matches", f.product == r.computed_order}};
    if (f.product != r.computed_order) r.match = false;
  }
  if (c.n == 1 && v == Variant::kWreath) {
    // (d!)^{d+1} (d+1)!
    BigInt expect = 1, fact = 1;
    for (int i = 2; i <= c.d; ++i) fact *= i;
    for (int i = 0; i <= c.d; ++i) expect *= fact;
    expect *= fact * (c.d + 1);
    o.report["formula_order"] = big_to_json(expect);
    if (expect != r.computed_order) r.match = false;
  }
  o.report["match"] = r.match;
  o.code = !r.certified ? kBudget : (r.match ? kPass : kMismatch);
  return o;
}

Outcome run_verify_design(const RunConfig& c) {
  Outcome o;
  o.report = header("verify-design", c);
  Variant v = variant_of(c);
  o.report["variant"] = to_string(v);
  OperatorSet q = state_set(c, v);
  o.report["states"] = q.elements.size();
  Json checks = Json::array();
  if (v == Variant::kRealClifford) {
    auto basis = symmetric_basis(c.n);
    auto r4 = is_real_4design(q, basis);
    auto r6 = is_real_6design(q, basis);
    checks.push_back(check_entry("real_4design", true, r4.pass, to_json(r4)));
    checks.push_back(check_entry("real_6design", true, r6.pass, to_json(r6)));
  } else {
    auto basis = hermitian_basis(c.d, c.n);
    auto r2 = is_complex_2design(q, basis);
    auto r3 = is_complex_3design(q, basis);
    checks.push_back(check_entry("complex_2design", true, r2.pass, to_json(r2)));
    checks.push_back(check_entry("complex_3design", c.d == 2, r3.pass, to_json(r3)));
  }
  auto wig = check_lin_wig_condition(q);
  auto jor = check_lin_jor_condition(q);
  const bool jor_expected = c.d == 2 || v == Variant::kRealClifford;
  checks.push_back(check_entry("lin_in_wig", true, wig.pass, to_json(wig)));
  checks.push_back(check_entry("lin_in_jor", jor_expected, jor.pass, to_json(jor)));
  bool pass = std::all_of(checks.begin(), checks.end(), [](const Json& j) { return j["pass"].get<bool>(); });
  o.report["checks"] = checks;
  o.report["pass"] = pass;
  o.code = pass ? kPass : kMismatch;
  return o;
}

Outcome run_verify_clifford(const RunConfig& c) {
  Outcome o;
  o.report = header("verify-clifford", c);
  o.report["samples"] = c.samples;
  Json checks = Json::array();
  bool pass = true;
  auto add = [&](const std::string& name, bool ok, size_t cases, Json witness) {
    checks.push_back(Json{{"check", name}, {"pass", ok}, {"cases", cases}, {"witness", std::move(witness)}});
    pass = pass && ok;
  };

  if (c.d == 2) {
    auto got = qubit_wreath_table();
    auto want = qubit_wreath_table_expected();
    Json rows = Json::array();
    bool ok = got.size() == want.size();
    for (size_t i = 0; i < got.size(); ++i) {
      const bool row_ok = i < want.size() && got[i].generator == want[i].generator &&
                          got[i].coordinates == want[i].coordinates;
      ok = ok && row_ok;
      rows.push_back(Json{{"generator", got[i].generator}, {"coordinates", got[i].coordinates}, {"pass", row_ok}});
    }
    add("qubit_wreath_table", ok, got.size(), nullptr);
    o.report["table"] = rows;
  } else {
    const int m = conductor_for(c.d);
    std::vector<PhaseVector> points;
    for (size_t k = 0; k < ipow(c.d, 2 * c.n); ++k) points.push_back(PhaseVector::from_index(c.d, c.n, k));
    std::vector<OpMatrix> a;
    for (const auto& x : points) a.push_back(phase_point(x));

    bool comp = true, fg = true, adj = true;
    Json comp_w = nullptr, fg_w = nullptr, adj_w = nullptr;
    for (int s = 0; s < c.samples; ++s) {
      auto g = random_ext_element(c.d, c.n, c.seed * 1000003ULL + 2 * s);
      auto h = random_ext_element(c.d, c.n, c.seed * 1000003ULL + 2 * s + 1);
      auto hg = ext_compose(h, g);
      if (comp && !(ext_element_matrix(hg) == ext_element_matrix(h) * ext_element_matrix(g))) {
        comp = false;
        comp_w = Json{{"h", to_json(h)}, {"g", to_json(g)}};
      }
      if (fg && !(to_agsp(hg) == agsp_compose(to_agsp(h), to_agsp(g)))) {
        fg = false;
        fg_w = Json{{"h", to_json(h)}, {"g", to_json(g)}};
      }
      // Adjoint action on a few phase-point operators per sample.
      ExtOperator u = ext_element_matrix(g);
      AffineSimilitude t = to_agsp(g);
      for (size_t k = static_cast<size_t>(s) % points.size(); adj && k < points.size(); k += 7) {
        PhaseVector y = apply_affine_similitude(t, points[k]);
        if (!(u.conjugate(a[k]) == a[y.index()])) {
          adj = false;
          adj_w = Json{{"g", to_json(g)}, {"x", to_json(points[k])}};
        }
      }
    }
    add("ext_composition_law", comp, static_cast<size_t>(c.samples), comp_w);
    add("forgetful_map_homomorphism", fg, static_cast<size_t>(c.samples), fg_w);
    add("adjoint_action_on_phase_points", adj, static_cast<size_t>(c.samples), adj_w);

    bool gal = true;
    Json gal_w = nullptr;
    size_t gal_cases = 0;
    for (int alpha = 1; alpha < c.d; ++alpha) {
      ZModMatrix k = k_alpha(c.d, c.n, alpha);
      const int u = galois_exponent(alpha, c.d, m);
      for (size_t i = 0; i < points.size(); ++i, ++gal_cases) {
        if (gal && !(a[i].galois(u) == a[apply(k, points[i]).index()])) {
          gal = false;
          gal_w = Json{{"alpha", alpha}, {"x", to_json(points[i])}};
        }
      }
    }
    add("galois_action_on_phase_points", gal, gal_cases, gal_w);

    bool tr = true;
    Json tr_w = nullptr;
    ZModMatrix km = k_alpha(c.d, c.n, c.d - 1);
    for (size_t i = 0; i < points.size(); ++i)
      if (tr && !(a[i].transpose() == a[apply(km, points[i]).index()])) {
        tr = false;
        tr_w = Json{{"x", to_json(points[i])}};
      }
    add("transpose_is_k_minus_one", tr, points.size(), tr_w);
  }
  o.report["checks"] = checks;
  o.report["pass"] = pass;
  o.code = pass ? kPass : kMismatch;
  return o;
}

Outcome run_facets(const RunConfig& c) {
  Outcome o;
  o.report = header("facets", c);
  if (c.n != 1) throw std::invalid_argument("facets needs --n 1");
  auto ds = direct_sum_check(c.d);
  auto fr = check_facets(c.d);
  const int m = conductor_for(c.d);
  auto center = polytope_membership(OpMatrix::identity(c.d, m) * BigRational(1, c.d), c.d);
  auto vertex = polytope_membership(shifted_vertices(c.d).front().matrix +
                                        OpMatrix::identity(c.d, m) * BigRational(1, c.d),
                                    c.d);
  auto negative = polytope_membership(wigner_negative_state(c.d), c.d);
  o.report["facet_count"] = fr.facet_count;
  o.report["supporting"] = fr.supporting;
  o.report["vertices_per_facet"] = to_json(fr)["vertices_per_facet"];
  o.report["direct_sum"] = to_json(ds);
  o.report["facets"] = to_json(fr);
  o.report["membership"] = Json{{"maximally_mixed", to_json(center)},
                                {"stabilizer_vertex", to_json(vertex)},
                                {"wigner_negative", to_json(negative)}};
  const bool pass = ds.pass && fr.pass && center.interior && vertex.inside && !vertex.interior &&
                    !negative.inside;
  o.report["pass"] = pass;
  o.code = pass ? kPass : kMismatch;
  return o;
}

Outcome run_report(const RunConfig& c) {
  Outcome o;
  o.report = header("report", c);
  Json parts = Json::object();
  int code = kPass;
  auto run = [&](const char* name, Outcome (*f)(const RunConfig&)) {
    Outcome part = f(c);
    part.report.erase("lagrangians");
    part.report.erase("states");
    parts[name] = part.report;
    code = worst(code, part.code);
  };
  run("enumerate", run_enumerate);
  run("gram", run_gram);
  run("autgroup", run_autgroup);
  run("verify-design", run_verify_design);
  if (c.d == 2 ? c.n == 1 : true) run("verify-clifford", run_verify_clifford);
  if (c.n == 1 && c.d != 2) run("facets", run_facets);
  o.report["parts"] = parts;
  o.report["pass"] = code == kPass;
  o.code = code;
  return o;
}

}  // namespace stabsym::cli
