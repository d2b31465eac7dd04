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

// Acceptance suite: one line per criterion, nonzero exit if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.h"
#include "stabsym/clifford.h"
#include "stabsym/moments.h"
#include "stabsym/polytope1.h"
#include "stabsym/qubit.h"
#include "stabsym/symmetry.h"

using namespace stabsym;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes << " FAILED(" << what << ")";
    }
  }
};

BigInt factorial(int k) {
  BigInt r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

BigInt sp_order(int d, int n) {
  BigInt r = 1;
  for (int i = 0; i < n * n; ++i) r *= d;
  for (int k = 1; k <= n; ++k) {
    BigInt t = 1;
    for (int i = 0; i < 2 * k; ++i) t *= d;
    r *= t - 1;
  }
  return r;
}

std::vector<OpMatrix> projectors_of(int d, int n) {
  std::vector<OpMatrix> out;
  for (const auto& l : enumerate_stabilizer_labels(d, n)) out.push_back(projector(l));
  return out;
}

oracle::Point as_point(const PhaseVector& v) { return {v.coords().begin(), v.coords().end()}; }

// ---------------------------------------------------------------------------------------------

void enumeration(Verdict& v) {
  struct Case {
    int d, n;
    size_t lags, states;
  };
  for (Case c : {Case{2, 1, 3, 6}, Case{3, 1, 4, 12}, Case{5, 1, 6, 30}, Case{2, 2, 15, 60},
                 Case{3, 2, 40, 360}}) {
    auto lib = enumerate_lagrangians(c.d, c.n);
    auto labels = enumerate_stabilizer_labels(c.d, c.n);
    auto brute = oracle::lagrangians(c.d, c.n);
    std::set<std::vector<int64_t>> lib_sets;
    for (const auto& l : lib) {
      std::vector<int64_t> s;
      for (const auto& e : l.subspace().elements()) s.push_back(oracle::code(as_point(e), c.d));
      std::sort(s.begin(), s.end());
      lib_sets.insert(s);
    }
    const int64_t brute_states = oracle::states_from_lagrangians(brute, c.d, c.n);
    std::set<StabilizerLabel> distinct(labels.begin(), labels.end());
    const std::string tag = "(" + std::to_string(c.d) + "," + std::to_string(c.n) + ")";
    v.require(lib.size() == c.lags && brute.size() == c.lags, tag + " lagrangians");
    v.require(lib_sets == brute, tag + " lagrangian sets");
    v.require(labels.size() == c.states && distinct.size() == c.states &&
                  brute_states == static_cast<int64_t>(c.states),
              tag + " states");
    v.notes << ' ' << tag << ' ' << lib.size() << '/' << labels.size();
  }
}

void operator_identities(Verdict& v) {
  std::mt19937_64 rng(20261016);
  auto check_pair = [&](int d, int n, const oracle::Point& a, const oracle::Point& b) {
    const int m = oracle::conductor(d);
    const int64_t tau = int64_t{m / d} * ((d + 1) / 2);
    const int ab = oracle::form(a, b, d);
    auto ta = oracle::weyl(a, d), tb = oracle::weyl(b, d);
    auto tab = oracle::weyl(oracle::add(a, b, d), d);
    const bool comp = oracle::same(oracle::mul(ta, tb), oracle::scale(tab, -tau * ab));
    const bool comm = oracle::same(oracle::mul(ta, tb), oracle::scale(oracle::mul(tb, ta), -int64_t{m / d} * ab));
    PhaseVector pa(d, a), pb(d, b);
    OpMatrix la = weyl(pa), lb = weyl(pb);
    const bool lib_comp = la * lb == weyl(pa + pb) * CycNumber::zeta(m, -tau * ab);
    const bool agrees = la == oracle::to_matrix(ta);
    return comp && comm && lib_comp && agrees;
  };
  {
    const int d = 3, n = 1;
    bool ok = true;
    for (int64_t i = 0; i < 9; ++i)
      for (int64_t j = 0; j < 9; ++j) ok = ok && check_pair(d, n, oracle::point(d, n, i), oracle::point(d, n, j));
    v.require(ok, "(3,1) exhaustive laws");
    v.notes << " (3,1) 81 pairs";
  }
  for (auto [d, n] : {std::pair{3, 2}, std::pair{5, 1}}) {
    const int64_t pts = oracle::ipow(d, 2 * n);
    bool ok = true;
    for (int s = 0; s < 500; ++s)
      ok = ok && check_pair(d, n, oracle::point(d, n, static_cast<int64_t>(rng() % pts)),
                            oracle::point(d, n, static_cast<int64_t>(rng() % pts)));
    v.require(ok, "sampled laws");
    v.notes << " (" << d << "," << n << ") 500 samples";
  }
  for (int d : {3, 5}) {
    const int64_t pts = oracle::ipow(d, 2);
    std::vector<OpMatrix> t, a;
    bool agrees = true;
    for (int64_t k = 0; k < pts; ++k) {
      oracle::Point p = oracle::point(d, 1, k);
      t.push_back(weyl(PhaseVector(d, p)));
      a.push_back(phase_point(PhaseVector(d, p)));
      agrees = agrees && a.back() == oracle::phase_point(p, d);
    }
    bool orth = true;
    for (int64_t i = 0; i < pts; ++i)
      for (int64_t j = 0; j < pts; ++j) {
        const CycNumber expect(oracle::conductor(d), BigRational(i == j ? d : 0));
        orth = orth && hs_inner(t[i], t[j]) == expect && hs_inner(a[i], a[j]) == expect;
      }
    // A(0) is the parity operator |q> -> |-q>.
    OpMatrix parity(d, oracle::conductor(d));
    for (int q = 0; q < d; ++q) parity.at((d - q) % d, q) = CycNumber::one(oracle::conductor(d));
    v.require(agrees && orth && a[0] == parity, "orthogonality d=" + std::to_string(d));
  }
  v.notes << "; orthogonality exhaustive at (3,1), (5,1)";
}

void gram_formula(Verdict& v) {
  const int d = 3, n = 2;
  auto labels = enumerate_stabilizer_labels(d, n);
  std::vector<OpMatrix> p;
  for (const auto& l : labels) p.push_back(stab_projector(l));
  // Projectors also agree with the phase-point form on a sample of labels.
  for (size_t i = 0; i < labels.size(); i += 37) v.require(p[i] == stab_projector_from_points(labels[i]), "point form");
  std::map<BigRational, size_t> multiset;
  bool ok = true;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i; j < p.size(); ++j) {
      CycNumber t = trace_product(p[i], p[j]);
      const BigRational closed = gram_closed_form(labels[i], labels[j]);
      if (!t.is_rational() || t.rational() != closed) ok = false;
      multiset[closed] += i == j ? 1 : 2;
    }
  v.require(ok, "closed form equals trace");
  std::map<BigRational, size_t> expect{{BigRational(0), 28800}, {BigRational(1, 9), 87480},
                                       {BigRational(1, 3), 12960}, {BigRational(1), 360}};
  v.require(multiset == expect, "value multiset");
  v.notes << " 360^2 pairs; multiset 0:" << multiset[0] << " 1/9:" << multiset[BigRational(1, 9)]
          << " 1/3:" << multiset[BigRational(1, 3)] << " 1:" << multiset[1];
}

void wreath_case(Verdict& v) {
  for (int d : {2, 3, 5}) {
    auto r = verify_symmetry_group(d, 1, Variant::kWreath);
    const BigInt expect = [&] {
      BigInt f = factorial(d), e = factorial(d + 1);
      for (int i = 0; i <= d; ++i) e *= f;
      return e;
    }();
    // Line partition from the labels, independent of the library's wreath helpers.
    auto labels = stabilizer_states(d, 1, false).labels;
    bool partition = true;
    for (const auto& g : r.automorphisms.generators)
      for (size_t i = 0; i < labels.size(); ++i)
        for (size_t j = 0; j < labels.size(); ++j) {
          const bool same_in = labels[i].lagrangian == labels[j].lagrangian;
          const bool same_out = labels[g[i]].lagrangian == labels[g[j]].lagrangian;
          partition = partition && same_in == same_out;
        }
    const std::string tag = "d=" + std::to_string(d);
    v.require(r.certified && r.computed_order == expect && r.schreier_sims_order == expect, tag + " order");
    v.require(r.match && partition, tag + " containment/partition");
    v.notes << ' ' << tag << ':' << r.computed_order;
  }
}

bool preserves(const std::vector<OpMatrix>& states, const Perm& g) {
  for (size_t i = 0; i < states.size(); ++i)
    for (size_t j = i; j < states.size(); ++j)
      if (!(trace_product(states[i], states[j]) == trace_product(states[g[i]], states[g[j]]))) return false;
  return true;
}

void qubit_clifford_case(Verdict& v) {
  auto r = verify_symmetry_group(2, 2, Variant::kExtendedClifford);
  // |Sp(4,2)| * 2^4 translations * 2 for transposition.
  const BigInt expect = sp_order(2, 2) * 16 * 2;
  auto states = stabilizer_states(2, 2, true).projectors;
  bool gram_ok = true;
  for (const auto& g : r.automorphisms.generators) gram_ok = gram_ok && preserves(states, g);
  v.require(expect == 23040 && r.certified && r.computed_order == expect, "order");
  v.require(r.predicted_in_computed && r.computed_in_predicted && r.predicted_order == expect, "mutual containment");
  v.require(gram_ok, "generators preserve traces");
  v.notes << " order " << r.computed_order << ", mutual containment " << (r.match ? "yes" : "no");
}

void agsp_case(Verdict& v) {
  auto r = verify_symmetry_group(3, 2, Variant::kAgsp);
  auto f = certify_agsp_factors(3, 2);
  v.require(f.translations == 81 && f.symplectic == sp_order(3, 2) && f.similitudes == 2, "factors");
  v.require(r.certified && r.computed_order == BigInt(8398080) && f.product == r.computed_order, "order");
  v.require(r.predicted_in_computed && r.computed_in_predicted, "mutual containment");
  v.notes << " order " << r.computed_order << " = " << f.translations << "*" << f.symplectic << "*"
          << f.similitudes;
}

void rebit_case(Verdict& v) {
  auto r = verify_symmetry_group(2, 2, Variant::kRealClifford);
  auto orbit = real_clifford_orbit(2);
  v.require(orbit.projectors.size() == rational_qubit_projectors(2).size() && orbit.projectors.size() == 24,
            "rebit orbit");
  v.require(r.certified && r.computed_order == r.predicted_order, "equal order");
  v.require(r.predicted_in_computed && r.computed_in_predicted, "mutual containment");
  v.notes << " " << orbit.projectors.size() << " rebits, order " << r.computed_order;
}

BigRational frame_potential(const std::vector<OpMatrix>& q, int t) {
  BigRational s = 0;
  for (const auto& a : q)
    for (const auto& b : q) {
      BigRational g = trace_product(a, b).rational(), p = 1;
      for (int i = 0; i < t; ++i) p *= g;
      s += p;
    }
  return s / static_cast<int64_t>(q.size() * q.size());
}

void designs(Verdict& v) {
  for (auto [d, n] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{5, 1}}) {
    OperatorSet q{projectors_of(d, n)};
    auto basis = hermitian_basis(d, n);
    auto r2 = is_complex_2design(q, basis);
    auto r3 = is_complex_3design(q, basis);
    const int64_t dim = oracle::ipow(d, n);
    // Complex t-design iff the frame potential reaches 1 / binom(D+t-1, t).
    const bool fp2 = frame_potential(q.elements, 2) == BigRational(2, dim * (dim + 1));
    const bool fp3 = frame_potential(q.elements, 3) > BigRational(6, dim * (dim + 1) * (dim + 2));
    v.require(r2.pass && fp2, "2-design");
    v.require(!r3.pass && r3.witness.size() == 3 && fp3, "3-design fails with witness");
    v.notes << " (" << d << "," << n << ") 2:pass 3:fail@(" << r3.witness[0] << "," << r3.witness[1] << ","
            << r3.witness[2] << ")";
  }
  for (int n : {1, 2}) {
    OperatorSet q{projectors_of(2, n)};
    auto r3 = is_complex_3design(q, hermitian_basis(2, n));
    const int64_t dim = oracle::ipow(2, n);
    v.require(r3.pass && frame_potential(q.elements, 3) == BigRational(6, dim * (dim + 1) * (dim + 2)),
              "qubit 3-design");
  }
  v.notes << "; qubits 3:pass";
  for (int n : {1, 2}) {
    OperatorSet q{real_clifford_orbit(n).projectors};
    auto basis = symmetric_basis(n);
    auto r4 = is_real_4design(q, basis);
    auto r6 = is_real_6design(q, basis);
    const int64_t dim = oracle::ipow(2, n);
    // Antipodal real designs: averages of <x,y>^{2k} equal (2k-1)!! / (D(D+2)...(D+2k-2)).
    const bool fp4 = frame_potential(q.elements, 2) == BigRational(3, dim * (dim + 2));
    const bool fp6 = frame_potential(q.elements, 3) == BigRational(15, dim * (dim + 2) * (dim + 4));
    v.require(r4.pass && fp4 && r4.constants.size() == 1 && r4.constants[0] == BigRational(1, dim * (dim + 2)),
              "real 4-design");
    bool positive = r6.constants.size() == 3;
    for (const auto& k : r6.constants) positive = positive && k > 0;
    v.require(r6.pass && positive && fp6, "real 6-design");
    if (n == 2) {
      const int64_t norm = dim * (dim + 2) * (dim + 4);
      v.require(r6.constants == std::vector<BigRational>{BigRational(1, norm), BigRational(2, norm),
                                                         BigRational(4, norm)},
                "real 6-design constants");
    }
    v.notes << "; rebits n=" << n << " K=" << r4.constants[0] << " K'=" << r6.constants[0] << ","
            << r6.constants[1] << "," << r6.constants[2];
  }
}

void conditions(Verdict& v) {
  auto expect = [&](const OperatorSet& q, bool wig, bool jor, const std::string& tag) {
    auto w = check_lin_wig_condition(q);
    auto j = check_lin_jor_condition(q);
    v.require(w.pass == wig && j.pass == jor, tag);
    v.notes << ' ' << tag << ':' << (w.pass ? 'W' : '-') << (j.pass ? 'J' : '-');
  };
  for (auto [d, n] : {std::pair{3, 1}, std::pair{5, 1}, std::pair{3, 2}})
    expect(OperatorSet{projectors_of(d, n)}, true, false,
           "stab(" + std::to_string(d) + "," + std::to_string(n) + ")");
  for (int n : {1, 2}) expect(OperatorSet{projectors_of(2, n)}, true, true, "qubit n=" + std::to_string(n));
  for (int n : {1, 2}) expect(OperatorSet{real_clifford_orbit(n).projectors}, true, true, "rebit n=" + std::to_string(n));
  OperatorSet points;
  for (int64_t k = 0; k < 9; ++k) points.elements.push_back(oracle::phase_point(oracle::point(3, 1, k), 3));
  auto w = check_lin_wig_condition(points);
  v.require(w.pass, "phase points");
  v.notes << " A(3,1):" << (w.pass ? 'W' : '-');
}

// Wreath coordinates of a single-qubit conjugation, read off the six axis states directly.
std::string qubit_coordinates(const std::function<OpMatrix(const OpMatrix&)>& act) {
  const int m = 8;
  const OpMatrix one = OpMatrix::identity(2, m);
  const oracle::Point axes[3] = {{1, 0}, {1, 1}, {0, 1}};  // X, Y, Z
  std::vector<OpMatrix> states;  // (axis, sign) -> index 2*axis + (sign < 0)
  for (const auto& p : axes) {
    OpMatrix pauli = oracle::to_matrix(oracle::weyl(p, 2));
    states.push_back((one + pauli) * BigRational(1, 2));
    states.push_back((one - pauli) * BigRational(1, 2));
  }
  int target_axis[3], flip[3];
  for (int axis = 0; axis < 3; ++axis) {
    OpMatrix image = act(states[2 * axis]);
    for (int k = 0; k < 6; ++k)
      if (image == states[k]) {
        target_axis[axis] = k / 2;
        flip[axis] = k % 2;
      }
  }
  const char* names = "XYZ";
  std::string sigma = "e";
  for (int a = 0; a < 3; ++a)
    if (target_axis[a] != a) {
      sigma = std::string("t_") + names[std::min(a, target_axis[a])] + names[std::max(a, target_axis[a])];
      break;
    }
  std::string out = "[" + sigma + ";";
  for (int a = 0; a < 3; ++a) out += std::string(a ? ", " : " ") + (flip[a] ? "t" : "e");
  return out + "]";
}

void clifford_laws(Verdict& v) {
  for (int d : {3, 5}) {
    bool ok = true;
    for (int s = 0; s < 100; ++s) {
      auto g = random_ext_element(d, 1, 7000 + 2 * s);
      auto h = random_ext_element(d, 1, 7001 + 2 * s);
      ok = ok && ext_element_matrix(ext_compose(h, g)) == ext_element_matrix(h) * ext_element_matrix(g);
    }
    v.require(ok, "composition d=" + std::to_string(d));
  }
  v.notes << " composition 100 samples at d=3,5;";
  {
    const int d = 5, m = oracle::conductor(d);
    bool ok = true;
    for (int alpha = 1; alpha < d; ++alpha) {
      int u = 0;  // u = alpha mod d, u = 1 mod 4
      for (int c = 1; c < m; ++c)
        if (c % d == alpha && c % 4 == 1) u = c;
      for (int64_t k = 0; k < d * d; ++k) {
        oracle::Point x = oracle::point(d, 1, k);
        oracle::Point kx{x[0], (x[1] * alpha) % d};
        ok = ok && oracle::phase_point(x, d).galois(u) == oracle::phase_point(kx, d);
      }
    }
    v.require(ok, "Galois action");
    v.notes << " Galois exhaustive at (5,1);";
  }
  {
    const int d = 3;
    bool ok = true;
    for (int64_t k = 0; k < d * d; ++k) {
      oracle::Point x = oracle::point(d, 1, k);
      oracle::Point kx{x[0], (d - x[1]) % d};
      ok = ok && oracle::phase_point(x, d).transpose() == oracle::phase_point(kx, d);
    }
    v.require(ok, "transpose");
    v.notes << " transpose exhaustive at (3,1);";
  }
  {
    const int m = 8;
    OpMatrix y = oracle::to_matrix(oracle::weyl({1, 1}, 2));
    OpMatrix z = oracle::to_matrix(oracle::weyl({0, 1}, 2));
    OpMatrix x = oracle::to_matrix(oracle::weyl({1, 0}, 2));
    // 1/sqrt2 = (zeta_8 + zeta_8^{-1}) / 2.
    CycNumber inv_sqrt2 = (CycNumber::zeta(m, 1) + CycNumber::zeta(m, 7)) * BigRational(1, 2);
    OpMatrix h = (x + z) * inv_sqrt2;
    OpMatrix s(2, m);
    s.at(0, 0) = CycNumber::one(m);
    s.at(1, 1) = CycNumber::zeta(m, 2);
    auto by = [](const OpMatrix& u) { return [u](const OpMatrix& r) { return u * r * u.adjoint(); }; };
    const std::vector<std::pair<std::string, std::string>> table = {
        {"complex conjugation", "[e; e, t, e]"}, {"conjugation by Y", "[e; t, e, t]"},
        {"conjugation by Z", "[e; t, t, e]"},    {"conjugation by H", "[t_XZ; e, t, e]"},
        {"conjugation by S", "[t_XY; e, t, e]"}};
    const std::vector<std::function<OpMatrix(const OpMatrix&)>> acts = {
        [](const OpMatrix& r) { return r.conj(); }, by(y), by(z), by(h), by(s)};
    auto lib = qubit_wreath_table();
    bool ok = lib.size() == table.size();
    for (size_t i = 0; i < table.size(); ++i) {
      const std::string mine = qubit_coordinates(acts[i]);
      ok = ok && mine == table[i].second && i < lib.size() && lib[i].generator == table[i].first &&
           lib[i].coordinates == table[i].second;
    }
    v.require(ok, "qubit table");
    v.notes << " qubit table " << table.size() << " rows";
  }
}

void geometry(Verdict& v) {
  auto ds3 = direct_sum_check(3);
  auto ds5 = direct_sum_check(5);
  v.require(ds3.pass && ds5.pass, "direct sum");
  std::map<BigRational, size_t> want{{BigRational(-1, 3), 24}, {BigRational(0), 108}, {BigRational(2, 3), 12}};
  v.require(ds3.overlap_values == want, "overlap table values");
  auto fr = check_facets(3);
  v.require(fr.facet_count == 81 && fr.distinct && fr.supporting && fr.min_vertices_per_facet == 8 &&
                fr.max_vertices_per_facet == 8,
            "facets");
  // Wigner-negative state: rejected, and the reported facet really separates it.
  OpMatrix rho = wigner_negative_state(3);
  const BigRational w0 = trace_product(rho, oracle::phase_point({0, 0}, 3)).rational();
  auto mem = polytope_membership(rho, 3);
  bool witness_ok = false;
  if (mem.violated)
    for (const auto& f : facet_family(3))
      if (f.choice == *mem.violated) witness_ok = trace_product(rho, f.matrix).rational() < 0;
  v.require(w0 < 0 && !mem.inside && witness_ok, "negative state rejected");
  auto center = polytope_membership(OpMatrix::identity(3, 12) * BigRational(1, 3), 3);
  v.require(center.interior, "center inside");
  v.notes << " 81 facets, 8 vertices each, supporting; negative state violates facet [";
  if (mem.violated)
    for (int c : *mem.violated) v.notes << c;
  v.notes << "]";
}

void sum_rule(Verdict& v) {
  std::set<std::string> constants;
  for (int64_t k = 0; k < 9; ++k) {
    auto r = verify_sf_machinery(3, 1, PhaseVector(3, oracle::point(3, 1, k)));
    v.require(r.exact && r.constant == 1 && r.pairwise_positive, "(3,1) b=" + std::to_string(k));
  }
  // Independent sum at (3,1): for every b, sum over lines of d^{-1} sum_{c in L+b} A(c).
  {
    auto lines = oracle::lagrangians(3, 1);
    for (int64_t k = 0; k < 9; ++k) {
      oracle::Point b = oracle::point(3, 1, k);
      OpMatrix sum(3, 12);
      for (const auto& l : lines)
        for (int64_t e : l) sum += oracle::phase_point(oracle::add(oracle::point(3, 1, e), b, 3), 3) * BigRational(1, 3);
      v.require(sum == OpMatrix::identity(3, 12) + oracle::phase_point(b, 3), "oracle sum (3,1)");
    }
  }
  std::mt19937_64 rng(4242);
  for (int s = 0; s < 50; ++s) {
    auto r = verify_sf_machinery(3, 2, PhaseVector(3, oracle::point(3, 2, static_cast<int64_t>(rng() % 81))));
    v.require(r.exact && r.constant == 4, "(3,2) sample");
  }
  v.notes << " C=1 for all 9 b at (3,1); C=4 for 50 seeded b at (3,2)";
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<void(Verdict&)> run;
  };
  const Criterion criteria[] = {
      {"enumeration counts", enumeration},
      {"Weyl and phase-point operator identities", operator_identities},
      {"closed-form overlaps vs traces at (3,2)", gram_formula},
      {"n=1 symmetry group is S_d wr S_{d+1}", wreath_case},
      {"(2,2) symmetries are the extended Clifford adjoint group", qubit_clifford_case},
      {"(3,2) symmetries are AGSp(4,3)", agsp_case},
      {"rebit n=2 symmetries are the real Clifford adjoint group", rebit_case},
      {"design predicates", designs},
      {"linear-symmetry condition checks", conditions},
      {"extended Clifford laws and qubit table", clifford_laws},
      {"n=1 polytope geometry", geometry},
      {"line-sum rule", sum_rule},
  };
  int failures = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.notes << " threw: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!v.pass) ++failures;
    std::printf("criterion %02d %s %s:%s (%.2f s)\n", index, v.pass ? "PASS" : "FAIL", c.title,
                v.notes.str().c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
