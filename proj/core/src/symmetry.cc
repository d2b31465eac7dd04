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

#include "stabsym/symmetry.h"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace stabsym {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::kWreath:
      return "wreath";
    case Variant::kExtendedClifford:
      return "extended_clifford";
    case Variant::kAgsp:
      return "agsp";
    case Variant::kRealClifford:
      return "real_clifford";
  }
  return "?";
}

std::optional<Variant> parse_variant(const std::string& s) {
  for (Variant v : {Variant::kWreath, Variant::kExtendedClifford, Variant::kAgsp,
                    Variant::kRealClifford})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

Variant default_variant(int d, int n) {
  if (n == 1) return Variant::kWreath;
  return d == 2 ? Variant::kExtendedClifford : Variant::kAgsp;
}

GramMatrix StateSet::gram() const {
  if (!labels.empty()) return build_gram(labels);
  return build_gram(projectors);
}

StateSet stabilizer_states(int d, int n, bool with_matrices) {
  StateSet s;
  s.d = d;
  s.n = n;
  s.labels = enumerate_stabilizer_labels(d, n);
  if (with_matrices)
    for (const auto& l : s.labels) s.projectors.push_back(projector(l));
  return s;
}

StateSet rebit_states(int n) {
  StateSet s;
  s.d = 2;
  s.n = n;
  s.projectors = real_clifford_orbit(n).projectors;
  return s;
}

Perm induced_permutation(const std::vector<OpMatrix>& states,
                         const std::function<OpMatrix(const OpMatrix&)>& f) {
  std::unordered_map<std::string, int> index;
  for (size_t i = 0; i < states.size(); ++i)
    index.emplace(canonical_key(states[i]), static_cast<int>(i));
  Perm p(states.size());
  for (size_t i = 0; i < states.size(); ++i) {
    auto it = index.find(canonical_key(f(states[i])));
    if (it == index.end()) throw Mismatch("map does not preserve the state set");
    p[i] = it->second;
  }
  if (!is_permutation(p)) throw Mismatch("map is not injective on the state set");
  return p;
}

Perm induced_permutation(const std::vector<StabilizerLabel>& labels,
                         const std::function<StabilizerLabel(const StabilizerLabel&)>& f) {
  std::map<StabilizerLabel, int> index;
  for (size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], static_cast<int>(i));
  Perm p(labels.size());
  for (size_t i = 0; i < labels.size(); ++i) {
    auto it = index.find(f(labels[i]));
    if (it == index.end()) throw Mismatch("map does not preserve the label set");
    p[i] = it->second;
  }
  if (!is_permutation(p)) throw Mismatch("map is not injective on the label set");
  return p;
}

namespace {

std::vector<NamedPerm> wreath_generators(int d) {
  const int size = d * (d + 1);
  std::vector<NamedPerm> gens;
  Perm t = identity_perm(size);
  std::swap(t[0], t[1]);
  gens.push_back({"inner transposition", t});
  if (d > 2) {
    Perm c = identity_perm(size);
    for (int j = 0; j < d; ++j) c[j] = (j + 1) % d;
    gens.push_back({"inner cycle", c});
  }
  Perm bt = identity_perm(size), bc = identity_perm(size);
  for (int j = 0; j < d; ++j) {
    bt[j] = d + j;
    bt[d + j] = j;
  }
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j < d; ++j) bc[i * d + j] = ((i + 1) % (d + 1)) * d + j;
  gens.push_back({"block transposition", bt});
  gens.push_back({"block cycle", bc});
  return gens;
}

std::vector<NamedPerm> agsp_generators(const StateSet& s) {
  const int d = s.d, n = s.n;
  std::vector<NamedPerm> gens;
  auto add = [&](const std::string& name, const AffineSimilitude& t) {
    gens.push_back({name, induced_permutation(s.labels, [&](const StabilizerLabel& l) {
                      return apply_affine_similitude(t, l);
                    })});
  };
  const auto sp = sp_generators(d, n);
  for (size_t i = 0; i < sp.size(); ++i)
    add("Sp generator " + std::to_string(i), AffineSimilitude::linear(sp[i]));
  if (d > 2) {
    AffineSimilitude k = AffineSimilitude::identity(d, n);
    k.alpha = primitive_root(d);
    add("K_" + std::to_string(k.alpha), k);
  }
  for (int i = 0; i < 2 * n; ++i)
    add("translation e_" + std::to_string(i),
        AffineSimilitude::translation(PhaseVector::unit(d, n, i)));
  return gens;
}

std::vector<NamedPerm> conjugation_generators(const std::vector<OpMatrix>& states,
                                              const std::vector<NamedGate>& gates,
                                              bool transpose) {
  std::vector<NamedPerm> gens;
  for (const auto& g : gates) {
    OpMatrix adj = g.u.adjoint();
    gens.push_back({"conjugation by " + g.name,
                    induced_permutation(states, [&](const OpMatrix& p) { return g.u * p * adj; })});
  }
  if (transpose)
    gens.push_back(
        {"transpose", induced_permutation(states, [](const OpMatrix& p) { return p.transpose(); })});
  return gens;
}

}  // namespace

PredictedGroup predicted_group(const StateSet& s, Variant variant) {
  PredictedGroup out{"", {}, PermGroup(static_cast<int>(s.size()))};
  switch (variant) {
    case Variant::kWreath:
      if (s.n != 1) throw Error("the wreath product prediction needs n = 1");
      out.description = "S_" + std::to_string(s.d) + " wr S_" + std::to_string(s.d + 1);
      out.generators = wreath_generators(s.d);
      break;
    case Variant::kExtendedClifford:
      if (s.d != 2 || s.projectors.empty())
        throw Error("extended Clifford prediction needs qubit projectors");
      out.description = "extended Clifford group (adjoint action with transpose)";
      out.generators = conjugation_generators(s.projectors, qubit_clifford_generators(s.n), true);
      break;
    case Variant::kAgsp:
      if (s.d == 2) throw OddOnly("AGSp prediction needs odd d");
      out.description = "AGSp(" + std::to_string(2 * s.n) + ", " + std::to_string(s.d) + ")";
      out.generators = agsp_generators(s);
      break;
    case Variant::kRealClifford:
      if (s.d != 2 || s.projectors.empty()) throw Error("real Clifford prediction needs rebits");
      out.description = "real Clifford group (adjoint action)";
      out.generators =
          conjugation_generators(s.projectors, real_clifford_orbit(s.n).generators, false);
      break;
  }
  for (const auto& g : out.generators) out.group.add_generator(g.perm);
  return out;
}

SymmetryReport verify_symmetry_group(int d, int n, Variant variant, double budget_seconds) {
  SymmetryReport r;
  r.d = d;
  r.n = n;
  r.variant = variant;
  StateSet states;
  if (variant == Variant::kRealClifford) {
    states = rebit_states(n);
  } else {
    states = stabilizer_states(d, n, variant == Variant::kExtendedClifford || d == 2);
  }
  r.states = states.size();
  GramMatrix gram = states.gram();
  ColoredGraph graph = ColoredGraph::from_gram(gram);
  r.automorphisms = graph_automorphisms(graph, budget_seconds);
  r.computed_order = r.automorphisms.order;
  r.certified = r.automorphisms.certified;
  PermGroup computed(static_cast<int>(states.size()), r.automorphisms.generators);
  r.schreier_sims_order = computed.order();

  PredictedGroup predicted = predicted_group(states, variant);
  r.predicted_description = predicted.description;
  r.predicted_order = predicted.group.order();

  r.predicted_preserve_gram = true;
  r.predicted_in_computed = true;
  for (const auto& g : predicted.generators) {
    if (!graph.is_automorphism(g.perm)) {
      r.predicted_preserve_gram = false;
      if (!r.witness) r.witness = g.perm;
    }
    if (!computed.contains(g.perm)) {
      r.predicted_in_computed = false;
      if (!r.witness) r.witness = g.perm;
    }
  }
  r.computed_in_predicted = true;
  for (const auto& g : r.automorphisms.generators) {
    if (!predicted.group.contains(g)) {
      r.computed_in_predicted = false;
      if (!r.witness) r.witness = g;
    }
    if (n == 1 && variant != Variant::kRealClifford && !preserves_basis_partition(g, d))
      r.basis_partition_preserved = false;
  }
  r.match = r.certified && r.computed_order == r.schreier_sims_order &&
            r.computed_order == r.predicted_order && r.predicted_preserve_gram &&
            r.predicted_in_computed && r.computed_in_predicted && r.basis_partition_preserved;
  return r;
}

namespace {

std::vector<Perm> nonzero_vector_action(int d, int n, const std::vector<ZModMatrix>& mats) {
  size_t points = 1;
  for (int i = 0; i < 2 * n; ++i) points *= d;
  std::vector<Perm> out;
  for (const auto& m : mats) {
    Perm p(points - 1);
    for (size_t i = 1; i < points; ++i)
      p[i - 1] = static_cast<int>(apply(m, PhaseVector::from_index(d, n, i)).index()) - 1;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

BigInt certified_sp_order(int d, int n) {
  size_t points = 1;
  for (int i = 0; i < 2 * n; ++i) points *= d;
  return PermGroup(static_cast<int>(points - 1), nonzero_vector_action(d, n, sp_generators(d, n)))
      .order();
}

AgspFactors certify_agsp_factors(int d, int n) {
  AgspFactors f;
  auto labels = enumerate_stabilizer_labels(d, n);
  const int size = static_cast<int>(labels.size());
  PermGroup translations(size);
  for (int i = 0; i < 2 * n; ++i) {
    AffineSimilitude t = AffineSimilitude::translation(PhaseVector::unit(d, n, i));
    translations.add_generator(induced_permutation(
        labels, [&](const StabilizerLabel& l) { return apply_affine_similitude(t, l); }));
  }
  f.translations = translations.order();
  f.symplectic = certified_sp_order(d, n);
  PermGroup sims(size);
  if (d > 2) {
    AffineSimilitude k = AffineSimilitude::identity(d, n);
    k.alpha = primitive_root(d);
    sims.add_generator(induced_permutation(
        labels, [&](const StabilizerLabel& l) { return apply_affine_similitude(k, l); }));
  }
  f.similitudes = sims.order();
  f.product = f.translations * f.symplectic * f.similitudes;
  return f;
}

bool preserves_basis_partition(const Perm& p, int d) {
  if (static_cast<int>(p.size()) != d * (d + 1)) return false;
  for (int i = 0; i <= d; ++i)
    for (int j = 1; j < d; ++j)
      if (p[i * d + j] / d != p[i * d] / d) return false;
  return true;
}

WreathCoordinates wreath_decompose(const Perm& p, int d) {
  if (!preserves_basis_partition(p, d))
    throw NotBasisPreserving("permutation does not map lines to lines");
  WreathCoordinates w;
  w.sigma.resize(d + 1);
  w.inner.assign(d + 1, Perm(d));
  for (int i = 0; i <= d; ++i) {
    w.sigma[i] = p[i * d] / d;
    for (int j = 0; j < d; ++j) w.inner[i][j] = p[i * d + j] % d;
  }
  return w;
}

Perm wreath_compose(const WreathCoordinates& w, int d) {
  Perm p(d * (d + 1));
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j < d; ++j) p[i * d + j] = w.sigma[i] * d + w.inner[i][j];
  return p;
}

std::vector<TableRow> qubit_wreath_table() {
  StateSet s = stabilizer_states(2, 1, true);
  // Name each line by its direction: (1,0) X, (1,1) Y, (0,1) Z.
  std::vector<int> slot(3);  // enumeration block -> position in X, Y, Z order
  for (int b = 0; b < 3; ++b) {
    PhaseVector dir = s.labels[2 * b].lagrangian.subspace().basis_vector(0);
    slot[b] = dir.x(0) == 1 ? (dir.z(0) == 1 ? 1 : 0) : 2;
  }
  const char* names = "XYZ";
  auto describe = [&](const Perm& p) {
    WreathCoordinates w = wreath_decompose(p, 2);
    std::vector<int> sigma(3);
    std::vector<bool> swapped(3);
    for (int b = 0; b < 3; ++b) {
      sigma[slot[b]] = slot[w.sigma[b]];
      swapped[slot[b]] = w.inner[b][0] != 0;
    }
    std::string out = "[";
    std::string moved;
    for (int i = 0; i < 3; ++i)
      if (sigma[i] != i) moved += names[i];
    if (moved.empty()) {
      out += "e";
    } else if (moved.size() == 2) {
      out += "t_" + moved;
    } else {
      out += "c_";
      for (int i = 0; i < 3; ++i) out += names[sigma[i]];
    }
    out += ";";
    for (int i = 0; i < 3; ++i) out += std::string(i ? ", " : " ") + (swapped[i] ? "t" : "e");
    return out + "]";
  };
  std::vector<TableRow> rows;
  rows.push_back({"complex conjugation",
                  describe(induced_permutation(s.projectors,
                                               [](const OpMatrix& p) { return p.conj(); }))});
  const std::vector<NamedGate> gates = {
      {"Y", qubit_y(1, 0)}, {"Z", qubit_z(1, 0)}, {"H", qubit_h(1, 0)}, {"S", qubit_s(1, 0)}};
  for (const auto& g : gates) {
    OpMatrix adj = g.u.adjoint();
    rows.push_back({"conjugation by " + g.name,
                    describe(induced_permutation(
                        s.projectors, [&](const OpMatrix& p) { return g.u * p * adj; }))});
  }
  return rows;
}

std::vector<TableRow> qubit_wreath_table_expected() {
  return {{"complex conjugation", "[e; e, t, e]"},
          {"conjugation by Y", "[e; t, e, t]"},
          {"conjugation by Z", "[e; t, t, e]"},
          {"conjugation by H", "[t_XZ; e, t, e]"},
          {"conjugation by S", "[t_XY; e, t, e]"}};
}

SfReport verify_sf_machinery(int d, int n, const PhaseVector& b) {
  if (d == 2) throw OddOnly("the S_f sum rule is stated for odd d");
  SfReport r;
  r.b = b;
  std::vector<StabilizerLabel> set;
  for (const auto& l : enumerate_lagrangians(d, n)) set.emplace_back(l, b);
  r.states = set.size();
  r.pairwise_positive = true;
  for (size_t i = 0; i < set.size(); ++i)
    for (size_t j = i + 1; j < set.size(); ++j)
      if (gram_closed_form(set[i], set[j]) <= 0) r.pairwise_positive = false;
  const int dim = hilbert_dim(d, n), m = conductor_for(d);
  OpMatrix sum(dim, m);
  for (const auto& s : set) sum += stab_projector(s);
  OpMatrix target = OpMatrix::identity(dim, m) + phase_point(b);
  r.constant = sum.trace().rational() / target.trace().rational();
  r.exact = sum == target * r.constant;
  return r;
}

}  // namespace stabsym
