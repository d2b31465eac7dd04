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

#include "stabsym/operators.h"

#include <algorithm>
#include <string>

namespace stabsym {

OpMatrix::OpMatrix(int dim, int m)
    : dim_(dim), m_(m), e_(static_cast<size_t>(dim) * dim, CycNumber(m)) {}

OpMatrix OpMatrix::identity(int dim, int m) {
  OpMatrix r(dim, m);
  for (int i = 0; i < dim; ++i) r.at(i, i) = CycNumber::one(m);
  return r;
}

OpMatrix OpMatrix::operator+(const OpMatrix& o) const {
  OpMatrix r = *this;
  r += o;
  return r;
}

OpMatrix& OpMatrix::operator+=(const OpMatrix& o) {
  if (o.dim_ != dim_) throw DimensionMismatch("matrix dimension mismatch");
  for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

OpMatrix OpMatrix::operator-(const OpMatrix& o) const {
  if (o.dim_ != dim_) throw DimensionMismatch("matrix dimension mismatch");
  OpMatrix r = *this;
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
  return r;
}

OpMatrix OpMatrix::operator*(const OpMatrix& o) const {
  if (o.dim_ != dim_) throw DimensionMismatch("matrix dimension mismatch");
  OpMatrix r(dim_, m_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const CycNumber& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < dim_; ++j) {
        const CycNumber& b = o(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  return r;
}

OpMatrix OpMatrix::operator*(const CycNumber& s) const {
  OpMatrix r = *this;
  for (auto& x : r.e_) x = x * s;
  return r;
}

OpMatrix OpMatrix::operator*(const BigRational& s) const {
  OpMatrix r = *this;
  for (auto& x : r.e_) x = x * s;
  return r;
}

OpMatrix OpMatrix::adjoint() const {
  OpMatrix r(dim_, m_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r.at(j, i) = (*this)(i, j).conj();
  return r;
}

OpMatrix OpMatrix::transpose() const {
  OpMatrix r(dim_, m_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r.at(j, i) = (*this)(i, j);
  return r;
}

OpMatrix OpMatrix::conj() const { return galois(m_ - 1); }

OpMatrix OpMatrix::galois(int64_t u) const {
  OpMatrix r = *this;
  for (auto& x : r.e_) x = x.galois(u);
  return r;
}

CycNumber OpMatrix::trace() const {
  CycNumber t(m_);
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool OpMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const CycNumber& x) { return x.is_zero(); });
}

bool OpMatrix::is_real() const {
  return std::all_of(e_.begin(), e_.end(), [](const CycNumber& x) { return x == x.conj(); });
}

std::ostream& operator<<(std::ostream& os, const OpMatrix& a) {
  for (int i = 0; i < a.dim(); ++i) {
    os << '[';
    for (int j = 0; j < a.dim(); ++j) os << (j ? ", " : "") << a(i, j);
    os << "]\n";
  }
  return os;
}

CycNumber hs_inner(const OpMatrix& a, const OpMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("matrix dimension mismatch");
  CycNumber t(a.conductor());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (!a(i, j).is_zero() && !b(i, j).is_zero()) t += a(i, j).conj() * b(i, j);
  return t;
}

CycNumber trace_product(const OpMatrix& a, const OpMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("matrix dimension mismatch");
  CycNumber t(a.conductor());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (!a(i, j).is_zero() && !b(j, i).is_zero()) t += a(i, j) * b(j, i);
  return t;
}

int matrix_rank(const OpMatrix& a) {
  const int n = a.dim();
  std::vector<std::vector<CycNumber>> m(n, std::vector<CycNumber>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = a(i, j);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    CycNumber inv = m[rank][col].inverse();
    for (int j = col; j < n; ++j) m[rank][j] = m[rank][j] * inv;
    for (int r = 0; r < n; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      CycNumber f = m[r][col];
      for (int j = col; j < n; ++j) m[r][j] = m[r][j] - f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::string canonical_key(const OpMatrix& a) {
  std::string key = std::to_string(a.dim()) + ":" + std::to_string(a.conductor());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      const CycNumber& x = a(i, j);
      key += '|';
      if (x.is_zero()) continue;
      for (const auto& c : x.numerators()) key += c.str() + ',';
      key += '/' + x.denominator().str();
    }
  return key;
}

int hilbert_dim(int d, int n) {
  int dim = 1;
  for (int i = 0; i < n; ++i) dim *= d;
  return dim;
}

int tau_exponent(int d, int m) {
  if (d == 2) return m / 4;
  return static_cast<int>(int64_t{m / d} * ((d + 1) / 2) % m);
}

namespace {

// Sums of roots of unity per matrix entry, converted to exact numbers once at the end.
class ZetaAccumulator {
 public:
  ZetaAccumulator(int dim, int m)
      : dim_(dim), m_(m), counts_(static_cast<size_t>(dim) * dim * m, 0) {}

  void add(int r, int c, int64_t exp, int64_t weight = 1) {
    counts_[(static_cast<size_t>(r) * dim_ + c) * m_ + mod(exp, m_)] += weight;
  }

  OpMatrix finish(const BigRational& scale) const {
    const CycContext& ctx = CycContext::get(m_);
    OpMatrix out(dim_, m_);
    std::vector<int64_t> coords(ctx.phi);
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) {
        std::fill(coords.begin(), coords.end(), 0);
        bool any = false;
        const size_t base = (static_cast<size_t>(r) * dim_ + c) * m_;
        for (int e = 0; e < m_; ++e) {
          const int64_t w = counts_[base + e];
          if (!w) continue;
          any = true;
          for (int i = 0; i < ctx.phi; ++i) coords[i] += w * ctx.power[e][i];
        }
        if (!any) continue;
        CycNumber x(m_);
        for (int i = 0; i < ctx.phi; ++i)
          if (coords[i]) x += CycNumber::zeta(m_, i) * BigRational(coords[i]);
        out.at(r, c) = x * scale;
      }
    return out;
  }

 private:
  int dim_, m_;
  std::vector<int64_t> counts_;
};

// T(b) as a monomial matrix: adds zeta^{extra + phase(q)} at (q + b_X, q) for every basis state q.
void add_weyl(ZetaAccumulator& acc, const PhaseVector& b, int m, int64_t extra, int64_t weight) {
  const int d = b.modulus(), n = b.n();
  const int dim = hilbert_dim(d, n);
  const int t = tau_exponent(d, m);
  const int w = m / d;
  const int64_t base = extra - int64_t{t} * xz_dot(b);
  std::vector<int> q(n, 0);
  for (int col = 0; col < dim; ++col) {
    int row = 0;
    int64_t e = base;
    for (int i = 0; i < n; ++i) {
      const int shifted = (q[i] + b.x(i)) % d;
      row = row * d + shifted;
      e += int64_t{w} * b.z(i) * shifted;
    }
    acc.add(row, col, e, weight);
    for (int i = n - 1; i >= 0; --i) {
      if (++q[i] < d) break;
      q[i] = 0;
    }
  }
}

BigRational inv_power(int d, int n) {
  return BigRational(1, hilbert_dim(d, n));
}

}  // namespace

OpMatrix weyl(const PhaseVector& a) {
  const int d = a.modulus(), n = a.n(), m = conductor_for(d);
  ZetaAccumulator acc(hilbert_dim(d, n), m);
  add_weyl(acc, a, m, 0, 1);
  return acc.finish(BigRational(1));
}

OpMatrix phase_point(const PhaseVector& a) {
  const int d = a.modulus(), n = a.n(), m = conductor_for(d);
  const int dim = hilbert_dim(d, n);
  ZetaAccumulator acc(dim, m);
  const size_t points = static_cast<size_t>(dim) * dim;
  for (size_t k = 0; k < points; ++k) {
    PhaseVector b = PhaseVector::from_index(d, n, k);
    add_weyl(acc, b, m, int64_t{m / d} * symplectic_form(a, b), 1);
  }
  return acc.finish(inv_power(d, n));
}

OpMatrix stab_projector(const StabilizerLabel& label) {
  const int d = label.rep.modulus(), n = label.rep.n();
  if (d == 2) throw OddOnly("stab_projector needs odd d; use the qubit constructor");
  const int m = conductor_for(d);
  ZetaAccumulator acc(hilbert_dim(d, n), m);
  for (const auto& b : label.lagrangian.subspace().elements())
    add_weyl(acc, b, m, int64_t{m / d} * symplectic_form(label.rep, b), 1);
  return acc.finish(inv_power(d, n));
}

OpMatrix stab_projector_from_points(const StabilizerLabel& label) {
  const int d = label.rep.modulus(), n = label.rep.n();
  const int dim = hilbert_dim(d, n), m = conductor_for(d);
  OpMatrix sum(dim, m);
  for (const auto& v : label.lagrangian.subspace().elements()) sum += phase_point(label.rep + v);
  return sum * inv_power(d, n);
}

OpMatrix stab_projector_qubit(const LagrangianSubspace& l, const std::map<size_t, int>& eps) {
  const int d = l.modulus(), n = l.n();
  if (d != 2) throw Error("stab_projector_qubit needs d = 2");
  const int m = conductor_for(d);
  auto sign = [&](const PhaseVector& b) {
    if (b.is_zero()) return 1;
    auto it = eps.find(b.index());
    if (it == eps.end() || (it->second != 1 && it->second != -1))
      throw InconsistentSigns("sign function undefined at a point of L");
    return it->second;
  };
  std::vector<PhaseVector> elems = l.subspace().elements();
  for (const auto& b : elems)
    for (const auto& c : elems) {
      OpMatrix lhs = weyl(b) * weyl(c) * BigRational(sign(b) * sign(c));
      OpMatrix rhs = weyl(b + c) * BigRational(sign(b + c));
      if (lhs != rhs) throw InconsistentSigns("signed Weyl operators do not close under products");
    }
  ZetaAccumulator acc(hilbert_dim(d, n), m);
  for (const auto& b : elems) add_weyl(acc, b, m, 0, sign(b));
  return acc.finish(inv_power(d, n));
}

OpMatrix qubit_projector(const StabilizerLabel& label) {
  const int d = label.rep.modulus(), n = label.rep.n();
  if (d != 2) throw Error("qubit_projector needs d = 2");
  const int m = conductor_for(d);
  const int dim = hilbert_dim(d, n);
  const Subspace& l = label.lagrangian.subspace();
  OpMatrix pi = OpMatrix::identity(dim, m);
  const BigRational half(1, 2);
  for (int i = 0; i < l.dim(); ++i) {
    PhaseVector b = l.basis_vector(i);
    const int s = symplectic_form(label.rep, b) ? -1 : 1;
    OpMatrix factor = (OpMatrix::identity(dim, m) + weyl(b) * BigRational(s)) * half;
    pi = pi * factor;
  }
  return pi;
}

OpMatrix projector(const StabilizerLabel& label) {
  return label.rep.modulus() == 2 ? qubit_projector(label) : stab_projector(label);
}

BigRational gram_closed_form(const StabilizerLabel& x, const StabilizerLabel& y) {
  const int d = x.rep.modulus(), n = x.rep.n();
  if (d == 2) throw OddOnly("closed-form overlaps need odd d");
  Subspace common = x.lagrangian.subspace().intersect(y.lagrangian.subspace());
  PhaseVector diff = x.rep - y.rep;
  for (int i = 0; i < common.dim(); ++i)
    if (symplectic_form(diff, common.basis_vector(i)) != 0) return BigRational(0);
  BigRational v(1);
  for (int k = common.dim(); k < n; ++k) v /= d;
  return v;
}

std::map<BigRational, size_t> GramMatrix::multiset() const {
  std::map<BigRational, size_t> out;
  for (const auto& v : values) ++out[v];
  return out;
}

GramMatrix build_gram(const std::vector<StabilizerLabel>& states, size_t budget) {
  GramMatrix g;
  g.size = static_cast<int>(states.size());
  if (states.size() * states.size() > budget)
    throw BudgetExceeded("Gram matrix with " + std::to_string(states.size()) + " states");
  g.values.assign(states.size() * states.size(), BigRational(0));
  if (states.empty()) return g;
  if (states.front().rep.modulus() != 2) {
    for (int i = 0; i < g.size; ++i)
      for (int j = i; j < g.size; ++j) {
        BigRational v = gram_closed_form(states[i], states[j]);
        g.values[static_cast<size_t>(i) * g.size + j] = v;
        g.values[static_cast<size_t>(j) * g.size + i] = v;
      }
    return g;
  }
  std::vector<OpMatrix> ops;
  for (const auto& s : states) ops.push_back(projector(s));
  return build_gram(ops);
}

GramMatrix build_gram(const std::vector<OpMatrix>& ops) {
  GramMatrix g;
  g.size = static_cast<int>(ops.size());
  g.values.assign(ops.size() * ops.size(), BigRational(0));
  for (int i = 0; i < g.size; ++i)
    for (int j = i; j < g.size; ++j) {
      BigRational v = trace_product(ops[i], ops[j]).rational();
      g.values[static_cast<size_t>(i) * g.size + j] = v;
      g.values[static_cast<size_t>(j) * g.size + i] = v;
    }
  return g;
}

}  // namespace stabsym
