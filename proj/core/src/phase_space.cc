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

#include "stabsym/phase_space.h"

#include <algorithm>
#include <cassert>
#include <string>

namespace stabsym {

PhaseVector::PhaseVector(int d, std::vector<int> coords) : d_(d), v_(std::move(coords)) {
  if (v_.size() % 2 != 0) throw DimensionMismatch("phase vector length must be even");
  for (int& c : v_) c = mod(c, d_);
}

PhaseVector PhaseVector::unit(int d, int n, int index) {
  PhaseVector e(d, n);
  e.v_[index] = 1;
  return e;
}

bool PhaseVector::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](int c) { return c == 0; });
}

PhaseVector PhaseVector::operator+(const PhaseVector& o) const {
  if (o.v_.size() != v_.size()) throw DimensionMismatch("phase vector length mismatch");
  PhaseVector r = *this;
  for (size_t i = 0; i < v_.size(); ++i) r.v_[i] = mod(v_[i] + o.v_[i], d_);
  return r;
}

PhaseVector PhaseVector::operator-(const PhaseVector& o) const {
  if (o.v_.size() != v_.size()) throw DimensionMismatch("phase vector length mismatch");
  PhaseVector r = *this;
  for (size_t i = 0; i < v_.size(); ++i) r.v_[i] = mod(v_[i] - o.v_[i], d_);
  return r;
}

PhaseVector PhaseVector::operator-() const { return *this * -1; }

PhaseVector PhaseVector::operator*(int64_t s) const {
  PhaseVector r = *this;
  for (int& c : r.v_) c = mod(int64_t{c} * s, d_);
  return r;
}

size_t PhaseVector::index() const {
  size_t idx = 0;
  for (int c : v_) idx = idx * d_ + c;
  return idx;
}

PhaseVector PhaseVector::from_index(int d, int n, size_t index) {
  PhaseVector a(d, n);
  for (int i = 2 * n - 1; i >= 0; --i) {
    a.v_[i] = static_cast<int>(index % d);
    index /= d;
  }
  return a;
}

std::ostream& operator<<(std::ostream& os, const PhaseVector& a) {
  os << '(';
  for (int i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  return os << ')';
}

int symplectic_form(const PhaseVector& a, const PhaseVector& b) {
  if (a.size() != b.size() || a.modulus() != b.modulus())
    throw DimensionMismatch("symplectic form of vectors from different phase spaces");
  int64_t acc = 0;
  for (int i = 0; i < a.n(); ++i) acc += int64_t{a.x(i)} * b.z(i) - int64_t{b.x(i)} * a.z(i);
  return mod(acc, a.modulus());
}

int xz_dot(const PhaseVector& a) {
  int acc = 0;
  for (int i = 0; i < a.n(); ++i) acc += a.x(i) * a.z(i);
  return acc;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(int d, int n) : d_(d), n_(n), basis_(0, 2 * n, d) {}

Subspace Subspace::from_rows(const ZModMatrix& rows) {
  Subspace s(rows.modulus(), rows.cols() / 2);
  if (rows.rows() == 0) return s;
  RrefResult r = rref(rows);
  s.pivots_ = r.pivots;
  s.basis_ = ZModMatrix(r.rank, rows.cols(), rows.modulus());
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < rows.cols(); ++j) s.basis_.set(i, j, r.matrix(i, j));
  return s;
}

Subspace Subspace::span(int d, int n, std::span<const PhaseVector> vectors) {
  if (vectors.empty()) return Subspace(d, n);
  ZModMatrix m(static_cast<int>(vectors.size()), 2 * n, d);
  for (size_t i = 0; i < vectors.size(); ++i)
    for (int j = 0; j < 2 * n; ++j) m.set(static_cast<int>(i), j, vectors[i][j]);
  return from_rows(m);
}

Subspace Subspace::whole(int d, int n) { return from_rows(ZModMatrix::identity(2 * n, d)); }

PhaseVector Subspace::basis_vector(int i) const {
  auto r = basis_.row(i);
  return PhaseVector(d_, std::vector<int>(r.begin(), r.end()));
}

PhaseVector Subspace::reduce(const PhaseVector& v) const {
  std::vector<int> w(v.coords().begin(), v.coords().end());
  for (int i = 0; i < dim(); ++i) {
    const int c = w[pivots_[i]];
    if (c == 0) continue;
    for (int j = 0; j < 2 * n_; ++j) w[j] = mod(w[j] - int64_t{c} * basis_(i, j), d_);
  }
  return PhaseVector(d_, std::move(w));
}

bool Subspace::contains(const PhaseVector& v) const { return reduce(v).is_zero(); }

bool Subspace::is_isotropic() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = i + 1; j < dim(); ++j)
      if (symplectic_form(basis_vector(i), basis_vector(j)) != 0) return false;
  return true;
}

std::vector<PhaseVector> Subspace::elements() const {
  size_t count = 1;
  for (int i = 0; i < dim(); ++i) count *= d_;
  std::vector<PhaseVector> out;
  out.reserve(count);
  std::vector<int> coeff(dim(), 0);
  for (size_t k = 0; k < count; ++k) {
    std::vector<int> w(2 * n_, 0);
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < 2 * n_; ++j) w[j] += coeff[i] * basis_(i, j);
    out.emplace_back(d_, std::move(w));
    for (int i = dim() - 1; i >= 0; --i) {
      if (++coeff[i] < d_) break;
      coeff[i] = 0;
    }
  }
  return out;
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (dim() == 0 || o.dim() == 0) return Subspace(d_, n_);
  // Columns: basis of this, then -basis of o. Null vectors (c, e) give sum c_i l_i.
  const int k = dim(), m = o.dim();
  ZModMatrix sys(2 * n_, k + m, d_);
  for (int j = 0; j < 2 * n_; ++j) {
    for (int i = 0; i < k; ++i) sys.set(j, i, basis_(i, j));
    for (int i = 0; i < m; ++i) sys.set(j, k + i, -int64_t{o.basis_(i, j)});
  }
  ZModMatrix null = nullspace(sys);
  std::vector<PhaseVector> vecs;
  for (int r = 0; r < null.rows(); ++r) {
    std::vector<int> w(2 * n_, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < 2 * n_; ++j) w[j] = mod(w[j] + int64_t{null(r, i)} * basis_(i, j), d_);
    vecs.emplace_back(d_, std::move(w));
  }
  return span(d_, n_, vecs);
}

Subspace Subspace::sum(const Subspace& o) const { return from_rows(basis_.vstack(o.basis_)); }

Subspace Subspace::image(const ZModMatrix& m) const {
  if (dim() == 0) return *this;
  return from_rows((m * basis_.transpose()).transpose());
}

// ---------------------------------------------------------------------------

LagrangianSubspace::LagrangianSubspace(Subspace s) : s_(std::move(s)) {
  if (s_.dim() != s_.n() || !s_.is_isotropic())
    throw Error("subspace is not Lagrangian (dim " + std::to_string(s_.dim()) + ")");
}

StabilizerLabel::StabilizerLabel(LagrangianSubspace l, const PhaseVector& a)
    : lagrangian(std::move(l)), rep(lagrangian.subspace().reduce(a)) {}

AffineSubspace::AffineSubspace(Subspace dir, const PhaseVector& a)
    : direction(std::move(dir)), rep(direction.reduce(a)) {}

namespace {

size_t checked_points(int d, int n, size_t budget) {
  if (!is_prime(d)) throw NotPrime("d = " + std::to_string(d) + " is not prime");
  if (n < 1) throw Error("n must be positive");
  size_t points = 1;
  for (int i = 0; i < 2 * n; ++i) {
    points *= d;
    if (points > budget)
      throw BudgetExceeded("phase space Z_" + std::to_string(d) + "^" + std::to_string(2 * n) +
                           " exceeds the enumeration budget");
  }
  return points;
}

}  // namespace

std::vector<LagrangianSubspace> enumerate_lagrangians(int d, int n, size_t budget) {
  checked_points(d, n, budget);
  const int cols = 2 * n;
  std::vector<LagrangianSubspace> out;
  // Walk pivot sets; every RREF matrix with those pivots is visited once.
  std::vector<int> pivots(n);
  for (int i = 0; i < n; ++i) pivots[i] = i;
  while (true) {
    std::vector<std::pair<int, int>> free;
    for (int r = 0; r < n; ++r)
      for (int c = pivots[r] + 1; c < cols; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
    std::vector<int> vals(free.size(), 0);
    while (true) {
      ZModMatrix m(n, cols, d);
      for (int r = 0; r < n; ++r) m.set(r, pivots[r], 1);
      for (size_t f = 0; f < free.size(); ++f) m.set(free[f].first, free[f].second, vals[f]);
      Subspace s = Subspace::from_rows(m);
      if (s.is_isotropic()) out.emplace_back(std::move(s));
      size_t f = free.size();
      while (f > 0) {
        if (++vals[f - 1] < d) break;
        vals[--f] = 0;
      }
      if (f == 0) break;
    }
    int i = n - 1;
    while (i >= 0 && pivots[i] == cols - n + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < n; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PhaseVector> coset_representatives(const LagrangianSubspace& l) {
  const Subspace& s = l.subspace();
  const int d = s.modulus(), n = s.n();
  std::vector<int> non_pivot;
  for (int c = 0; c < 2 * n; ++c)
    if (std::find(s.pivots().begin(), s.pivots().end(), c) == s.pivots().end())
      non_pivot.push_back(c);
  std::vector<PhaseVector> reps;
  std::vector<int> vals(non_pivot.size(), 0);
  while (true) {
    PhaseVector a(d, n);
    for (size_t k = 0; k < non_pivot.size(); ++k) a.set(non_pivot[k], vals[k]);
    reps.push_back(a);
    size_t k = non_pivot.size();
    while (k > 0) {
      if (++vals[k - 1] < d) break;
      vals[--k] = 0;
    }
    if (k == 0) break;
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

std::vector<StabilizerLabel> enumerate_stabilizer_labels(int d, int n, size_t budget) {
  std::vector<StabilizerLabel> out;
  for (const auto& l : enumerate_lagrangians(d, n, budget))
    for (const auto& a : coset_representatives(l)) out.emplace_back(l, a);
  return out;
}

std::optional<AffineSubspace> intersect(const AffineSubspace& a, const AffineSubspace& b) {
  // Need l in A.dir with a.rep + l - b.rep in B.dir, i.e. l - m = b.rep - a.rep.
  const Subspace& l = a.direction;
  const Subspace& m = b.direction;
  const int d = l.modulus(), n = l.n();
  const PhaseVector delta = b.rep - a.rep;
  const int k = l.dim(), j = m.dim();
  if (k + j == 0) {
    if (!delta.is_zero()) return std::nullopt;
    return a;
  }
  ZModMatrix sys(2 * n, k + j, d);
  for (int c = 0; c < 2 * n; ++c) {
    for (int i = 0; i < k; ++i) sys.set(c, i, l.basis()(i, c));
    for (int i = 0; i < j; ++i) sys.set(c, k + i, -int64_t{m.basis()(i, c)});
  }
  auto sol = solve(sys, delta.coords());
  if (!sol) return std::nullopt;
  PhaseVector point = a.rep;
  for (int i = 0; i < k; ++i) point = point + l.basis_vector(i) * (*sol)[i];
  return AffineSubspace(l.intersect(m), point);
}

StabilizerLabel label_from_functional(const LagrangianSubspace& l, std::span<const int> values) {
  const Subspace& s = l.subspace();
  const int d = s.modulus(), n = s.n();
  if (static_cast<int>(values.size()) != s.dim())
    throw DimensionMismatch("functional needs one value per basis row");
  // [a, b] = sum_i a_X,i b_Z,i - sum_i a_Z,i b_X,i, linear in a.
  ZModMatrix sys(n, 2 * n, d);
  for (int r = 0; r < n; ++r) {
    PhaseVector b = s.basis_vector(r);
    for (int i = 0; i < n; ++i) {
      sys.set(r, i, b.z(i));
      sys.set(r, n + i, -int64_t{b.x(i)});
    }
  }
  auto sol = solve(sys, values);
  assert(sol && "symplectic form is nondegenerate, so a functional on L always has a representative");
  return StabilizerLabel(l, PhaseVector(d, std::move(*sol)));
}

std::vector<int> functional_values(const StabilizerLabel& label) {
  const Subspace& s = label.lagrangian.subspace();
  std::vector<int> out;
  for (int r = 0; r < s.dim(); ++r) out.push_back(symplectic_form(label.rep, s.basis_vector(r)));
  return out;
}

size_t lagrangian_count(int d, int n) {
  size_t count = 1, dk = 1;
  for (int k = 1; k <= n; ++k) {
    dk *= d;
    count *= dk + 1;
  }
  return count;
}

}  // namespace stabsym
