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

#include "stabsym/moments.h"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace stabsym {

namespace {

using RVec = std::vector<BigRational>;

// Rows kept in reduced echelon form; used for ranks and incremental independence tests.
class Echelon {
 public:
  explicit Echelon(size_t width) : width_(width) {}

  /// Reduces v against the stored rows; returns the remainder.
  RVec reduce(RVec v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const BigRational f = v[pivots_[r]];
      if (f == 0) continue;
      for (size_t j = 0; j < width_; ++j)
        if (rows_[r][j] != 0) v[j] -= f * rows_[r][j];
    }
    return v;
  }

  /// Adds v if independent; returns whether it was.
  bool add(const RVec& v) {
    RVec w = reduce(v);
    size_t p = 0;
    while (p < width_ && w[p] == 0) ++p;
    if (p == width_) return false;
    const BigRational inv = 1 / w[p];
    for (auto& x : w) x *= inv;
    for (size_t r = 0; r < rows_.size(); ++r) {
      const BigRational f = rows_[r][p];
      if (f == 0) continue;
      for (size_t j = 0; j < width_; ++j) rows_[r][j] -= f * w[j];
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    return true;
  }

  size_t rank() const { return rows_.size(); }
  const std::vector<RVec>& rows() const { return rows_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

 private:
  size_t width_;
  std::vector<RVec> rows_;
  std::vector<size_t> pivots_;
};

std::pair<int, int> infer_dn(const OpMatrix& a) {
  const int d = a.conductor() == 8 ? 2 : a.conductor() / 4;
  int n = 0;
  for (int dim = 1; dim < a.dim(); dim *= d) ++n;
  return {d, n};
}

BigRational real_trace(const OpMatrix& a, const OpMatrix& b) {
  CycNumber t = trace_product(a, b);
  if (!t.is_rational()) throw Error("expected a rational trace");
  return t.rational();
}

// w[q][k] = tr(B_k q).
std::vector<RVec> coordinates(const OperatorSet& q, const std::vector<OpMatrix>& basis) {
  std::vector<RVec> w(q.elements.size(), RVec(basis.size()));
  for (size_t i = 0; i < q.elements.size(); ++i)
    for (size_t k = 0; k < basis.size(); ++k) w[i][k] = real_trace(basis[k], q.elements[i]);
  return w;
}

std::string cyc_text(const CycNumber& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string tuple_text(const std::vector<int>& idx) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  os << ')';
  return os.str();
}

BigRational mean_product(const std::vector<RVec>& w, std::initializer_list<size_t> idx) {
  BigRational sum = 0;
  for (const auto& row : w) {
    BigRational p = 1;
    for (size_t k : idx) {
      if (row[k] == 0) {
        p = 0;
        break;
      }
      p *= row[k];
    }
    sum += p;
  }
  return sum / static_cast<int64_t>(w.size());
}

// Lazily cached tr(B_i B_j) and tr(B_i B_j B_k) + tr(B_i B_k B_j).
class TraceTable {
 public:
  explicit TraceTable(const std::vector<OpMatrix>& basis) : b_(basis) {
    for (const auto& x : b_) tr_.push_back(x.trace().rational());
  }
  const BigRational& tr(size_t i) const { return tr_[i]; }
  BigRational tr2(size_t i, size_t j) const { return real_trace(b_[i], b_[j]); }
  BigRational tr3sym(size_t i, size_t j, size_t k) {
    const OpMatrix& ij = product(i, j);
    const OpMatrix& ik = product(i, k);
    CycNumber t = trace_product(ij, b_[k]) + trace_product(ik, b_[j]);
    return t.rational();
  }

 private:
  const OpMatrix& product(size_t i, size_t j) {
    auto key = std::make_pair(i, j);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, b_[i] * b_[j]).first;
    return it->second;
  }
  const std::vector<OpMatrix>& b_;
  std::vector<BigRational> tr_;
  std::map<std::pair<size_t, size_t>, OpMatrix> cache_;
};

// Solves rows * K = rhs exactly. When the solution is a line, returns its positive midpoint.
struct SolveResult {
  bool consistent = false;
  int rank = 0;
  std::vector<BigRational> k;
  bool positive = false;
  std::vector<int> witness;
};

SolveResult solve_constants(const std::vector<RVec>& rows, const std::vector<std::vector<int>>& tuples,
                            size_t unknowns) {
  SolveResult out;
  Echelon e(unknowns + 1);
  for (size_t r = 0; r < rows.size(); ++r) {
    RVec rem = e.reduce(rows[r]);
    bool lhs_zero = std::all_of(rem.begin(), rem.begin() + unknowns,
                                [](const BigRational& x) { return x == 0; });
    if (lhs_zero && rem[unknowns] != 0) {
      out.witness = tuples[r];
      return out;
    }
    if (!lhs_zero) e.add(rows[r]);
  }
  out.consistent = true;
  out.rank = static_cast<int>(e.rank());
  // Particular solution with free variables zero, plus the null direction if one-dimensional.
  std::vector<bool> is_pivot(unknowns, false);
  for (size_t p : e.pivots()) is_pivot[p] = true;
  std::vector<BigRational> k(unknowns, 0);
  for (size_t r = 0; r < e.rank(); ++r) k[e.pivots()[r]] = e.rows()[r][unknowns];
  std::vector<size_t> free;
  for (size_t j = 0; j < unknowns; ++j)
    if (!is_pivot[j]) free.push_back(j);
  if (free.size() == 1) {
    std::vector<BigRational> v(unknowns, 0);
    v[free[0]] = 1;
    for (size_t r = 0; r < e.rank(); ++r) v[e.pivots()[r]] = -e.rows()[r][free[0]];
    // k + s v > 0 componentwise: intersect the half-lines.
    std::optional<BigRational> lo, hi;
    bool empty = false;
    for (size_t j = 0; j < unknowns; ++j) {
      if (v[j] == 0) {
        if (k[j] <= 0) empty = true;
        continue;
      }
      BigRational bound = -k[j] / v[j];
      if (v[j] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else if (!hi || bound < *hi) {
        hi = bound;
      }
    }
    if (!empty && lo && hi && *lo < *hi) {
      const BigRational s = (*lo + *hi) / 2;
      for (size_t j = 0; j < unknowns; ++j) k[j] += s * v[j];
    }
  }
  out.k = k;
  out.positive = std::all_of(k.begin(), k.end(), [](const BigRational& x) { return x > 0; });
  return out;
}

}  // namespace

CycNumber moment_form(const OperatorSet& q, const std::vector<OpMatrix>& args) {
  const int m = q.elements.front().conductor();
  CycNumber sum(m);
  for (const auto& e : q.elements) {
    CycNumber p = CycNumber::one(m);
    for (const auto& a : args) p = p * trace_product(a, e);
    sum += p;
  }
  return sum * BigRational(1, static_cast<int64_t>(q.elements.size()));
}

OpMatrix first_moment(const OperatorSet& q) {
  OpMatrix sum(q.dim(), q.elements.front().conductor());
  for (const auto& e : q.elements) sum += e;
  return sum * BigRational(1, static_cast<int64_t>(q.elements.size()));
}

std::vector<OpMatrix> hermitian_basis(int d, int n) {
  std::vector<OpMatrix> out;
  size_t points = 1;
  for (int i = 0; i < 2 * n; ++i) points *= d;
  for (size_t k = 0; k < points; ++k) {
    PhaseVector a = PhaseVector::from_index(d, n, k);
    out.push_back(d == 2 ? weyl(a) : phase_point(a));
  }
  return out;
}

std::vector<OpMatrix> symmetric_basis(int n) {
  std::vector<OpMatrix> out;
  size_t points = size_t{1} << (2 * n);
  for (size_t k = 0; k < points; ++k) {
    PhaseVector a = PhaseVector::from_index(2, n, k);
    if (xz_dot(a) % 2 == 0) out.push_back(weyl(a));
  }
  return out;
}

DesignReport is_complex_2design(const OperatorSet& q, const std::vector<OpMatrix>& basis) {
  DesignReport r{"complex_2design", true, {}, {}, ""};
  const BigRational dim = q.dim();
  const BigRational norm = 1 / (dim * (dim + 1));
  r.constants = {norm};
  auto w = coordinates(q, basis);
  TraceTable t(basis);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i; j < basis.size(); ++j) {
      BigRational f = mean_product(w, {i, j});
      BigRational target = (t.tr(i) * t.tr(j) + t.tr2(i, j)) * norm;
      if (f != target) {
        r.pass = false;
        r.witness = {static_cast<int>(i), static_cast<int>(j)};
        r.detail = "F_2" + tuple_text(r.witness) + " = " + to_string(f) + ", form gives " +
                   to_string(target);
        return r;
      }
    }
  return r;
}

DesignReport is_complex_3design(const OperatorSet& q, const std::vector<OpMatrix>& basis) {
  DesignReport r{"complex_3design", true, {}, {}, ""};
  const BigRational dim = q.dim();
  const BigRational norm = 1 / (dim * (dim + 1) * (dim + 2));
  r.constants = {norm};
  auto w = coordinates(q, basis);
  TraceTable t(basis);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i; j < basis.size(); ++j)
      for (size_t k = j; k < basis.size(); ++k) {
        BigRational f = mean_product(w, {i, j, k});
        BigRational target = t.tr(i) * t.tr(j) * t.tr(k) + t.tr(i) * t.tr2(j, k) +
                             t.tr(j) * t.tr2(i, k) + t.tr(k) * t.tr2(i, j) + t.tr3sym(i, j, k);
        target *= norm;
        if (f != target) {
          r.pass = false;
          r.witness = {static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)};
          r.detail = "F_3" + tuple_text(r.witness) + " = " + to_string(f) + ", form gives " +
                     to_string(target);
          return r;
        }
      }
  return r;
}

DesignReport is_real_4design(const OperatorSet& q, const std::vector<OpMatrix>& basis) {
  DesignReport r{"real_4design", false, {}, {}, ""};
  auto w = coordinates(q, basis);
  TraceTable t(basis);
  std::vector<RVec> rows;
  std::vector<std::vector<int>> tuples;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i; j < basis.size(); ++j) {
      rows.push_back({t.tr(i) * t.tr(j) + 2 * t.tr2(i, j), mean_product(w, {i, j})});
      tuples.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  SolveResult s = solve_constants(rows, tuples, 1);
  r.witness = s.witness;
  r.constants = s.k;
  r.pass = s.consistent && s.positive;
  r.detail = s.consistent ? "rank " + std::to_string(s.rank)
                          : "no constant fits tuple " + tuple_text(s.witness);
  return r;
}

DesignReport is_real_6design(const OperatorSet& q, const std::vector<OpMatrix>& basis) {
  DesignReport r{"real_6design", false, {}, {}, ""};
  auto w = coordinates(q, basis);
  TraceTable t(basis);
  std::vector<RVec> rows;
  std::vector<std::vector<int>> tuples;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i; j < basis.size(); ++j)
      for (size_t k = j; k < basis.size(); ++k) {
        BigRational a = t.tr(i) * t.tr(j) * t.tr(k);
        BigRational b = t.tr(i) * t.tr2(j, k) + t.tr(j) * t.tr2(i, k) + t.tr(k) * t.tr2(i, j);
        BigRational c = t.tr3sym(i, j, k);
        rows.push_back({a, b, c, mean_product(w, {i, j, k})});
        tuples.push_back({static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)});
      }
  SolveResult s = solve_constants(rows, tuples, 3);
  r.witness = s.witness;
  r.constants = s.k;
  r.pass = s.consistent && s.positive;
  if (!s.consistent)
    r.detail = "no constants fit tuple " + tuple_text(s.witness);
  else if (s.rank < 3)
    r.detail = "rank " + std::to_string(s.rank) + ": constants fixed up to the trace identity "
               "on this dimension; midpoint of the positive family reported";
  else
    r.detail = "rank 3";
  return r;
}

int span_rank(const OperatorSet& q) {
  auto [d, n] = infer_dn(q.elements.front());
  auto basis = hermitian_basis(d, n);
  auto w = coordinates(q, basis);
  Echelon e(basis.size());
  for (const auto& row : w) e.add(row);
  return static_cast<int>(e.rank());
}

namespace {

// Shared data for both condition checks.
struct DirData {
  int dim = 0;
  std::vector<RVec> w;          // coordinates of elements in the Hermitian basis
  std::vector<size_t> picks;    // dir(Q) basis: q_{picks[i]} - q_0
  std::vector<RVec> u;          // coordinates of the dir basis
  std::vector<RVec> y;          // y[q][i] = tr(U_i q)
  RVec mean_w;
  std::vector<OpMatrix> basis;
};

DirData dir_data(const OperatorSet& q) {
  DirData dd;
  auto [d, n] = infer_dn(q.elements.front());
  dd.dim = q.dim();
  dd.basis = hermitian_basis(d, n);
  dd.w = coordinates(q, dd.basis);
  const size_t width = dd.basis.size();
  Echelon e(width);
  for (size_t i = 1; i < dd.w.size(); ++i) {
    RVec diff(width);
    for (size_t k = 0; k < width; ++k) diff[k] = dd.w[i][k] - dd.w[0][k];
    if (e.add(diff)) {
      dd.picks.push_back(i);
      dd.u.push_back(std::move(diff));
    }
  }
  const BigRational inv_dim(1, dd.dim);
  dd.y.assign(dd.w.size(), RVec(dd.u.size()));
  for (size_t qi = 0; qi < dd.w.size(); ++qi)
    for (size_t i = 0; i < dd.u.size(); ++i) {
      BigRational s = 0;
      for (size_t k = 0; k < width; ++k)
        if (dd.w[qi][k] != 0 && dd.u[i][k] != 0) s += dd.w[qi][k] * dd.u[i][k];
      dd.y[qi][i] = s * inv_dim;
    }
  dd.mean_w.assign(width, 0);
  for (const auto& row : dd.w)
    for (size_t k = 0; k < width; ++k) dd.mean_w[k] += row[k];
  for (auto& x : dd.mean_w) x /= static_cast<int64_t>(dd.w.size());
  return dd;
}

BigRational hs(const RVec& a, const RVec& b, int dim) {
  BigRational s = 0;
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0 && b[k] != 0) s += a[k] * b[k];
  return s / dim;
}

void add_wig_clauses(const OperatorSet& q, const DirData& dd, ConditionReport& r) {
  (void)q;
  const size_t m = dd.u.size();
  // Clause: F_2 proportional to the Hilbert-Schmidt product on dir(Q).
  {
    Clause c{"F_2 proportional to (.|.) on dir(Q)", true, ""};
    std::optional<BigRational> ratio;
    for (size_t i = 0; i < m && c.pass; ++i)
      for (size_t j = i; j < m && c.pass; ++j) {
        BigRational f = 0;
        for (const auto& row : dd.y) f += row[i] * row[j];
        f /= static_cast<int64_t>(dd.y.size());
        BigRational h = hs(dd.u[i], dd.u[j], dd.dim);
        if (!ratio && h != 0) ratio = f / h;
        const BigRational expect = ratio ? *ratio * h : BigRational(0);
        if (f != expect) {
          c.pass = false;
          c.detail = "pair (" + std::to_string(i) + "," + std::to_string(j) + "): F_2 = " +
                     to_string(f) + ", HS = " + to_string(h);
        }
      }
    if (c.pass) c.detail = "ratio " + (ratio ? to_string(*ratio) : std::string("0"));
    r.clauses.push_back(c);
  }
  // Clause: mu_1 orthogonal to dir(Q) in both forms.
  {
    Clause c{"mu_1 orthogonal to dir(Q) under (.|.) and F_2", true, ""};
    const size_t nq = dd.w.size();
    RVec mq(nq);
    for (size_t qi = 0; qi < nq; ++qi) mq[qi] = hs(dd.mean_w, dd.w[qi], dd.dim);
    for (size_t i = 0; i < m && c.pass; ++i) {
      const BigRational h = hs(dd.mean_w, dd.u[i], dd.dim);
      BigRational f = 0;
      for (size_t qi = 0; qi < nq; ++qi) f += mq[qi] * dd.y[qi][i];
      f /= static_cast<int64_t>(nq);
      if (h != 0 || f != 0) {
        c.pass = false;
        c.detail = "direction " + std::to_string(i) + ": (mu_1|U) = " + to_string(h) +
                   ", F_2(mu_1,U) = " + to_string(f);
      }
    }
    r.clauses.push_back(c);
  }
}

}  // namespace

ConditionReport check_lin_wig_condition(const OperatorSet& q) {
  ConditionReport r;
  r.condition = "lin_in_wig";
  DirData dd = dir_data(q);
  r.dir_dimension = static_cast<int>(dd.u.size());
  add_wig_clauses(q, dd, r);
  r.pass = std::all_of(r.clauses.begin(), r.clauses.end(), [](const Clause& c) { return c.pass; });
  return r;
}

ConditionReport check_lin_jor_condition(const OperatorSet& q) {
  ConditionReport r;
  r.condition = "lin_in_jor";
  DirData dd = dir_data(q);
  r.dir_dimension = static_cast<int>(dd.u.size());
  add_wig_clauses(q, dd, r);

  const int dim = dd.dim;
  {
    Clause c{"mu_1 proportional to the identity", false, ""};
    OpMatrix mu = first_moment(q);
    const BigRational scale = mu.trace().rational() / dim;
    c.pass = mu == OpMatrix::identity(dim, mu.conductor()) * scale;
    c.detail = c.pass ? "mu_1 = " + to_string(scale) + " * 1" : "mu_1 is not a multiple of 1";
    r.clauses.push_back(c);
  }
  {
    Clause c{"span(Q) is Herm or Sym", false, ""};
    Echelon e(dd.basis.size());
    for (const auto& row : dd.w) e.add(row);
    const int rank = static_cast<int>(e.rank());
    const bool all_real_sym = std::all_of(q.elements.begin(), q.elements.end(), [](const OpMatrix& a) {
      return a.is_real() && a == a.transpose();
    });
    if (rank == dim * dim) {
      c.pass = true;
      c.detail = "Herm (rank " + std::to_string(rank) + ")";
    } else if (all_real_sym && rank == dim * (dim + 1) / 2) {
      c.pass = true;
      c.detail = "Sym (rank " + std::to_string(rank) + ")";
    } else {
      c.detail = "rank " + std::to_string(rank);
    }
    r.clauses.push_back(c);
  }
  {
    Clause c{"F_3 proportional to tr(ABC) + tr(ACB) on dir(Q)", true, ""};
    std::vector<OpMatrix> u;
    for (size_t p : dd.picks) u.push_back(q.elements[p] - q.elements[0]);
    const size_t m = u.size();
    std::map<std::pair<size_t, size_t>, OpMatrix> prod;
    auto product = [&](size_t i, size_t j) -> const OpMatrix& {
      auto it = prod.find({i, j});
      if (it == prod.end()) it = prod.emplace(std::make_pair(i, j), u[i] * u[j]).first;
      return it->second;
    };
    // The cubic trace form need not be rational for d > 3, so compare in the cyclotomic field.
    std::optional<CycNumber> ratio;
    for (size_t i = 0; i < m && c.pass; ++i)
      for (size_t j = i; j < m && c.pass; ++j)
        for (size_t k = j; k < m && c.pass; ++k) {
          BigRational f = 0;
          for (const auto& row : dd.y) f += row[i] * row[j] * row[k];
          f /= static_cast<int64_t>(dd.y.size());
          const CycNumber t = trace_product(product(i, j), u[k]) + trace_product(product(i, k), u[j]);
          const CycNumber fc(t.conductor(), f);
          if (!ratio && !t.is_zero()) ratio = fc / t;
          const CycNumber expect = ratio ? *ratio * t : CycNumber(t.conductor());
          if (!(fc == expect)) {
            c.pass = false;
            c.detail = "triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                       std::to_string(k) + "): F_3 = " + to_string(f) +
                       ", tr(ABC)+tr(ACB) = " + cyc_text(t);
          }
        }
    if (c.pass) c.detail = "ratio " + (ratio ? cyc_text(*ratio) : std::string("0"));
    r.clauses.push_back(c);
  }
  r.pass = std::all_of(r.clauses.begin(), r.clauses.end(), [](const Clause& c) { return c.pass; });
  return r;
}

}  // namespace stabsym
