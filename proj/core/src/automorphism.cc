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

#include "stabsym/automorphism.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <utility>

namespace stabsym {

ColoredGraph ColoredGraph::from_gram(const GramMatrix& g) {
  std::map<BigRational, int> index;
  for (const auto& v : g.values) index.emplace(v, 0);
  int next = 0;
  for (auto& [v, i] : index) i = next++;
  ColoredGraph out;
  out.n = g.size;
  out.color.resize(g.values.size());
  for (size_t k = 0; k < g.values.size(); ++k) out.color[k] = index[g.values[k]];
  // Keep vertex colors apart from edge colors.
  for (int i = 0; i < out.n; ++i) out.color[static_cast<size_t>(i) * out.n + i] += next;
  return out;
}

bool ColoredGraph::is_automorphism(const Perm& p) const {
  if (static_cast<int>(p.size()) != n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((*this)(p[i], p[j]) != (*this)(i, j)) return false;
  return true;
}

double automorphism_budget_seconds() {
  if (const char* env = std::getenv("STABSYM_BUDGET_SECONDS")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return 600;
}

namespace {

using Clock = std::chrono::steady_clock;

uint64_t mix(uint64_t h, uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Ordered partition of the vertices into contiguous cells of `elems`.
struct Partition {
  std::vector<int> elems;
  std::vector<int> pos;       // vertex -> index in elems
  std::vector<int> cell;      // vertex -> start of its cell
  std::vector<int> cell_len;  // valid at cell starts
  int cells = 0;

  int size() const { return static_cast<int>(elems.size()); }
  bool discrete() const { return cells == size(); }
};

class Search {
 public:
  Search(const ColoredGraph& g, double budget)
      : g_(g), budget_(budget), start_(Clock::now()) {
    for (int c : g.color) colors_ = std::max(colors_, c + 1);
    sig_.assign(static_cast<size_t>(g.n) * colors_, 0);
  }

  AutomorphismResult run();

 private:
  uint64_t refine(Partition& p, std::vector<int> queue);
  static int target_cell(const Partition& p);
  uint64_t individualize(Partition& p, int v);
  bool dfs(const Partition& p, size_t depth, int level);
  bool out_of_time() {
    if (timed_out_) return true;
    if ((++ticks_ & 15) == 0) {
      const double s = std::chrono::duration<double>(Clock::now() - start_).count();
      if (s > budget_) timed_out_ = true;
    }
    return timed_out_;
  }
  std::vector<int> orbit_of(const std::vector<int>& seeds, int level) const;

  const ColoredGraph& g_;
  double budget_;
  Clock::time_point start_;
  int colors_ = 0;
  uint64_t ticks_ = 0;
  uint64_t nodes_ = 0;
  bool timed_out_ = false;
  std::vector<uint32_t> sig_;

  std::vector<Partition> path_;  // path_[k]: refined partition after k individualizations
  std::vector<uint64_t> trace_;
  std::vector<int> target_;  // start of the target cell at depth k
  std::vector<int> base_;
  std::vector<int> leaf_;
  std::vector<std::pair<Perm, int>> gens_;  // generator and the depth it was found at
};

uint64_t Search::refine(Partition& p, std::vector<int> queue) {
  const int n = g_.n;
  const int k = colors_;
  uint64_t trace = 0;
  std::vector<char> queued(n, 0);
  for (int s : queue) queued[s] = 1;
  std::vector<int> buf;
  for (size_t qi = 0; qi < queue.size() && !p.discrete(); ++qi) {
    const int s = queue[qi];
    queued[s] = 0;
    const int slen = p.cell_len[s];
    std::fill(sig_.begin(), sig_.end(), 0);
    for (int i = s; i < s + slen; ++i) {
      const int w = p.elems[i];
      const int* row = &g_.color[static_cast<size_t>(w) * n];
      for (int v = 0; v < n; ++v) ++sig_[static_cast<size_t>(v) * k + row[v]];
    }
    auto less = [&](int a, int b) {
      const uint32_t* x = &sig_[static_cast<size_t>(a) * k];
      const uint32_t* y = &sig_[static_cast<size_t>(b) * k];
      return std::lexicographical_compare(x, x + k, y, y + k);
    };
    auto same = [&](int a, int b) {
      return std::equal(&sig_[static_cast<size_t>(a) * k], &sig_[static_cast<size_t>(a + 1) * k],
                        &sig_[static_cast<size_t>(b) * k]);
    };
    for (int c = 0; c < n;) {
      const int len = p.cell_len[c];
      if (len > 1) {
        bool uniform = true;
        for (int i = c + 1; i < c + len && uniform; ++i)
          uniform = same(p.elems[c], p.elems[i]);
        if (!uniform) {
          std::stable_sort(p.elems.begin() + c, p.elems.begin() + c + len, less);
          trace = mix(trace, static_cast<uint64_t>(s) << 32 | static_cast<uint32_t>(c));
          const bool parent_queued = queued[c];
          int run = c;
          for (int i = c; i <= c + len; ++i) {
            if (i < c + len && same(p.elems[run], p.elems[i])) continue;
            p.cell_len[run] = i - run;
            uint64_t h = static_cast<uint64_t>(i - run);
            const uint32_t* x = &sig_[static_cast<size_t>(p.elems[run]) * k];
            for (int t = 0; t < k; ++t) h = mix(h, x[t]);
            trace = mix(trace, h);
            for (int j = run; j < i; ++j) {
              p.cell[p.elems[j]] = run;
              p.pos[p.elems[j]] = j;
            }
            if (run != c) ++p.cells;
            if (!queued[run] && (run != c || !parent_queued)) {
              queued[run] = 1;
              queue.push_back(run);
            }
            run = i;
          }
        }
      }
      c += len;
    }
  }
  return mix(trace, static_cast<uint64_t>(p.cells));
}

int Search::target_cell(const Partition& p) {
  int best = -1;
  for (int c = 0; c < p.size(); c += p.cell_len[c])
    if (p.cell_len[c] > 1 && (best < 0 || p.cell_len[c] < p.cell_len[best])) best = c;
  return best;
}

uint64_t Search::individualize(Partition& p, int v) {
  const int c = p.cell[v];
  const int len = p.cell_len[c];
  const int i = p.pos[v];
  std::swap(p.elems[c], p.elems[i]);
  p.pos[p.elems[i]] = i;
  p.pos[v] = c;
  p.cell_len[c] = 1;
  p.cell_len[c + 1] = len - 1;
  for (int j = c + 1; j < c + len; ++j) p.cell[p.elems[j]] = c + 1;
  ++p.cells;
  return refine(p, {c, c + 1});
}

std::vector<int> Search::orbit_of(const std::vector<int>& seeds, int level) const {
  std::vector<int> orb;
  std::vector<bool> seen(g_.n, false);
  for (int v : seeds)
    if (!seen[v]) {
      seen[v] = true;
      orb.push_back(v);
    }
  for (size_t i = 0; i < orb.size(); ++i)
    for (const auto& [p, lvl] : gens_) {
      if (lvl < level) continue;
      const int w = p[orb[i]];
      if (!seen[w]) {
        seen[w] = true;
        orb.push_back(w);
      }
    }
  return orb;
}

bool Search::dfs(const Partition& p, size_t depth, int level) {
  ++nodes_;
  if (out_of_time()) return false;
  const int t = target_cell(p);
  if (t < 0) {
    Perm gamma(g_.n);
    for (int i = 0; i < p.size(); ++i) gamma[leaf_[i]] = p.elems[i];
    if (!g_.is_automorphism(gamma)) return false;
    gens_.emplace_back(std::move(gamma), level);
    return true;
  }
  if (t != target_[depth] || p.cell_len[t] != path_[depth].cell_len[t]) return false;
  for (int i = t; i < t + p.cell_len[t]; ++i) {
    Partition q = p;
    if (individualize(q, p.elems[i]) != trace_[depth + 1] || q.cells != path_[depth + 1].cells)
      continue;
    if (dfs(q, depth + 1, level)) return true;
    if (timed_out_) return false;
  }
  return false;
}

AutomorphismResult Search::run() {
  AutomorphismResult result;
  const int n = g_.n;
  // Root: split by vertex color.
  Partition root;
  root.elems.resize(n);
  root.pos.resize(n);
  root.cell.resize(n);
  root.cell_len.assign(n, 0);
  for (int v = 0; v < n; ++v) root.elems[v] = v;
  std::stable_sort(root.elems.begin(), root.elems.end(),
                   [&](int a, int b) { return g_(a, a) < g_(b, b); });
  std::vector<int> queue;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && g_(root.elems[j], root.elems[j]) == g_(root.elems[i], root.elems[i])) ++j;
    root.cell_len[i] = j - i;
    for (int t = i; t < j; ++t) {
      root.cell[root.elems[t]] = i;
      root.pos[root.elems[t]] = t;
    }
    ++root.cells;
    queue.push_back(i);
    i = j;
  }
  if (n == 0) {
    result.order = 1;
    result.certified = true;
    return result;
  }

  Partition cur = root;
  trace_.push_back(refine(cur, queue));
  path_.push_back(cur);
  while (true) {
    const int t = target_cell(cur);
    if (t < 0) break;
    target_.push_back(t);
    base_.push_back(cur.elems[t]);
    trace_.push_back(individualize(cur, cur.elems[t]));
    path_.push_back(cur);
  }
  leaf_ = cur.elems;

  const int depth = static_cast<int>(base_.size());
  result.orbit_lengths.assign(depth, 1);
  for (int k = depth - 1; k >= 0 && !timed_out_; --k) {
    const Partition& node = path_[k];
    const int t = target_[k];
    std::vector<int> orb = orbit_of({base_[k]}, k);
    std::vector<int> failed;
    for (int i = t; i < t + node.cell_len[t]; ++i) {
      const int w = node.elems[i];
      if (std::find(orb.begin(), orb.end(), w) != orb.end()) continue;
      if (!failed.empty()) {
        std::vector<int> dead = orbit_of(failed, k);
        if (std::find(dead.begin(), dead.end(), w) != dead.end()) continue;
      }
      Partition q = node;
      bool found = false;
      if (individualize(q, w) == trace_[k + 1] && q.cells == path_[k + 1].cells)
        found = dfs(q, k + 1, k);
      if (timed_out_) break;
      if (found)
        orb = orbit_of({base_[k]}, k);
      else
        failed.push_back(w);
    }
    result.orbit_lengths[k] = static_cast<int>(orb.size());
  }

  for (auto& [p, lvl] : gens_) result.generators.push_back(p);
  result.base = base_;
  result.order = 1;
  for (int o : result.orbit_lengths) result.order *= o;
  result.certified = !timed_out_;
  result.nodes = nodes_;
  result.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
  return result;
}

}  // namespace

AutomorphismResult graph_automorphisms(const ColoredGraph& g, double budget_seconds) {
  if (budget_seconds <= 0) budget_seconds = automorphism_budget_seconds();
  return Search(g, budget_seconds).run();
}

AutomorphismResult gram_automorphisms(const GramMatrix& g, double budget_seconds) {
  return graph_automorphisms(ColoredGraph::from_gram(g), budget_seconds);
}

}  // namespace stabsym
