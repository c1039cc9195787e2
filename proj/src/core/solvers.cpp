/*
Copyright 2026 domlab contributors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#include "core/solvers.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

namespace domlab {

namespace {

using Clock = std::chrono::steady_clock;

// Single-word fast path for n <= 64.
struct BitsSmall {
  std::uint64_t bits = 0;
  static BitsSmall zero(int) { return {}; }
  void add(const BitsSmall& o) { bits |= o.bits; }
  bool test(int i) const { return (bits >> i) & 1u; }
  void set(int i) { bits |= std::uint64_t{1} << i; }
  int count() const { return std::popcount(bits); }
  int count_outside(const BitsSmall& o) const { return std::popcount(bits & ~o.bits); }
};

// General path, any n.
struct BitsWide {
  std::vector<std::uint64_t> words;
  static BitsWide zero(int n) { return {std::vector<std::uint64_t>((n + 63) / 64, 0)}; }
  void add(const BitsWide& o) {
    for (std::size_t i = 0; i < words.size(); ++i) words[i] |= o.words[i];
  }
  bool test(int i) const { return (words[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
  int count() const {
    int s = 0;
    for (std::uint64_t w : words) s += std::popcount(w);
    return s;
  }
  int count_outside(const BitsWide& o) const {
    int s = 0;
    for (std::size_t i = 0; i < words.size(); ++i)
      s += std::popcount(words[i] & ~o.words[i]);
    return s;
  }
};

struct BudgetGuard {
  std::uint64_t node_limit;
  Clock::time_point deadline{};
  bool timed = false;
  std::uint64_t nodes = 0;

  explicit BudgetGuard(const SolveBudget& b) : node_limit(b.node_limit) {
    if (b.time_limit_seconds > 0) {
      timed = true;
      deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(b.time_limit_seconds));
    }
  }

  void tick() {
    if (++nodes > node_limit)
      fail(ErrorKind::Budget, "solver node limit exceeded (" + std::to_string(node_limit) + ")");
    if (timed && (nodes & 4095) == 0 && Clock::now() > deadline)
      fail(ErrorKind::Budget, "solver time limit exceeded");
  }
};

template <class B>
std::vector<B> closed_masks(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<B> masks(n, B::zero(n));
  for (int v = 0; v < n; ++v) {
    masks[v].set(v);
    for (int u : g.neighbors(v)) masks[v].set(u);
  }
  return masks;
}

template <class B>
struct DominationSearch {
  const Graph& g;
  const int n;
  const int maxdeg;
  std::vector<B> closed;
  std::vector<VertexList> closed_list;  // sorted N[v]
  BudgetGuard guard;

  VertexList best_set;
  int best = 0;
  VertexList current;

  DominationSearch(const Graph& graph, const SolveBudget& budget)
      : g(graph),
        n(graph.vertex_count()),
        maxdeg(std::max(1, max_degree(graph))),
        closed(closed_masks<B>(graph)),
        guard(budget) {
    closed_list.resize(n);
    for (int v = 0; v < n; ++v) {
      closed_list[v] = graph.neighbors(v);
      closed_list[v].push_back(v);
      std::sort(closed_list[v].begin(), closed_list[v].end());
    }
  }

  int pick_branch_vertex(const B& dominated) const {
    int v = -1;
    for (int i = 0; i < n; ++i) {
      if (dominated.test(i)) continue;
      if (v < 0 || g.degree(i) < g.degree(v)) v = i;
    }
    return v;
  }

  VertexList greedy_dominating() {
    B dominated = B::zero(n);
    VertexList chosen;
    while (dominated.count() < n) {
      int pick = -1, gain = -1;
      for (int u = 0; u < n; ++u) {
        int add = closed[u].count_outside(dominated);
        if (add > gain) {
          gain = add;
          pick = u;
        }
      }
      chosen.push_back(pick);
      dominated.add(closed[pick]);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }

  void dfs_gamma(const B& dominated) {
    guard.tick();
    int undominated = n - dominated.count();
    if (undominated == 0) {
      if (static_cast<int>(current.size()) < best) {
        best = static_cast<int>(current.size());
        best_set = current;
        std::sort(best_set.begin(), best_set.end());
      }
      return;
    }
    int lower = (undominated + maxdeg) / (maxdeg + 1);
    if (static_cast<int>(current.size()) + lower >= best) return;
    int v = pick_branch_vertex(dominated);
    for (int u : closed_list[v]) {
      B next = dominated;
      next.add(closed[u]);
      current.push_back(u);
      dfs_gamma(next);
      current.pop_back();
    }
  }

  VertexList greedy_independent_dominating() {
    B dominated = B::zero(n);
    B blocked = B::zero(n);
    VertexList chosen;
    while (dominated.count() < n) {
      int pick = -1, gain = -1;
      for (int u = 0; u < n; ++u) {
        if (blocked.test(u)) continue;
        int add = closed[u].count_outside(dominated);
        if (add > gain) {
          gain = add;
          pick = u;
        }
      }
      chosen.push_back(pick);
      dominated.add(closed[pick]);
      blocked.add(closed[pick]);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }

  void dfs_independent(const B& dominated, const B& blocked) {
    guard.tick();
    int undominated = n - dominated.count();
    if (undominated == 0) {
      if (static_cast<int>(current.size()) < best) {
        best = static_cast<int>(current.size());
        best_set = current;
        std::sort(best_set.begin(), best_set.end());
      }
      return;
    }
    int lower = (undominated + maxdeg) / (maxdeg + 1);
    if (static_cast<int>(current.size()) + lower >= best) return;
    int v = pick_branch_vertex(dominated);
    for (int u : closed_list[v]) {
      if (blocked.test(u)) continue;  // would break independence
      B nd = dominated, nb = blocked;
      nd.add(closed[u]);
      nb.add(closed[u]);
      current.push_back(u);
      dfs_independent(nd, nb);
      current.pop_back();
    }
  }

  // All dominating sets of exactly `target` vertices, members ascending.
  void dfs_enumerate(int start, int target, const B& dominated,
                     std::vector<VertexList>& out) {
    guard.tick();
    int undominated = n - dominated.count();
    if (static_cast<int>(current.size()) == target) {
      if (undominated == 0) out.push_back(current);
      return;
    }
    int slots = target - static_cast<int>(current.size());
    if (undominated > slots * (maxdeg + 1)) return;
    if (undominated > 0) {
      int m = 0;
      while (dominated.test(m)) ++m;
      // m must gain a dominator among ids >= start
      if (closed_list[m].back() < start) return;
    }
    for (int u = start; u < n; ++u) {
      if (closed[u].count_outside(dominated) == 0) continue;  // no minimum set keeps a useless member
      B next = dominated;
      next.add(closed[u]);
      current.push_back(u);
      dfs_enumerate(u + 1, target, next, out);
      current.pop_back();
    }
  }
};

template <class B>
VertexList solve_gamma(const Graph& g, const SolveBudget& budget, SolveStats* stats) {
  DominationSearch<B> search(g, budget);
  search.best_set = search.greedy_dominating();
  search.best = static_cast<int>(search.best_set.size());
  search.dfs_gamma(B::zero(g.vertex_count()));
  if (stats) stats->nodes += search.guard.nodes;
  return search.best_set;
}

template <class B>
VertexList solve_i(const Graph& g, const SolveBudget& budget, SolveStats* stats) {
  DominationSearch<B> search(g, budget);
  search.best_set = search.greedy_independent_dominating();
  search.best = static_cast<int>(search.best_set.size());
  search.dfs_independent(B::zero(g.vertex_count()), B::zero(g.vertex_count()));
  if (stats) stats->nodes += search.guard.nodes;
  return search.best_set;
}

template <class B>
std::vector<VertexList> solve_enumerate(const Graph& g, int target,
                                        const SolveBudget& budget, SolveStats* stats) {
  DominationSearch<B> search(g, budget);
  std::vector<VertexList> out;
  search.dfs_enumerate(0, target, B::zero(g.vertex_count()), out);
  if (stats) stats->nodes += search.guard.nodes;
  return out;
}

void require_nonempty(const Graph& g) {
  if (g.vertex_count() == 0)
    fail(ErrorKind::Precondition, "solver requires a nonempty graph");
}

}  // namespace

DominationCertificate DominationCertificate::verified(const Graph& g, VertexList set,
                                                      CertificateKind kind) {
  set = normalized_vertex_set(std::move(set), g.vertex_count());
  int missing = first_undominated(g, set);
  if (missing >= 0)
    fail(ErrorKind::Precondition,
         "set does not dominate: vertex " + std::to_string(missing) + " uncovered");
  int internal = domlab::internal_edge_count(g, set);
  if (kind == CertificateKind::IndependentDominating && internal != 0)
    fail(ErrorKind::Precondition, "independent certificate has internal edges");
  return DominationCertificate(std::move(set), internal, kind);
}

VertexList DominationCertificate::restricted_to(const VertexList& r) const {
  return set_intersection(set_, r);
}

DominationCertificate gamma_exact(const Graph& g, const SolveBudget& budget,
                                  SolveStats* stats) {
  require_nonempty(g);
  VertexList set = g.has_row_masks() ? solve_gamma<BitsSmall>(g, budget, stats)
                                     : solve_gamma<BitsWide>(g, budget, stats);
  return DominationCertificate::verified(g, std::move(set), CertificateKind::Dominating);
}

DominationCertificate i_exact(const Graph& g, const SolveBudget& budget,
                              SolveStats* stats) {
  require_nonempty(g);
  VertexList set = g.has_row_masks() ? solve_i<BitsSmall>(g, budget, stats)
                                     : solve_i<BitsWide>(g, budget, stats);
  return DominationCertificate::verified(g, std::move(set),
                                         CertificateKind::IndependentDominating);
}

std::vector<DominationCertificate> enumerate_min_dsets(const Graph& g,
                                                       const SolveBudget& budget,
                                                       SolveStats* stats) {
  require_nonempty(g);
  int gamma = gamma_exact(g, budget, stats).size();
  std::vector<VertexList> sets =
      g.has_row_masks() ? solve_enumerate<BitsSmall>(g, gamma, budget, stats)
                        : solve_enumerate<BitsWide>(g, gamma, budget, stats);
  std::vector<DominationCertificate> out;
  out.reserve(sets.size());
  for (VertexList& s : sets)
    out.push_back(DominationCertificate::verified(g, std::move(s),
                                                  CertificateKind::Dominating));
  return out;
}

DominationCertificate min_internal_edges_dset(const Graph& g, const SolveBudget& budget,
                                              SolveStats* stats) {
  std::vector<DominationCertificate> all = enumerate_min_dsets(g, budget, stats);
  const DominationCertificate* pick = &all.front();
  for (const DominationCertificate& c : all)
    if (c.internal_edge_count() < pick->internal_edge_count()) pick = &c;
  // enumeration order is lexicographic, so the first optimum wins ties
  return *pick;
}

namespace {

bool plain_dominating(const Graph& g, const std::vector<int>& pick, int k) {
  std::vector<char> covered(g.vertex_count(), 0);
  for (int i = 0; i < k; ++i) {
    covered[pick[i]] = 1;
    for (int u : g.neighbors(pick[i])) covered[u] = 1;
  }
  for (char c : covered)
    if (!c) return false;
  return true;
}

bool plain_independent(const Graph& g, const std::vector<int>& pick, int k) {
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.has_edge(pick[i], pick[j])) return false;
  return true;
}

template <class Accept>
VertexList first_subset_by_size(const Graph& g, Accept&& accept) {
  const int n = g.vertex_count();
  std::vector<int> pick(n);
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      if (accept(pick, k)) return VertexList(pick.begin(), pick.begin() + k);
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  fail(ErrorKind::Internal, "no dominating subset found");
}

void require_brute_size(const Graph& g) {
  require_nonempty(g);
  if (g.vertex_count() > 24)
    fail(ErrorKind::SizeLimit, "brute-force oracle requires n <= 24");
}

}  // namespace

DominationCertificate brute_force_gamma(const Graph& g) {
  require_brute_size(g);
  VertexList set = first_subset_by_size(
      g, [&](const std::vector<int>& pick, int k) { return plain_dominating(g, pick, k); });
  return DominationCertificate::verified(g, std::move(set), CertificateKind::Dominating);
}

DominationCertificate brute_force_i(const Graph& g) {
  require_brute_size(g);
  VertexList set = first_subset_by_size(g, [&](const std::vector<int>& pick, int k) {
    return plain_independent(g, pick, k) && plain_dominating(g, pick, k);
  });
  return DominationCertificate::verified(g, std::move(set),
                                         CertificateKind::IndependentDominating);
}

int reed_bound(int n) {
  if (n < 1) fail(ErrorKind::Precondition, "reed_bound requires n >= 1");
  return (n + 2) / 3;
}

}  // namespace domlab
