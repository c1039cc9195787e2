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
#include "core/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace domlab {

namespace {

using Cert = std::vector<std::uint64_t>;

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct CanonSearch {
  const Graph& g;
  const int n;
  Cert best;
  std::vector<int> best_order;  // canonical position -> vertex
  bool have_best = false;
  Dsu orbits;
  std::uint64_t leaves = 0;
  static constexpr std::uint64_t kLeafCap = 2'000'000;

  explicit CanonSearch(const Graph& graph)
      : g(graph), n(graph.vertex_count()), orbits(std::max(1, graph.vertex_count())) {}

  // Split color classes by the multiset of neighbor colors until stable.
  std::vector<int> refine(std::vector<int> color) const {
    int colors = 1 + (color.empty() ? 0 : *std::max_element(color.begin(), color.end()));
    while (true) {
      std::vector<std::vector<int>> key(n);
      for (int v = 0; v < n; ++v) {
        key[v].push_back(color[v]);
        for (int u : g.neighbors(v)) key[v].push_back(color[u]);
        std::sort(key[v].begin() + 1, key[v].end());
      }
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return key[a] < key[b]; });
      std::vector<int> next(n);
      int rank = 0;
      for (int i = 0; i < n; ++i) {
        if (i > 0 && key[order[i]] != key[order[i - 1]]) ++rank;
        next[order[i]] = rank;
      }
      if (rank + 1 == colors) return next;
      colors = rank + 1;
      color = std::move(next);
    }
  }

  Cert certificate(const std::vector<int>& order) const {
    const int words = (n * (n - 1) / 2 + 63) / 64;
    Cert cert(std::max(1, words), 0);
    int idx = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (g.has_edge(order[a], order[b]))
          cert[idx >> 6] |= std::uint64_t{1} << (63 - (idx & 63));
        ++idx;
      }
    return cert;
  }

  void leaf(const std::vector<int>& color) {
    if (++leaves > kLeafCap)
      fail(ErrorKind::Internal, "canonical form search exceeded its node cap");
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[color[v]] = v;
    Cert cert = certificate(order);
    if (!have_best || cert < best) {
      best = std::move(cert);
      best_order = order;
      have_best = true;
    } else if (cert == best) {
      // two orderings with equal certificates name an automorphism
      for (int k = 0; k < n; ++k) orbits.unite(best_order[k], order[k]);
    }
  }

  void dfs(const std::vector<int>& raw_color, int depth) {
    std::vector<int> color = refine(raw_color);
    int max_color = color.empty() ? -1 : *std::max_element(color.begin(), color.end());
    if (max_color + 1 == n) {
      leaf(color);
      return;
    }
    // first non-singleton cell in color order
    std::vector<int> cell_size(max_color + 1, 0);
    for (int c : color) ++cell_size[c];
    int target = 0;
    while (cell_size[target] < 2) ++target;
    std::vector<int> candidates;
    for (int v = 0; v < n; ++v)
      if (color[v] == target) candidates.push_back(v);

    std::vector<int> expanded;
    for (int cand : candidates) {
      if (depth == 0) {
        bool pruned = false;
        for (int e : expanded)
          if (orbits.find(e) == orbits.find(cand)) {
            pruned = true;
            break;
          }
        if (pruned) continue;
        expanded.push_back(cand);
      }
      std::vector<int> child(n);
      for (int v = 0; v < n; ++v)
        child[v] = 2 * color[v] + (color[v] == target && v != cand ? 1 : 0);
      dfs(child, depth + 1);
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 64) fail(ErrorKind::SizeLimit, "canonical form requires n <= 64");
  if (n == 0) return {to_graph6(g), {}};

  CanonSearch search(g);
  std::vector<int> initial(n);
  for (int v = 0; v < n; ++v) initial[v] = g.degree(v);
  // rank initial degrees to dense colors
  {
    std::vector<int> sorted(initial);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int& c : initial)
      c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
  }
  search.dfs(initial, 0);

  std::vector<int> relabel(n);
  for (int pos = 0; pos < n; ++pos) relabel[search.best_order[pos]] = pos;
  return {to_graph6(relabeled(g, relabel)), relabel};
}

std::string canonical_graph6(const Graph& g) { return canonical_form(g).graph6; }

}  // namespace domlab
