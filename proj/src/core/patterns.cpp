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
#include "core/patterns.hpp"

#include <algorithm>

namespace domlab {

std::optional<ClawWitness> find_claw(const Graph& g) {
  for (int c = 0; c < g.vertex_count(); ++c) {
    const VertexList& nb = g.neighbors(c);
    if (nb.size() < 3) continue;
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.has_edge(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k) {
          if (g.has_edge(nb[i], nb[k]) || g.has_edge(nb[j], nb[k])) continue;
          return ClawWitness{c, {nb[i], nb[j], nb[k]}};
        }
      }
  }
  return std::nullopt;
}

std::optional<DoubleStarWitness> find_double_star(const Graph& g) {
  for (auto [x, y] : g.edges()) {
    VertexList a = g.neighbors(x);
    a.erase(std::remove(a.begin(), a.end(), y), a.end());
    VertexList b = g.neighbors(y);
    b.erase(std::remove(b.begin(), b.end(), x), b.end());
    if (a.size() < 2 || b.size() < 2) continue;
    // exact distinct-leaf assignment, first hit in ascending order
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j)
        for (std::size_t k = 0; k < b.size(); ++k) {
          if (b[k] == a[i] || b[k] == a[j]) continue;
          for (std::size_t l = k + 1; l < b.size(); ++l) {
            if (b[l] == a[i] || b[l] == a[j]) continue;
            return DoubleStarWitness{x, y, {a[i], a[j]}, {b[k], b[l]}};
          }
        }
  }
  return std::nullopt;
}

std::optional<AdjacentDeg3Pair> find_adjacent_deg3_pair(const Graph& g) {
  for (auto [u, v] : g.edges())
    if (g.degree(u) >= 3 && g.degree(v) >= 3) return AdjacentDeg3Pair{u, v};
  return std::nullopt;
}

bool internal_edges_inclusion_minimal(const Graph& g, const VertexList& x,
                                      const SolveBudget& budget) {
  EdgeList mine = internal_edges(g, x);
  for (const DominationCertificate& cert : enumerate_min_dsets(g, budget)) {
    EdgeList theirs = internal_edges(g, cert.members());
    if (theirs.size() >= mine.size()) continue;
    if (std::includes(mine.begin(), mine.end(), theirs.begin(), theirs.end()))
      return false;
  }
  return true;
}

DisjointnessReport verify_disjoint_neighborhoods(const Graph& g, const VertexList& x,
                                                 const SolveBudget& budget) {
  VertexList set = normalized_vertex_set(x, g.vertex_count());
  if (!dominates(g, set))
    fail(ErrorKind::Precondition, "input set does not dominate the graph");

  DisjointnessReport report;
  if (max_degree(g) > 3) {
    report.reason = "max degree exceeds 3";
    return report;
  }
  if (set.size() < 3) {
    report.reason = "|X| < 3";
    return report;
  }
  EdgeList inside = internal_edges(g, set);
  if (inside.empty()) {
    report.reason = "E(X) empty";
    return report;
  }
  SolveStats stats;
  DominationCertificate opt = min_internal_edges_dset(g, budget, &stats);
  if (static_cast<int>(set.size()) != opt.size()) {
    report.reason = "X is not a minimum dominating set";
    return report;
  }
  if (internal_edge_count(g, set) != opt.internal_edge_count()) {
    report.reason = "X does not attain the minimum internal-edge count";
    return report;
  }

  for (auto [v1, v2] : inside) {
    VertexList pair_hood = closed_neighborhood(g, {v1, v2});
    for (int w : set) {
      if (w == v1 || w == v2) continue;
      ++report.checked_triples;
      VertexList overlap = set_intersection(pair_hood, closed_neighborhood(g, {w}));
      if (!overlap.empty()) {
        report.verdict = Verdict::Violated;
        report.witness = DisjointnessWitness{v1, v2, w, std::move(overlap)};
        return report;
      }
    }
  }
  report.verdict = Verdict::Holds;
  return report;
}

}  // namespace domlab
