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
#pragma once

#include <cstdint>
#include <vector>

#include "core/graph.hpp"

namespace domlab {

// Caps on the exact searches. Exceeding either aborts with a budget
// error, never a wrong answer. time_limit_seconds == 0 means unlimited
// (the sweep default, so reruns stay deterministic).
struct SolveBudget {
  std::uint64_t node_limit = 200'000'000;
  double time_limit_seconds = 0.0;
};

struct SolveStats {
  std::uint64_t nodes = 0;
  void absorb(const SolveStats& other) { nodes += other.nodes; }
};

enum class CertificateKind { Dominating, IndependentDominating };

// A vertex set verified to dominate the graph it was built against,
// with its internal-edge count cached.
class DominationCertificate {
 public:
  static DominationCertificate verified(const Graph& g, VertexList set,
                                        CertificateKind kind);

  int size() const { return static_cast<int>(set_.size()); }
  const VertexList& members() const { return set_; }
  int internal_edge_count() const { return internal_edges_; }
  CertificateKind kind() const { return kind_; }
  // X(R): the restriction of the certificate set to another set.
  VertexList restricted_to(const VertexList& r) const;

 private:
  DominationCertificate(VertexList set, int internal, CertificateKind kind)
      : set_(std::move(set)), internal_edges_(internal), kind_(kind) {}

  VertexList set_;
  int internal_edges_;
  CertificateKind kind_;
};

// Exact domination number via branch and bound. Branches on a
// minimum-degree undominated vertex, trying each closed-neighborhood
// dominator in ascending id; lower bound ceil(undominated / (maxdeg+1)).
// Deterministic: two runs return the same certificate.
DominationCertificate gamma_exact(const Graph& g, const SolveBudget& budget,
                                  SolveStats* stats = nullptr);

// Exact independent domination number; searches independent sets
// directly so every candidate extension keeps independence.
DominationCertificate i_exact(const Graph& g, const SolveBudget& budget,
                              SolveStats* stats = nullptr);

// All dominating sets of size gamma(g), verified, in ascending
// lexicographic order of their sorted member lists.
std::vector<DominationCertificate> enumerate_min_dsets(const Graph& g,
                                                       const SolveBudget& budget,
                                                       SolveStats* stats = nullptr);

// Among all minimum dominating sets, the one minimizing the number of
// internal edges; ties broken by lexicographic member order.
DominationCertificate min_internal_edges_dset(const Graph& g,
                                              const SolveBudget& budget,
                                              SolveStats* stats = nullptr);

// Independent oracles: plain subset enumeration over adjacency lists,
// no shared machinery with the branch-and-bound path. n <= 24.
DominationCertificate brute_force_gamma(const Graph& g);
DominationCertificate brute_force_i(const Graph& g);

// ceil(n / 3)
int reed_bound(int n);

}  // namespace domlab
