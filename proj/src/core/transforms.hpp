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

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/graph.hpp"
#include "core/patterns.hpp"
#include "core/solvers.hpp"
#include "core/verdict.hpp"

namespace domlab {

// Classification of edges that can be deleted without breaking
// domination by x. Rule tags:
//   i   both endpoints outside x
//   ii  exactly one endpoint (v1) in x and the outside endpoint v2 has
//       another dominator: (N(v2) \ {v1}) ∩ x nonempty
//   iii both endpoints in x
enum class EdgeRule { BothOutside, CoveredEndpoint, BothInside };
const char* rule_token(EdgeRule r);  // "i" / "ii" / "iii"

struct TaggedEdge {
  int u;
  int v;
  EdgeRule rule;
};

struct RedundantEdgeSet {
  std::vector<TaggedEdge> edges;  // lexicographic by (u, v)
  bool contains(int u, int v) const;
};

RedundantEdgeSet redundant_edges(const Graph& g, const VertexList& x);

// Deg3Incident deletes only edges incident to a current degree-3
// vertex; Any deletes any qualifying edge. Candidate order is
// (rule i < ii < iii, then min id, then max id), recomputed per step.
enum class PeelPolicy { Deg3Incident, Any };
const char* to_string(PeelPolicy p);

struct PeelResult {
  Graph graph;
  TransformTrace trace;
};

// One edge at a time, recomputing the redundant set after each
// deletion; verifies x still dominates after every step.
PeelResult peel_redundant_edges(const Graph& g, const VertexList& x, PeelPolicy policy);

// Simultaneous deletion of an arbitrary redundant subset, checked
// literally: does x still dominate g - u_subset, and is it still
// minimum there? (The one-at-a-time reading above is what the
// decomposition pipeline uses; this checker exists to probe the
// all-at-once reading, which is falsifiable.)
struct BulkDeletionReport {
  Verdict verdict;
  std::optional<int> undominated_vertex;
  std::optional<VertexList> smaller_dset;
};

BulkDeletionReport check_bulk_deletion(const Graph& g, const VertexList& x,
                                       const EdgeList& u_subset, const SolveBudget& budget);

// Vertices anchored to y: members b with exactly one y-neighbor t and
// no other y-vertex in N[b]. groups[t] is the maximal such set per t.
struct AnchoredSet {
  VertexList members;
  std::map<int, int> anchor_of;          // member -> its unique y-neighbor
  std::map<int, VertexList> groups;      // anchor -> members
};

AnchoredSet anchored_vertices(const Graph& g, const VertexList& y);

// Detachment of a selected subset s of the anchored vertices: per
// member, delete the anchor edge, then subdivide each remaining
// incident edge with a fresh vertex.
struct DetachmentStep {
  int vertex;
  int anchor;
  std::vector<std::array<int, 3>> subdivisions;  // (vertex, other_end, new_id)
};

struct DetachmentResult {
  Graph graph;
  std::vector<DetachmentStep> steps;
  TransformTrace trace;
};

DetachmentResult apply_detachment(const Graph& g, const VertexList& y, const VertexList& s);

// y must be a minimum dominating set of g; verifies y ∪ s dominates
// the detached graph.
struct DetachDominationReport {
  Verdict verdict;
  std::optional<int> undominated_vertex;
};

DetachDominationReport check_detachment_dominating(const Graph& g, const VertexList& y,
                                                   const VertexList& s,
                                                   const SolveBudget& budget);

// y must be a minimum dominating set of g - s (vertex deletion);
// verifies |y ∪ s| equals the domination number of the detached graph.
struct DetachDsetReport {
  Verdict verdict;
  int combined_size;
  int detached_gamma;
};

DetachDsetReport check_detachment_dset(const Graph& g, const VertexList& y,
                                       const VertexList& s, const SolveBudget& budget);

// Full decomposition pipeline for a connected cubic graph and a minimum
// dominating set x: peel redundant edges to exhaustion, select the
// detachment set (degree-3 outsiders, plus one chosen neighbor per
// degree-3 member of x), detach, and classify the components of the
// result. Internal contract violations are reported, not thrown.
struct ComponentVerdict {
  VertexList vertices;
  ComponentShape shape;
  VertexList y_restriction;
  bool dominated;
};

struct DecompositionResult {
  PeelResult peel;
  VertexList t1;       // degree-3 non-x vertices of the peeled graph
  VertexList t2;       // chosen neighbors of degree-3 x vertices
  VertexList t_all;    // t1 ∪ t2
  DetachmentResult detachment;
  VertexList y;        // x ∪ t_all
  std::vector<ComponentVerdict> components;
  std::vector<std::string> contract_violations;
  bool accounting_ok;  // detachment vertex/edge counts match
  bool y_dominates;    // y dominates the detached graph
  bool linear;         // every component is a path, cycle, or isolated vertex
  bool claim_holds;    // linear && y_dominates && no contract violations
};

DecompositionResult decompose_to_linear(const Graph& g, const VertexList& x,
                                        PeelPolicy policy);

// Iterated 3-vertex window removal on a max-degree-2 component. Each
// step picks the smallest member v of y with degree 2, both neighbors
// outside y, and N[v] a proper subset of the vertices; removes N[v];
// joins the two attachment vertices when both exist and the edge is
// absent; then applies the y-update once if some y-pair became adjacent.
struct YUpdate {
  int kept;             // x1, stays in y
  int dropped;          // x2, removed from y
  std::optional<int> added;  // other neighbor of x2, when it exists
};

struct ReductionStep {
  int chosen;                 // v, in pre-step ids
  std::array<int, 3> window;  // N[v], sorted, pre-step ids
  VertexList attachments;     // pre-step ids
  std::optional<std::pair<int, int>> added_edge;  // post-step ids
  bool edge_already_present;
  std::optional<YUpdate> y_update;  // post-step ids
  std::vector<int> relabel;         // pre-step id -> post-step id
};

struct ReductionResult {
  Graph graph;
  VertexList y_final;
  std::vector<ReductionStep> steps;
};

ReductionResult component_reduce(const Graph& a, const VertexList& y_a);

// Greedy application of the exchange moves that turn a dominating set
// with internal edges into an independent one: per internal edge, try
// dropping an endpoint whose closed neighborhood stays covered, else
// swap a degree-2 endpoint to its outside neighbor when that
// neighbor's other neighbors all avoid x. A move is accepted only if
// the result still dominates and (|X|, internal edges) strictly
// decreases lexicographically.
struct ExchangeMove {
  enum class Type { Drop, Swap };
  Type type;
  std::pair<int, int> edge;
  int removed;
  int added;  // -1 for drops
};

struct IndependentizeResult {
  bool success;
  std::optional<DominationCertificate> independent;
  std::vector<ExchangeMove> moves;
  std::optional<std::pair<int, int>> blocking_edge;
  std::optional<AdjacentDeg3Pair> stuck_witness;
  VertexList final_set;
};

IndependentizeResult independentize(const Graph& g, const VertexList& x);

// gamma <= ceil(n/3) or gamma == i; Violated carries both certificates.
struct BoundOrEqualityReport {
  Verdict verdict;
  int gamma;
  int independent_gamma;
  int bound;
  VertexList gamma_set;
  VertexList i_set;
};

BoundOrEqualityReport check_bound_or_equality(const Graph& g, const SolveBudget& budget,
                                              SolveStats* stats = nullptr);

}  // namespace domlab
