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
#include <optional>
#include <string>

#include "core/graph.hpp"
#include "core/solvers.hpp"
#include "core/verdict.hpp"

namespace domlab {

// Induced K_{1,3}: a center plus three pairwise non-adjacent neighbors.
struct ClawWitness {
  int center;
  std::array<int, 3> leaves;
};

std::optional<ClawWitness> find_claw(const Graph& g);

// Double star as a subgraph: adjacent centers x, y plus two further
// leaves on each side, all six vertices distinct. Leaves may carry
// extra edges (subgraph containment, not induced).
struct DoubleStarWitness {
  int center_x;
  int center_y;
  std::array<int, 2> leaves_x;
  std::array<int, 2> leaves_y;
};

std::optional<DoubleStarWitness> find_double_star(const Graph& g);

// Weaker pattern: an edge whose endpoints both have degree >= 3. A
// double-star witness always implies one of these; the converse fails
// when candidate leaves overlap.
struct AdjacentDeg3Pair {
  int x;
  int y;
};

std::optional<AdjacentDeg3Pair> find_adjacent_deg3_pair(const Graph& g);

// True when no minimum dominating set has an internal-edge set that is
// a strict subset of x's (the inclusion reading of internal-edge
// minimality, as opposed to the count reading used elsewhere).
bool internal_edges_inclusion_minimal(const Graph& g, const VertexList& x,
                                      const SolveBudget& budget);

struct DisjointnessWitness {
  int v1;
  int v2;
  int w;
  VertexList overlap;  // N[{v1,v2}] ∩ N[w]
};

struct DisjointnessReport {
  Verdict verdict = Verdict::NotApplicable;
  std::string reason;  // set on NotApplicable
  std::optional<DisjointnessWitness> witness;
  int checked_triples = 0;
};

// For a max-degree-3 graph and a minimum dominating set x of size >= 3
// that attains the minimum internal-edge count and has at least one
// internal edge: checks every internal edge (v1,v2) against every
// w in x \ {v1,v2} for closed-neighborhood disjointness. w is excluded
// from the edge's endpoints (the statement is trivially false there).
// Throws when x does not dominate.
DisjointnessReport verify_disjoint_neighborhoods(const Graph& g, const VertexList& x,
                                                 const SolveBudget& budget);

}  // namespace domlab
