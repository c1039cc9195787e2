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
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace domlab {

// One representative per isomorphism class of connected cubic graphs on
// n vertices, in deterministic order. Backtracking over adjacency
// matrices with canonical-prefix pruning; the emitted labeling is the
// unique maximum of the graph6 bit string over all relabelings, so no
// post-hoc dedup is needed. n even, 4 <= n <= 14.
std::vector<Graph> enumerate_cubic_connected(int n);

// Pairing-model random cubic graph: three stubs per vertex, uniformly
// matched, rejecting loops and parallel edges (and disconnected results
// when require_connected). Same seed, same graph.
Graph random_cubic(int n, std::uint64_t seed, bool require_connected = false,
                   int max_attempts = 2000);

// Fixed fixtures: k4, k33, prism, petersen, mobius_kantor, claw (k13),
// cN (cycle), pN (path).
Graph named_graph(const std::string& name);
std::vector<std::string> named_graph_names();

// Connected cubic graph of connectivity 1: k+1 subdivided-K4 gadgets
// joined stub-to-stub by k bridge edges, then relabeled by a seeded
// permutation. End gadgets are K4 with one edge subdivided (5 vertices,
// one degree-2 stub); interior gadgets subdivide two disjoint edges
// (6 vertices, two stubs).
Graph gadget_chain(int k, std::uint64_t seed);

}  // namespace domlab
