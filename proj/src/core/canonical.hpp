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

#include <string>
#include <vector>

#include "core/graph.hpp"

namespace domlab {

struct CanonicalForm {
  std::string graph6;         // canonical encoding, identical across relabelings
  std::vector<int> relabel;   // old id -> canonical id
};

// Iterated neighborhood-color refinement plus backtracking
// individualization, minimizing the adjacency certificate. Requires
// n <= 64. Sized for this corpus (exhaustive n <= 16 plus sparse cubic
// graphs up to a few dozen vertices); not a general-purpose isomorphism
// engine, and highly symmetric dense inputs can exhaust the search cap.
CanonicalForm canonical_form(const Graph& g);

std::string canonical_graph6(const Graph& g);

}  // namespace domlab
