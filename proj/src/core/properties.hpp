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

#include "core/findings.hpp"

namespace domlab {

// Checkable statements, one Finding per (graph, property).
//
// Artifact-correctness properties (solver_oracle, peel_safety,
// fact_2_2, independentize) mark their violations blocking: they can
// only fail if the implementation is wrong. The remaining properties
// probe the statements themselves; a Violated there is a surfaced
// research result, not a build failure.
const std::vector<std::string>& all_property_ids();
bool is_known_property(const std::string& id);

// Fills verdict/certificates/solver_stats; graph_key and config_hash
// are the caller's job. Budget exhaustion comes back NotApplicable;
// unexpected errors come back as blocking violations.
Finding run_property(const std::string& id, const Graph& g, const RunConfig& cfg);

}  // namespace domlab
