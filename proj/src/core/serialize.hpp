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

#include <json.hpp>

#include "core/graph.hpp"
#include "core/solvers.hpp"
#include "core/transforms.hpp"

namespace domlab {

using Json = nlohmann::json;

Json edit_to_json(const GraphEdit& e);
GraphEdit edit_from_json(const Json& j);

// {graph6, steps: [{op, args, tag}], verdict} — keys stay in that
// (alphabetical) order so reruns are byte-identical.
Json trace_to_json(const std::string& input_graph6, const TransformTrace& trace,
                   const std::string& verdict);

Json certificate_to_json(const DominationCertificate& c);

Json decomposition_to_json(const std::string& input_graph6, const DecompositionResult& d);
Json reduction_to_json(const ReductionResult& r);
Json independentize_to_json(const IndependentizeResult& r);

}  // namespace domlab
