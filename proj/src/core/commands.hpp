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

#include "core/serialize.hpp"

namespace domlab {

// JSON-in / JSON-out command layer. The shared-library boundary and the
// CLI both speak through these.

Json cmd_solve(const std::string& graph6, const Json& options);

// kinds: claw, double-star, deg3-pair, lemma, redundant, peel,
// bulk-deletion, anchored, detach, detach-dominating, detach-dset,
// claim, reduce, independentize, theorem
Json cmd_check(const std::string& kind, const std::string& graph6, const Json& options);

std::string cmd_gen(const Json& corpus_json);

Json cmd_sweep(const Json& config_json);

Json cmd_report(const std::string& cache_path);

}  // namespace domlab
