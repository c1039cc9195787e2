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
#include <string>
#include <vector>

#include "core/findings.hpp"

namespace domlab {

// Graphs in canonical labeling, deduped and sorted by canonical key.
std::vector<std::pair<std::string, Graph>> build_corpus(const CorpusSpec& spec);

// Raw generator output (labelings as constructed), newline-delimited
// graph6. (mode, seed) fully determines the bytes.
std::string generate_graph6_lines(const CorpusSpec& spec);

struct SweepSummary {
  int graphs = 0;
  int tasks = 0;
  int cache_hits = 0;
  int computed = 0;
  // property -> {Holds, Violated, NotApplicable}
  std::map<std::string, std::array<int, 3>> verdict_counts;
  bool blocking_violation = false;
  std::string config_hash;
};

// Fans graphs out to a bounded worker pool; skips findings already in
// the cache under the same config hash; appends the rest in canonical
// (graph_key, property) order so output bytes never depend on worker
// count or scheduling.
SweepSummary run_sweep(const RunConfig& cfg);

Json summary_to_json(const SweepSummary& s);

struct ReportBundle {
  std::string markdown;
  std::string csv;
  std::vector<std::string> corrupt_lines;
};

ReportBundle render_report(const std::string& cache_path);

}  // namespace domlab
