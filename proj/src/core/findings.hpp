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

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "core/serialize.hpp"
#include "core/transforms.hpp"
#include "core/verdict.hpp"

namespace domlab {

// One property-check outcome for one graph. Versioned by config hash so
// reruns with changed budgets or policies never reuse stale results.
// Violated findings embed enough certificate material to re-verify.
struct Finding {
  std::string graph_key;  // canonical graph6
  std::string property_id;
  Verdict verdict = Verdict::NotApplicable;
  Json certificates = Json::object();
  Json solver_stats = Json::object();  // deterministic counters only
  std::string config_hash;

  // Build-blocking violations fail the whole run (exit code 1).
  bool blocking_violation() const {
    return verdict == Verdict::Violated && certificates.value("blocking", false);
  }
};

Json finding_to_json(const Finding& f);
Finding finding_from_json(const Json& j);

struct CorpusSpec {
  enum class Mode { Exhaustive, Random, Named, GadgetChain };

  Mode mode = Mode::Exhaustive;
  int n = 10;                   // exhaustive: all even sizes 4..n; random: max size
  int count = 0;                // random only
  std::uint64_t seed = 0;       // random only
  std::string name;             // named only
  int k = 1;                    // gadget chain only
  bool connected_only = true;   // random filter
};

const char* to_string(CorpusSpec::Mode m);
Json corpus_to_json(const CorpusSpec& c);
CorpusSpec corpus_from_json(const Json& j);

struct RunConfig {
  CorpusSpec corpus;
  std::vector<std::string> properties;  // sorted unique; empty means all
  SolveBudget budget;
  PeelPolicy peel_policy = PeelPolicy::Deg3Incident;
  std::uint64_t seed = 0;
  int workers = 1;              // excluded from the hash
  std::string cache_path = "findings.jsonl";  // excluded from the hash
};

Json run_config_to_json(const RunConfig& c);
RunConfig run_config_from_json(const Json& j);

// FNV-1a over the canonical JSON of the semantic fields (corpus,
// properties, budget, peel policy, seed). Worker count and cache path
// never change results, so they stay out of the hash.
std::string config_hash(const RunConfig& c);

// Append-only JSONL cache keyed by (graph_key, property_id, config_hash),
// last writer wins on duplicate keys.
using CacheKey = std::tuple<std::string, std::string, std::string>;

struct CacheLoad {
  std::map<CacheKey, Finding> entries;
  std::vector<std::string> corrupt_lines;  // "line N: message"
};

CacheLoad load_cache(const std::string& path);
void append_cache(const std::string& path, const std::vector<Finding>& findings);

}  // namespace domlab
