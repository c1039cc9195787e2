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
#include "core/findings.hpp"

#include <algorithm>
#include <fstream>

namespace domlab {

Json finding_to_json(const Finding& f) {
  Json j;
  j["certificates"] = f.certificates;
  j["config_hash"] = f.config_hash;
  j["graph_key"] = f.graph_key;
  j["property_id"] = f.property_id;
  j["solver_stats"] = f.solver_stats;
  j["verdict"] = to_string(f.verdict);
  return j;
}

namespace {

Verdict verdict_from_string(const std::string& s) {
  if (s == "Holds") return Verdict::Holds;
  if (s == "Violated") return Verdict::Violated;
  if (s == "NotApplicable") return Verdict::NotApplicable;
  fail(ErrorKind::Parse, "unknown verdict: " + s);
}

}  // namespace

Finding finding_from_json(const Json& j) {
  Finding f;
  f.graph_key = j.at("graph_key").get<std::string>();
  f.property_id = j.at("property_id").get<std::string>();
  f.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  f.certificates = j.value("certificates", Json::object());
  f.solver_stats = j.value("solver_stats", Json::object());
  f.config_hash = j.value("config_hash", "");
  return f;
}

const char* to_string(CorpusSpec::Mode m) {
  switch (m) {
    case CorpusSpec::Mode::Exhaustive: return "exhaustive";
    case CorpusSpec::Mode::Random: return "random";
    case CorpusSpec::Mode::Named: return "named";
    case CorpusSpec::Mode::GadgetChain: return "gadget_chain";
  }
  return "unknown";
}

Json corpus_to_json(const CorpusSpec& c) {
  Json j;
  j["mode"] = to_string(c.mode);
  switch (c.mode) {
    case CorpusSpec::Mode::Exhaustive:
      j["n"] = c.n;
      break;
    case CorpusSpec::Mode::Random:
      j["n"] = c.n;
      j["count"] = c.count;
      j["seed"] = c.seed;
      j["connected_only"] = c.connected_only;
      break;
    case CorpusSpec::Mode::Named:
      j["name"] = c.name;
      break;
    case CorpusSpec::Mode::GadgetChain:
      j["k"] = c.k;
      j["seed"] = c.seed;
      break;
  }
  return j;
}

CorpusSpec corpus_from_json(const Json& j) {
  CorpusSpec c;
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "exhaustive") {
    c.mode = CorpusSpec::Mode::Exhaustive;
    c.n = j.at("n").get<int>();
  } else if (mode == "random") {
    c.mode = CorpusSpec::Mode::Random;
    c.n = j.at("n").get<int>();
    c.count = j.at("count").get<int>();
    c.seed = j.value("seed", std::uint64_t{0});
    c.connected_only = j.value("connected_only", true);
  } else if (mode == "named") {
    c.mode = CorpusSpec::Mode::Named;
    c.name = j.at("name").get<std::string>();
  } else if (mode == "gadget_chain") {
    c.mode = CorpusSpec::Mode::GadgetChain;
    c.k = j.at("k").get<int>();
    c.seed = j.value("seed", std::uint64_t{0});
  } else {
    fail(ErrorKind::Parse, "unknown corpus mode: " + mode);
  }
  return c;
}

Json run_config_to_json(const RunConfig& c) {
  Json j;
  j["corpus"] = corpus_to_json(c.corpus);
  j["properties"] = c.properties;
  j["budget_nodes"] = c.budget.node_limit;
  j["budget_seconds"] = c.budget.time_limit_seconds;
  j["peel_policy"] = to_string(c.peel_policy);
  j["seed"] = c.seed;
  j["workers"] = c.workers;
  j["cache"] = c.cache_path;
  return j;
}

RunConfig run_config_from_json(const Json& j) {
  RunConfig c;
  c.corpus = corpus_from_json(j.at("corpus"));
  if (j.contains("properties")) c.properties = j["properties"].get<std::vector<std::string>>();
  std::sort(c.properties.begin(), c.properties.end());
  c.properties.erase(std::unique(c.properties.begin(), c.properties.end()),
                     c.properties.end());
  c.budget.node_limit = j.value("budget_nodes", SolveBudget{}.node_limit);
  c.budget.time_limit_seconds = j.value("budget_seconds", 0.0);
  const std::string policy = j.value("peel_policy", "deg3");
  if (policy == "deg3")
    c.peel_policy = PeelPolicy::Deg3Incident;
  else if (policy == "any")
    c.peel_policy = PeelPolicy::Any;
  else
    fail(ErrorKind::Parse, "unknown peel policy: " + policy);
  c.seed = j.value("seed", std::uint64_t{0});
  c.workers = j.value("workers", 1);
  c.cache_path = j.value("cache", std::string("findings.jsonl"));
  return c;
}

std::string config_hash(const RunConfig& c) {
  Json j;
  j["corpus"] = corpus_to_json(c.corpus);
  j["properties"] = c.properties;
  j["budget_nodes"] = c.budget.node_limit;
  j["budget_seconds"] = c.budget.time_limit_seconds;
  j["peel_policy"] = to_string(c.peel_policy);
  j["seed"] = c.seed;
  const std::string dump = j.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char byte : dump) {
    h ^= byte;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

CacheLoad load_cache(const std::string& path) {
  CacheLoad out;
  std::ifstream in(path);
  if (!in.is_open()) return out;  // missing cache is simply empty
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      Finding f = finding_from_json(Json::parse(line));
      out.entries[{f.graph_key, f.property_id, f.config_hash}] = std::move(f);
    } catch (const std::exception& e) {
      out.corrupt_lines.push_back("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

void append_cache(const std::string& path, const std::vector<Finding>& findings) {
  if (findings.empty()) return;
  std::ofstream out(path, std::ios::app);
  if (!out.is_open()) fail(ErrorKind::Io, "cannot open cache file: " + path);
  for (const Finding& f : findings) out << finding_to_json(f).dump() << "\n";
}

}  // namespace domlab
