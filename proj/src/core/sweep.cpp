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
#include "core/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "core/canonical.hpp"
#include "core/generators.hpp"
#include "core/properties.hpp"

namespace domlab {

namespace {

std::vector<Graph> generate_raw(const CorpusSpec& spec) {
  std::vector<Graph> out;
  switch (spec.mode) {
    case CorpusSpec::Mode::Exhaustive: {
      for (int n = 4; n <= spec.n; n += 2)
        for (Graph& g : enumerate_cubic_connected(n)) out.push_back(std::move(g));
      break;
    }
    case CorpusSpec::Mode::Random: {
      std::vector<int> sizes;
      for (int n = 4; n <= spec.n; n += 2) sizes.push_back(n);
      if (sizes.empty())
        fail(ErrorKind::Precondition, "random corpus needs n >= 4");
      for (int i = 0; i < spec.count; ++i) {
        int n = sizes[i % sizes.size()];
        out.push_back(random_cubic(n, spec.seed + static_cast<std::uint64_t>(i),
                                   spec.connected_only));
      }
      break;
    }
    case CorpusSpec::Mode::Named:
      out.push_back(named_graph(spec.name));
      break;
    case CorpusSpec::Mode::GadgetChain:
      out.push_back(gadget_chain(spec.k, spec.seed));
      break;
  }
  return out;
}

}  // namespace

std::vector<std::pair<std::string, Graph>> build_corpus(const CorpusSpec& spec) {
  std::vector<std::pair<std::string, Graph>> out;
  for (const Graph& g : generate_raw(spec)) {
    std::string key = canonical_graph6(g);
    out.emplace_back(std::move(key), Graph());
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto& a, const auto& b) { return a.first == b.first; }),
            out.end());
  for (auto& [key, graph] : out) graph = parse_graph6(key);
  return out;
}

std::string generate_graph6_lines(const CorpusSpec& spec) {
  std::string lines;
  for (const Graph& g : generate_raw(spec)) {
    lines += to_graph6(g);
    lines += "\n";
  }
  return lines;
}

SweepSummary run_sweep(const RunConfig& raw_cfg) {
  RunConfig cfg = raw_cfg;
  if (cfg.properties.empty()) cfg.properties = all_property_ids();
  std::sort(cfg.properties.begin(), cfg.properties.end());
  cfg.properties.erase(std::unique(cfg.properties.begin(), cfg.properties.end()),
                       cfg.properties.end());
  for (const std::string& p : cfg.properties)
    if (!is_known_property(p)) fail(ErrorKind::UnknownName, "unknown property: " + p);
  if (cfg.workers < 1) cfg.workers = 1;

  SweepSummary summary;
  summary.config_hash = config_hash(cfg);

  std::vector<std::pair<std::string, Graph>> corpus = build_corpus(cfg.corpus);
  summary.graphs = static_cast<int>(corpus.size());

  CacheLoad cache = load_cache(cfg.cache_path);

  struct Slot {
    const std::string* key;
    const Graph* graph;
    const std::string* property;
    Finding finding;
    bool cached = false;
  };
  std::vector<Slot> slots;
  std::vector<std::size_t> todo;
  for (const auto& [key, graph] : corpus)
    for (const std::string& prop : cfg.properties) {
      Slot slot;
      slot.key = &key;
      slot.graph = &graph;
      slot.property = &prop;
      auto it = cache.entries.find({key, prop, summary.config_hash});
      if (it != cache.entries.end()) {
        slot.finding = it->second;
        slot.cached = true;
        ++summary.cache_hits;
      } else {
        todo.push_back(slots.size());
      }
      slots.push_back(std::move(slot));
    }
  summary.tasks = static_cast<int>(slots.size());

  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= todo.size()) break;
      Slot& slot = slots[todo[i]];
      Finding f = run_property(*slot.property, *slot.graph, cfg);
      f.graph_key = *slot.key;
      f.config_hash = summary.config_hash;
      slot.finding = std::move(f);
    }
  };
  if (cfg.workers == 1 || todo.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    int count = std::min<std::size_t>(cfg.workers, todo.size());
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  // new findings leave in slot order: (graph_key, property_id) ascending
  std::vector<Finding> fresh;
  for (const Slot& slot : slots)
    if (!slot.cached) fresh.push_back(slot.finding);
  summary.computed = static_cast<int>(fresh.size());
  append_cache(cfg.cache_path, fresh);

  for (const Slot& slot : slots) {
    auto& counts = summary.verdict_counts[*slot.property];
    switch (slot.finding.verdict) {
      case Verdict::Holds: ++counts[0]; break;
      case Verdict::Violated: ++counts[1]; break;
      case Verdict::NotApplicable: ++counts[2]; break;
    }
    if (slot.finding.blocking_violation()) summary.blocking_violation = true;
  }
  return summary;
}

Json summary_to_json(const SweepSummary& s) {
  Json per_property = Json::object();
  for (const auto& [prop, counts] : s.verdict_counts)
    per_property[prop] = {{"holds", counts[0]},
                          {"violated", counts[1]},
                          {"not_applicable", counts[2]}};
  Json j;
  j["graphs"] = s.graphs;
  j["tasks"] = s.tasks;
  j["cache_hits"] = s.cache_hits;
  j["computed"] = s.computed;
  j["properties"] = per_property;
  j["blocking_violation"] = s.blocking_violation;
  j["config_hash"] = s.config_hash;
  return j;
}

namespace {

struct GraphRow {
  int n = 0;
  int gamma = -1;
  int independent = -1;
  std::map<std::string, std::string> verdicts;
};

}  // namespace

ReportBundle render_report(const std::string& cache_path) {
  CacheLoad cache = load_cache(cache_path);
  ReportBundle bundle;
  bundle.corrupt_lines = cache.corrupt_lines;

  // last-writer-wins per (graph, property); hashes collapse for display
  std::map<std::string, GraphRow> rows;
  std::map<std::string, std::array<int, 3>> totals;
  std::vector<const Finding*> violated;
  for (const auto& [key, finding] : cache.entries) {
    GraphRow& row = rows[finding.graph_key];
    row.n = parse_graph6(finding.graph_key).vertex_count();
    row.verdicts[finding.property_id] = to_string(finding.verdict);
    if (finding.certificates.contains("gamma") && finding.certificates["gamma"].is_number())
      row.gamma = finding.certificates["gamma"].get<int>();
    if (finding.certificates.contains("i") && finding.certificates["i"].is_number())
      row.independent = finding.certificates["i"].get<int>();
    auto& counts = totals[finding.property_id];
    switch (finding.verdict) {
      case Verdict::Holds: ++counts[0]; break;
      case Verdict::Violated: ++counts[1]; break;
      case Verdict::NotApplicable: ++counts[2]; break;
    }
    if (finding.verdict == Verdict::Violated) violated.push_back(&finding);
  }

  std::map<int, int> gap_histogram;
  for (const auto& [key, row] : rows)
    if (row.gamma >= 0 && row.independent >= 0)
      ++gap_histogram[row.independent - row.gamma];

  std::ostringstream md;
  md << "# findings report\n\n";
  md << "cache: `" << cache_path << "` (" << rows.size() << " graphs, "
     << cache.entries.size() << " findings)\n\n";

  md << "## per-property summary\n\n";
  md << "| property | Holds | Violated | NotApplicable |\n";
  md << "|---|---:|---:|---:|\n";
  for (const auto& [prop, counts] : totals)
    md << "| " << prop << " | " << counts[0] << " | " << counts[1] << " | "
       << counts[2] << " |\n";
  md << "\n";

  md << "## per-graph results\n\n";
  md << "| graph | n | gamma | i | gap |\n";
  md << "|---|---:|---:|---:|---:|\n";
  for (const auto& [key, row] : rows) {
    md << "| `" << key << "` | " << row.n << " | ";
    if (row.gamma >= 0) md << row.gamma;
    md << " | ";
    if (row.independent >= 0) md << row.independent;
    md << " | ";
    if (row.gamma >= 0 && row.independent >= 0) md << row.independent - row.gamma;
    md << " |\n";
  }
  md << "\n";

  md << "## i - gamma gap histogram\n\n";
  md << "| gap | graphs |\n|---:|---:|\n";
  for (const auto& [gap, count] : gap_histogram)
    md << "| " << gap << " | " << count << " |\n";
  md << "\n";

  if (!violated.empty()) {
    md << "## violated findings\n\n";
    for (const Finding* f : violated) {
      md << "### `" << f->graph_key << "` / " << f->property_id;
      if (f->blocking_violation()) md << " (build-blocking)";
      md << "\n\n```json\n" << f->certificates.dump(2) << "\n```\n\n";
    }
  }

  if (!bundle.corrupt_lines.empty()) {
    md << "## corrupt cache lines\n\n";
    for (const std::string& line : bundle.corrupt_lines) md << "- " << line << "\n";
    md << "\n";
  }
  bundle.markdown = md.str();

  std::ostringstream csv;
  csv << "graph_key,n,property_id,verdict,gamma,i\n";
  for (const auto& [key, row] : rows)
    for (const auto& [prop, verdict] : row.verdicts) {
      csv << key << "," << row.n << "," << prop << "," << verdict << ",";
      if (row.gamma >= 0) csv << row.gamma;
      csv << ",";
      if (row.independent >= 0) csv << row.independent;
      csv << "\n";
    }
  bundle.csv = csv.str();
  return bundle;
}

}  // namespace domlab
