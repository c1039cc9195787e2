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

// Thin CLI over the shared-library C API. All graph work happens behind
// domlab_run_*; this file only parses flags, shapes JSON, and renders.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "domlab/domlab.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitBlocking = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

int exit_code_for(domlab_status status) {
  switch (status) {
    case DOMLAB_OK: return kExitOk;
    case DOMLAB_ERR_PARSE:
    case DOMLAB_ERR_PRECONDITION:
    case DOMLAB_ERR_SIZE_LIMIT:
    case DOMLAB_ERR_UNKNOWN_NAME: return kExitUsage;
    case DOMLAB_ERR_BUDGET: return kExitBudget;
    case DOMLAB_ERR_IO:
    case DOMLAB_ERR_INTERNAL: return kExitBlocking;
  }
  return kExitBlocking;
}

std::string take_string(char* owned) {
  std::string out = owned ? owned : "";
  domlab_string_free(owned);
  return out;
}

std::vector<std::string> read_graph_lines(const std::string& input) {
  std::vector<std::string> lines;
  auto consume = [&](std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
      if (!line.empty()) lines.push_back(line);
    }
  };
  if (input == "-") {
    consume(std::cin);
  } else {
    std::ifstream file(input);
    if (!file.is_open()) {
      std::cerr << "error: cannot open input file: " << input << "\n";
      std::exit(kExitUsage);
    }
    consume(file);
  }
  return lines;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

Json parse_edge_list(const std::string& text) {
  Json out = Json::array();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos) {
      std::cerr << "error: edges look like u-v (got '" << item << "')\n";
      std::exit(kExitUsage);
    }
    out.push_back({std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))});
  }
  return out;
}

struct CommonOptions {
  std::uint64_t budget_nodes = domlab_default_budget().node_limit;
  double budget_seconds = 0.0;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--budget-nodes", opts.budget_nodes, "search-tree node cap");
  cmd->add_option("--budget-seconds", opts.budget_seconds, "wall-clock cap (0 = unlimited)");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
}

struct CorpusOptions {
  std::string mode = "exhaustive";
  int n = 10;
  int count = 100;
  std::uint64_t seed = 1;
  std::string name = "petersen";
  int k = 1;
  bool allow_disconnected = false;
};

void add_corpus(CLI::App* cmd, CorpusOptions& c) {
  cmd->add_option("--mode", c.mode, "corpus mode")
      ->check(CLI::IsMember({"exhaustive", "random", "named", "gadget"}));
  cmd->add_option("--n", c.n, "max vertex count (exhaustive: every even size up to n)");
  cmd->add_option("--count", c.count, "number of random graphs");
  cmd->add_option("--seed", c.seed, "generator seed");
  cmd->add_option("--name", c.name, "named fixture");
  cmd->add_option("--k", c.k, "gadget chain length");
  cmd->add_flag("--allow-disconnected", c.allow_disconnected,
                "keep disconnected pairing-model samples");
}

Json corpus_json(const CorpusOptions& c) {
  Json j;
  if (c.mode == "exhaustive") {
    j["mode"] = "exhaustive";
    j["n"] = c.n;
  } else if (c.mode == "random") {
    j["mode"] = "random";
    j["n"] = c.n;
    j["count"] = c.count;
    j["seed"] = c.seed;
    j["connected_only"] = !c.allow_disconnected;
  } else if (c.mode == "named") {
    j["mode"] = "named";
    j["name"] = c.name;
  } else {
    j["mode"] = "gadget_chain";
    j["k"] = c.k;
    j["seed"] = c.seed;
  }
  return j;
}

std::string render_set(const Json& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(set[i].get<int>());
  }
  return out + "}";
}

void render_solve_text(const Json& r) {
  std::cout << "graph: " << r["graph6"].get<std::string>() << "  (n=" << r["n"]
            << ", m=" << r["m"] << ")\n";
  std::cout << "gamma = " << r["gamma"]["size"] << "  " << render_set(r["gamma"]["set"])
            << "  internal_edges=" << r["gamma"]["internal_edges"] << "\n";
  std::cout << "i     = " << r["i"]["size"] << "  " << render_set(r["i"]["set"]) << "\n";
  std::cout << "reed bound = " << r["reed_bound"]
            << "  within: " << (r["within_bound"].get<bool>() ? "yes" : "no")
            << "  gamma==i: " << (r["gamma_equals_i"].get<bool>() ? "yes" : "no") << "\n";
}

void render_sweep_text(const Json& s) {
  std::cout << "graphs: " << s["graphs"] << "  tasks: " << s["tasks"]
            << "  cache hits: " << s["cache_hits"] << "  computed: " << s["computed"]
            << "\n";
  std::cout << "config: " << s["config_hash"].get<std::string>() << "\n";
  std::cout << "property                 Holds  Violated  NotApplicable\n";
  for (const auto& [prop, counts] : s["properties"].items()) {
    std::printf("%-24s %5d  %8d  %13d\n", prop.c_str(), counts["holds"].get<int>(),
                counts["violated"].get<int>(), counts["not_applicable"].get<int>());
  }
  if (s["blocking_violation"].get<bool>())
    std::cout << "BUILD-BLOCKING VIOLATION recorded; see the cache for certificates\n";
}

int fail_with(domlab_status status, const std::string& what) {
  std::cerr << "error (" << what << "): " << domlab_last_error() << "\n";
  return exit_code_for(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"domination laboratory for small cubic graphs"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "exact gamma/i plus the ceil(n/3) comparison");
  std::string solve_graph, solve_input;
  CommonOptions solve_opts;
  solve->add_option("graph6", solve_graph, "graph6 line");
  solve->add_option("--input,-i", solve_input, "file of graph6 lines, or - for stdin");
  add_common(solve, solve_opts);

  // gen
  auto* gen = app.add_subcommand("gen", "emit a corpus as newline-delimited graph6");
  CorpusOptions gen_corpus;
  std::string gen_output;
  add_corpus(gen, gen_corpus);
  gen->add_option("--output,-o", gen_output, "output file (default stdout)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "run property checks over a corpus");
  CorpusOptions sweep_corpus;
  CommonOptions sweep_opts;
  std::string sweep_properties;
  std::string sweep_cache = "findings.jsonl";
  std::string sweep_policy = "deg3";
  int sweep_workers = 1;
  add_corpus(sweep, sweep_corpus);
  add_common(sweep, sweep_opts);
  sweep->add_option("--properties", sweep_properties,
                    "comma-separated property ids (default: all)");
  sweep->add_option("--cache", sweep_cache, "findings cache (JSONL, appended)");
  sweep->add_option("--workers", sweep_workers, "worker threads");
  sweep->add_option("--peel-policy", sweep_policy, "peel policy")
      ->check(CLI::IsMember({"deg3", "any"}));

  // check
  auto* check = app.add_subcommand("check", "run one checker with a full trace");
  std::string check_kind, check_graph, check_input;
  std::string check_set, check_select, check_uprime;
  std::string check_policy = "deg3";
  CommonOptions check_opts;
  check->add_option("kind", check_kind, "checker kind")->required();
  check->add_option("graph6", check_graph, "graph6 line");
  check->add_option("--input,-i", check_input, "file with one graph6 line, or -");
  check->add_option("--set", check_set, "vertex set, comma-separated ids");
  check->add_option("--select", check_select, "selection inside the anchored set");
  check->add_option("--uprime", check_uprime, "edge list like 0-1,1-2");
  check->add_option("--peel-policy", check_policy, "peel policy")
      ->check(CLI::IsMember({"deg3", "any"}));
  add_common(check, check_opts);

  // report
  auto* report = app.add_subcommand("report", "render CSV + Markdown from a cache");
  std::string report_cache = "findings.jsonl";
  std::string report_md, report_csv;
  report->add_option("--cache", report_cache, "findings cache to read");
  report->add_option("--md", report_md, "write Markdown here (default stdout)");
  report->add_option("--csv", report_csv, "write CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (solve->parsed()) {
    std::vector<std::string> graphs;
    if (!solve_graph.empty()) graphs.push_back(solve_graph);
    if (!solve_input.empty())
      for (std::string& line : read_graph_lines(solve_input)) graphs.push_back(line);
    if (graphs.empty()) {
      std::cerr << "error: no input graph (pass a graph6 line or --input)\n";
      return kExitUsage;
    }
    Json options{{"budget_nodes", solve_opts.budget_nodes},
                 {"budget_seconds", solve_opts.budget_seconds}};
    const std::string options_str = options.dump();
    for (const std::string& g6 : graphs) {
      char* out = nullptr;
      domlab_status status = domlab_run_solve(g6.c_str(), options_str.c_str(), &out);
      if (status != DOMLAB_OK) return fail_with(status, "solve");
      Json r = Json::parse(take_string(out));
      if (solve_opts.format == "json")
        std::cout << r.dump() << "\n";
      else
        render_solve_text(r);
    }
    return kExitOk;
  }

  if (gen->parsed()) {
    char* out = nullptr;
    domlab_status status = domlab_run_gen(corpus_json(gen_corpus).dump().c_str(), &out);
    if (status != DOMLAB_OK) return fail_with(status, "gen");
    std::string lines = take_string(out);
    if (gen_output.empty()) {
      std::cout << lines;
    } else {
      std::ofstream file(gen_output);
      if (!file.is_open()) {
        std::cerr << "error: cannot open output file: " << gen_output << "\n";
        return kExitUsage;
      }
      file << lines;
    }
    return kExitOk;
  }

  if (sweep->parsed()) {
    Json cfg;
    cfg["corpus"] = corpus_json(sweep_corpus);
    if (!sweep_properties.empty()) {
      Json props = Json::array();
      std::stringstream ss(sweep_properties);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) props.push_back(item);
      cfg["properties"] = props;
    }
    cfg["budget_nodes"] = sweep_opts.budget_nodes;
    cfg["budget_seconds"] = sweep_opts.budget_seconds;
    cfg["peel_policy"] = sweep_policy;
    cfg["seed"] = sweep_corpus.seed;
    cfg["workers"] = sweep_workers;
    cfg["cache"] = sweep_cache;
    char* out = nullptr;
    domlab_status status = domlab_run_sweep(cfg.dump().c_str(), &out);
    if (status != DOMLAB_OK) return fail_with(status, "sweep");
    Json summary = Json::parse(take_string(out));
    if (sweep_opts.format == "json")
      std::cout << summary.dump() << "\n";
    else
      render_sweep_text(summary);
    return summary["blocking_violation"].get<bool>() ? kExitBlocking : kExitOk;
  }

  if (check->parsed()) {
    std::string g6 = check_graph;
    if (g6.empty() && !check_input.empty()) {
      auto lines = read_graph_lines(check_input);
      if (!lines.empty()) g6 = lines.front();
    }
    if (g6.empty()) {
      std::cerr << "error: no input graph (pass a graph6 line or --input)\n";
      return kExitUsage;
    }
    Json options{{"budget_nodes", check_opts.budget_nodes},
                 {"budget_seconds", check_opts.budget_seconds},
                 {"policy", check_policy}};
    if (!check_set.empty()) options["set"] = parse_int_list(check_set);
    if (!check_select.empty()) options["select"] = parse_int_list(check_select);
    if (!check_uprime.empty()) options["uprime"] = parse_edge_list(check_uprime);
    char* out = nullptr;
    domlab_status status =
        domlab_run_check(check_kind.c_str(), g6.c_str(), options.dump().c_str(), &out);
    if (status != DOMLAB_OK) return fail_with(status, "check " + check_kind);
    Json r = Json::parse(take_string(out));
    if (check_opts.format == "json")
      std::cout << r.dump() << "\n";
    else
      std::cout << r.dump(2) << "\n";
    return kExitOk;
  }

  if (report->parsed()) {
    char* out = nullptr;
    domlab_status status = domlab_run_report(report_cache.c_str(), &out);
    if (status != DOMLAB_OK) return fail_with(status, "report");
    Json r = Json::parse(take_string(out));
    for (const auto& line : r["corrupt_lines"])
      std::cerr << "cache " << line.get<std::string>() << "\n";
    if (!report_csv.empty()) {
      std::ofstream csv(report_csv);
      if (!csv.is_open()) {
        std::cerr << "error: cannot open " << report_csv << "\n";
        return kExitUsage;
      }
      csv << r["csv"].get<std::string>();
    }
    if (report_md.empty()) {
      std::cout << r["markdown"].get<std::string>();
    } else {
      std::ofstream md(report_md);
      if (!md.is_open()) {
        std::cerr << "error: cannot open " << report_md << "\n";
        return kExitUsage;
      }
      md << r["markdown"].get<std::string>();
    }
    return kExitOk;
  }

  return kExitUsage;
}
