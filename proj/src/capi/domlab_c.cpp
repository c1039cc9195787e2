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
#include "domlab/domlab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/canonical.hpp"
#include "core/commands.hpp"
#include "core/graph.hpp"
#include "core/solvers.hpp"

using namespace domlab;

struct domlab_graph {
  Graph graph;
};

struct domlab_certificate {
  DominationCertificate cert;
};

namespace {

thread_local std::string g_last_error;

domlab_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return DOMLAB_ERR_PARSE;
    case ErrorKind::Precondition: return DOMLAB_ERR_PRECONDITION;
    case ErrorKind::Budget: return DOMLAB_ERR_BUDGET;
    case ErrorKind::SizeLimit: return DOMLAB_ERR_SIZE_LIMIT;
    case ErrorKind::UnknownName: return DOMLAB_ERR_UNKNOWN_NAME;
    case ErrorKind::Io: return DOMLAB_ERR_IO;
    case ErrorKind::Internal: return DOMLAB_ERR_INTERNAL;
  }
  return DOMLAB_ERR_INTERNAL;
}

template <class Fn>
domlab_status guarded(Fn&& fn) {
  try {
    fn();
    return DOMLAB_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return DOMLAB_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return DOMLAB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DOMLAB_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Json parse_options(const char* options_json) {
  if (!options_json || !*options_json) return Json::object();
  return Json::parse(options_json);
}

SolveBudget to_budget(const domlab_budget* budget) {
  SolveBudget b;
  if (budget) {
    b.node_limit = budget->node_limit;
    b.time_limit_seconds = budget->time_limit_seconds;
  }
  return b;
}

}  // namespace

extern "C" {

const char* domlab_version(void) { return "0.1.0"; }

const char* domlab_last_error(void) { return g_last_error.c_str(); }

void domlab_string_free(char* s) { std::free(s); }

domlab_status domlab_graph_parse_g6(const char* line, domlab_graph** out) {
  if (!line || !out) {
    g_last_error = "null argument";
    return DOMLAB_ERR_PRECONDITION;
  }
  return guarded([&] { *out = new domlab_graph{parse_graph6(line)}; });
}

domlab_status domlab_graph_to_g6(const domlab_graph* g, char** out) {
  if (!g || !out) {
    g_last_error = "null argument";
    return DOMLAB_ERR_PRECONDITION;
  }
  return guarded([&] { *out = dup_string(to_graph6(g->graph)); });
}

domlab_status domlab_graph_canonical_g6(const domlab_graph* g, char** out) {
  if (!g || !out) {
    g_last_error = "null argument";
    return DOMLAB_ERR_PRECONDITION;
  }
  return guarded([&] { *out = dup_string(canonical_graph6(g->graph)); });
}

void domlab_graph_free(domlab_graph* g) { delete g; }

int domlab_graph_vertex_count(const domlab_graph* g) {
  return g ? g->graph.vertex_count() : -1;
}

int domlab_graph_edge_count(const domlab_graph* g) {
  return g ? g->graph.edge_count() : -1;
}

int domlab_graph_degree(const domlab_graph* g, int v) {
  if (!g || v < 0 || v >= g->graph.vertex_count()) return -1;
  return g->graph.degree(v);
}

int domlab_graph_has_edge(const domlab_graph* g, int u, int v) {
  if (!g || u < 0 || v < 0 || u >= g->graph.vertex_count() ||
      v >= g->graph.vertex_count())
    return 0;
  return g->graph.has_edge(u, v) ? 1 : 0;
}

int domlab_graph_is_cubic(const domlab_graph* g) {
  return g && is_cubic(g->graph) ? 1 : 0;
}

int domlab_graph_is_connected(const domlab_graph* g) {
  return g && is_connected(g->graph) ? 1 : 0;
}

domlab_budget domlab_default_budget(void) {
  SolveBudget b;
  return {b.node_limit, b.time_limit_seconds};
}

domlab_status domlab_solve_gamma(const domlab_graph* g, const domlab_budget* budget,
                                 domlab_certificate** out) {
  if (!g || !out) {
    g_last_error = "null argument";
    return DOMLAB_ERR_PRECONDITION;
  }
  return guarded([&] {
    *out = new domlab_certificate{gamma_exact(g->graph, to_budget(budget))};
  });
}

domlab_status domlab_solve_i(const domlab_graph* g, const domlab_budget* budget,
                             domlab_certificate** out) {
  if (!g || !out) {
    g_last_error = "null argument";
    return DOMLAB_ERR_PRECONDITION;
  }
  return guarded([&] {
    *out = new domlab_certificate{i_exact(g->graph, to_budget(budget))};
  });
}

domlab_status domlab_brute_gamma(const domlab_graph* g, domlab_certificate** out) {
  if (!g || !out) {
    g_last_error = "null argument";
    return DOMLAB_ERR_PRECONDITION;
  }
  return guarded([&] { *out = new domlab_certificate{brute_force_gamma(g->graph)}; });
}

domlab_status domlab_brute_i(const domlab_graph* g, domlab_certificate** out) {
  if (!g || !out) {
    g_last_error = "null argument";
    return DOMLAB_ERR_PRECONDITION;
  }
  return guarded([&] { *out = new domlab_certificate{brute_force_i(g->graph)}; });
}

void domlab_certificate_free(domlab_certificate* c) { delete c; }

int domlab_certificate_size(const domlab_certificate* c) {
  return c ? c->cert.size() : -1;
}

int domlab_certificate_internal_edges(const domlab_certificate* c) {
  return c ? c->cert.internal_edge_count() : -1;
}

int domlab_certificate_member(const domlab_certificate* c, int index) {
  if (!c || index < 0 || index >= c->cert.size()) return -1;
  return c->cert.members()[index];
}

int domlab_reed_bound(int n) { return n < 1 ? 0 : (n + 2) / 3; }

domlab_status domlab_run_solve(const char* graph6, const char* options_json,
                               char** report_json) {
  if (!graph6 || !report_json) {
    g_last_error = "null argument";
    return DOMLAB_ERR_PRECONDITION;
  }
  return guarded([&] {
    *report_json = dup_string(cmd_solve(graph6, parse_options(options_json)).dump());
  });
}

domlab_status domlab_run_check(const char* kind, const char* graph6,
                               const char* options_json, char** report_json) {
  if (!kind || !graph6 || !report_json) {
    g_last_error = "null argument";
    return DOMLAB_ERR_PRECONDITION;
  }
  return guarded([&] {
    *report_json = dup_string(cmd_check(kind, graph6, parse_options(options_json)).dump());
  });
}

domlab_status domlab_run_gen(const char* corpus_json, char** graph6_lines) {
  if (!corpus_json || !graph6_lines) {
    g_last_error = "null argument";
    return DOMLAB_ERR_PRECONDITION;
  }
  return guarded([&] { *graph6_lines = dup_string(cmd_gen(Json::parse(corpus_json))); });
}

domlab_status domlab_run_sweep(const char* config_json, char** summary_json) {
  if (!config_json || !summary_json) {
    g_last_error = "null argument";
    return DOMLAB_ERR_PRECONDITION;
  }
  return guarded([&] {
    *summary_json = dup_string(cmd_sweep(Json::parse(config_json)).dump());
  });
}

domlab_status domlab_run_report(const char* cache_path, char** report_json) {
  if (!cache_path || !report_json) {
    g_last_error = "null argument";
    return DOMLAB_ERR_PRECONDITION;
  }
  return guarded([&] { *report_json = dup_string(cmd_report(cache_path).dump()); });
}

}  // extern "C"
