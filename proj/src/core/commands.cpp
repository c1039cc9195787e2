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
#include "core/commands.hpp"

#include "core/canonical.hpp"
#include "core/sweep.hpp"

namespace domlab {

namespace {

SolveBudget budget_from(const Json& options) {
  SolveBudget b;
  b.node_limit = options.value("budget_nodes", b.node_limit);
  b.time_limit_seconds = options.value("budget_seconds", 0.0);
  return b;
}

VertexList set_from(const Json& options, const char* field, const Graph& g) {
  if (!options.contains(field))
    fail(ErrorKind::Precondition, std::string("missing required option: ") + field);
  return normalized_vertex_set(options[field].get<VertexList>(), g.vertex_count());
}

PeelPolicy policy_from(const Json& options) {
  const std::string p = options.value("policy", "deg3");
  if (p == "deg3") return PeelPolicy::Deg3Incident;
  if (p == "any") return PeelPolicy::Any;
  fail(ErrorKind::Parse, "unknown peel policy: " + p);
}

EdgeList edges_from(const Json& options, const char* field) {
  EdgeList out;
  if (!options.contains(field))
    fail(ErrorKind::Precondition, std::string("missing required option: ") + field);
  for (const Json& pair : options[field]) {
    int a = pair.at(0).get<int>();
    int b = pair.at(1).get<int>();
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  return out;
}

void require_minimum(const Graph& g, const VertexList& x, const SolveBudget& budget) {
  if (!dominates(g, x))
    fail(ErrorKind::Precondition, "set does not dominate the graph");
  int gamma = gamma_exact(g, budget).size();
  if (gamma != static_cast<int>(x.size()))
    fail(ErrorKind::Precondition,
         "set of size " + std::to_string(x.size()) + " is not minimum (gamma = " +
             std::to_string(gamma) + ")");
}

}  // namespace

Json cmd_solve(const std::string& graph6, const Json& options) {
  Graph g = parse_graph6(graph6);
  SolveBudget budget = budget_from(options);
  SolveStats stats;
  DominationCertificate gc = gamma_exact(g, budget, &stats);
  DominationCertificate ic = i_exact(g, budget, &stats);
  int bound = reed_bound(g.vertex_count());
  Json j;
  j["graph6"] = to_graph6(g);
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["gamma"] = certificate_to_json(gc);
  j["i"] = certificate_to_json(ic);
  j["reed_bound"] = bound;
  j["within_bound"] = gc.size() <= bound;
  j["gamma_equals_i"] = gc.size() == ic.size();
  j["solver_nodes"] = stats.nodes;
  return j;
}

Json cmd_check(const std::string& kind, const std::string& graph6, const Json& options) {
  Graph g = parse_graph6(graph6);
  SolveBudget budget = budget_from(options);
  Json j;
  j["kind"] = kind;
  j["graph6"] = to_graph6(g);

  if (kind == "claw") {
    auto w = find_claw(g);
    j["found"] = w.has_value();
    if (w)
      j["witness"] = {{"center", w->center},
                      {"leaves", {w->leaves[0], w->leaves[1], w->leaves[2]}}};
  } else if (kind == "double-star") {
    auto w = find_double_star(g);
    j["found"] = w.has_value();
    if (w)
      j["witness"] = {{"centers", {w->center_x, w->center_y}},
                      {"leaves_x", {w->leaves_x[0], w->leaves_x[1]}},
                      {"leaves_y", {w->leaves_y[0], w->leaves_y[1]}}};
  } else if (kind == "deg3-pair") {
    auto w = find_adjacent_deg3_pair(g);
    j["found"] = w.has_value();
    if (w) j["witness"] = {{"edge", {w->x, w->y}}};
  } else if (kind == "lemma") {
    VertexList x = set_from(options, "set", g);
    DisjointnessReport rep = verify_disjoint_neighborhoods(g, x, budget);
    j["verdict"] = to_string(rep.verdict);
    if (!rep.reason.empty()) j["reason"] = rep.reason;
    if (rep.witness)
      j["witness"] = {{"v1", rep.witness->v1},
                      {"v2", rep.witness->v2},
                      {"w", rep.witness->w},
                      {"overlap", rep.witness->overlap}};
    j["checked_triples"] = rep.checked_triples;
    j["inclusion_minimal"] = internal_edges_inclusion_minimal(g, x, budget);
  } else if (kind == "redundant") {
    VertexList x = set_from(options, "set", g);
    Json edges = Json::array();
    for (const TaggedEdge& e : redundant_edges(g, x).edges)
      edges.push_back({{"edge", {e.u, e.v}}, {"rule", rule_token(e.rule)}});
    j["edges"] = std::move(edges);
  } else if (kind == "peel") {
    VertexList x = set_from(options, "set", g);
    PeelResult peel = peel_redundant_edges(g, x, policy_from(options));
    j["trace"] = trace_to_json(to_graph6(g), peel.trace, "Holds");
    j["result_graph6"] = to_graph6(peel.graph);
    j["deleted_edges"] = static_cast<int>(peel.trace.steps.size());
  } else if (kind == "bulk-deletion") {
    VertexList x = set_from(options, "set", g);
    EdgeList subset = edges_from(options, "uprime");
    BulkDeletionReport rep = check_bulk_deletion(g, x, subset, budget);
    j["verdict"] = to_string(rep.verdict);
    if (rep.undominated_vertex) j["undominated_vertex"] = *rep.undominated_vertex;
    if (rep.smaller_dset) j["smaller_dset"] = *rep.smaller_dset;
  } else if (kind == "anchored") {
    VertexList y = set_from(options, "set", g);
    AnchoredSet a = anchored_vertices(g, y);
    j["members"] = a.members;
    Json groups = Json::object();
    for (const auto& [anchor, members] : a.groups)
      groups[std::to_string(anchor)] = members;
    j["groups"] = std::move(groups);
  } else if (kind == "detach") {
    VertexList y = set_from(options, "set", g);
    VertexList s = set_from(options, "select", g);
    DetachmentResult det = apply_detachment(g, y, s);
    j["trace"] = trace_to_json(to_graph6(g), det.trace, "applied");
    j["result_graph6"] = to_graph6(det.graph);
  } else if (kind == "detach-dominating") {
    VertexList y = set_from(options, "set", g);
    VertexList s = set_from(options, "select", g);
    DetachDominationReport rep = check_detachment_dominating(g, y, s, budget);
    j["verdict"] = to_string(rep.verdict);
    if (rep.undominated_vertex) j["undominated_vertex"] = *rep.undominated_vertex;
  } else if (kind == "detach-dset") {
    VertexList y = set_from(options, "set", g);
    VertexList s = set_from(options, "select", g);
    DetachDsetReport rep = check_detachment_dset(g, y, s, budget);
    j["verdict"] = to_string(rep.verdict);
    j["combined_size"] = rep.combined_size;
    j["detached_gamma"] = rep.detached_gamma;
  } else if (kind == "claim") {
    VertexList x = set_from(options, "set", g);
    require_minimum(g, x, budget);
    DecompositionResult d = decompose_to_linear(g, x, policy_from(options));
    j["result"] = decomposition_to_json(to_graph6(g), d);
    j["verdict"] = d.claim_holds ? "Holds" : "Violated";
  } else if (kind == "reduce") {
    VertexList y = set_from(options, "set", g);
    ReductionResult r = component_reduce(g, y);
    j["result"] = reduction_to_json(r);
  } else if (kind == "independentize") {
    VertexList x = set_from(options, "set", g);
    require_minimum(g, x, budget);
    IndependentizeResult r = independentize(g, x);
    j["result"] = independentize_to_json(r);
    j["verdict"] = r.success ? "Holds" : "Violated";
  } else if (kind == "theorem") {
    SolveStats st;
    BoundOrEqualityReport rep = check_bound_or_equality(g, budget, &st);
    j["verdict"] = to_string(rep.verdict);
    j["gamma"] = rep.gamma;
    j["i"] = rep.independent_gamma;
    j["bound"] = rep.bound;
    j["gamma_set"] = rep.gamma_set;
    j["i_set"] = rep.i_set;
  } else {
    fail(ErrorKind::UnknownName, "unknown check kind: " + kind);
  }
  return j;
}

std::string cmd_gen(const Json& corpus_json) {
  return generate_graph6_lines(corpus_from_json(corpus_json));
}

Json cmd_sweep(const Json& config_json) {
  RunConfig cfg = run_config_from_json(config_json);
  SweepSummary summary = run_sweep(cfg);
  return summary_to_json(summary);
}

Json cmd_report(const std::string& cache_path) {
  ReportBundle bundle = render_report(cache_path);
  Json j;
  j["markdown"] = bundle.markdown;
  j["csv"] = bundle.csv;
  j["corrupt_lines"] = bundle.corrupt_lines;
  return j;
}

}  // namespace domlab
