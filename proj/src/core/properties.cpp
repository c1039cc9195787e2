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
#include "core/properties.hpp"

#include <algorithm>

#include "core/generators.hpp"

namespace domlab {

namespace {

struct Outcome {
  Verdict verdict = Verdict::NotApplicable;
  Json certs = Json::object();
  Json stats = Json::object();
};

Outcome not_applicable(const std::string& reason) {
  Outcome o;
  o.certs["reason"] = reason;
  return o;
}

bool corpus_graph(const Graph& g) { return is_cubic(g) && is_connected(g); }

Json pair_json(int a, int b) { return Json::array({a, b}); }

std::vector<DominationCertificate> min_internal_dsets(const Graph& g,
                                                      const SolveBudget& budget,
                                                      SolveStats* stats) {
  std::vector<DominationCertificate> all = enumerate_min_dsets(g, budget, stats);
  int best = all.front().internal_edge_count();
  for (const DominationCertificate& c : all)
    best = std::min(best, c.internal_edge_count());
  std::vector<DominationCertificate> out;
  for (DominationCertificate& c : all)
    if (c.internal_edge_count() == best) out.push_back(std::move(c));
  return out;
}

// --- property implementations -------------------------------------------

Outcome prop_reed_bound(const Graph& g, const RunConfig& cfg) {
  if (!corpus_graph(g)) return not_applicable("not a connected cubic graph");
  SolveStats st;
  DominationCertificate gc = gamma_exact(g, cfg.budget, &st);
  int bound = reed_bound(g.vertex_count());
  Outcome o;
  o.certs["gamma"] = gc.size();
  o.certs["gamma_set"] = gc.members();
  o.certs["bound"] = bound;
  o.stats["nodes"] = st.nodes;
  o.verdict = gc.size() <= bound ? Verdict::Holds : Verdict::Violated;
  return o;
}

Outcome prop_theorem(const Graph& g, const RunConfig& cfg) {
  if (!corpus_graph(g)) return not_applicable("not a connected cubic graph");
  SolveStats st;
  BoundOrEqualityReport rep = check_bound_or_equality(g, cfg.budget, &st);
  Outcome o;
  o.verdict = rep.verdict;
  o.certs["gamma"] = rep.gamma;
  o.certs["i"] = rep.independent_gamma;
  o.certs["bound"] = rep.bound;
  o.certs["gamma_set"] = rep.gamma_set;
  o.certs["i_set"] = rep.i_set;
  o.stats["nodes"] = st.nodes;
  return o;
}

Outcome prop_claw_free_equality(const Graph& g, const RunConfig& cfg) {
  auto claw = find_claw(g);
  if (claw) {
    Outcome o = not_applicable("claw present");
    o.certs["claw"] = {{"center", claw->center},
                       {"leaves", {claw->leaves[0], claw->leaves[1], claw->leaves[2]}}};
    return o;
  }
  SolveStats st;
  DominationCertificate gc = gamma_exact(g, cfg.budget, &st);
  DominationCertificate ic = i_exact(g, cfg.budget, &st);
  Outcome o;
  o.certs["gamma"] = gc.size();
  o.certs["i"] = ic.size();
  o.certs["gamma_set"] = gc.members();
  o.certs["i_set"] = ic.members();
  o.stats["nodes"] = st.nodes;
  o.verdict = gc.size() == ic.size() ? Verdict::Holds : Verdict::Violated;
  return o;
}

Outcome prop_double_star_free_equality(const Graph& g, const RunConfig& cfg) {
  auto star = find_double_star(g);
  auto pair = find_adjacent_deg3_pair(g);
  Json shared;
  shared["double_star_free"] = !star.has_value();
  shared["adjacent_deg3_pair_free"] = !pair.has_value();
  // the proof-side predicate is weaker; the readings diverge when the
  // pair exists but no six-distinct-vertex assignment does
  shared["divergent"] = !star.has_value() && pair.has_value();
  if (pair) shared["adjacent_deg3_pair"] = pair_json(pair->x, pair->y);
  if (star) {
    Outcome o = not_applicable("double star present");
    o.certs.update(shared);
    o.certs["double_star"] = {{"centers", pair_json(star->center_x, star->center_y)},
                              {"leaves_x", {star->leaves_x[0], star->leaves_x[1]}},
                              {"leaves_y", {star->leaves_y[0], star->leaves_y[1]}}};
    return o;
  }
  SolveStats st;
  DominationCertificate gc = gamma_exact(g, cfg.budget, &st);
  DominationCertificate ic = i_exact(g, cfg.budget, &st);
  Outcome o;
  o.certs = shared;
  o.certs["gamma"] = gc.size();
  o.certs["i"] = ic.size();
  o.certs["gamma_set"] = gc.members();
  o.certs["i_set"] = ic.members();
  o.stats["nodes"] = st.nodes;
  o.verdict = gc.size() == ic.size() ? Verdict::Holds : Verdict::Violated;
  return o;
}

Outcome prop_disjoint_neighborhoods(const Graph& g, const RunConfig& cfg) {
  SolveStats st;
  std::vector<DominationCertificate> candidates = min_internal_dsets(g, cfg.budget, &st);
  Outcome o;
  o.certs["reading"] = "global_min_internal_edges";
  o.certs["min_internal_edges"] = candidates.front().internal_edge_count();
  o.certs["candidate_dsets"] = static_cast<int>(candidates.size());
  int applicable = 0;
  for (const DominationCertificate& cert : candidates) {
    DisjointnessReport rep = verify_disjoint_neighborhoods(g, cert.members(), cfg.budget);
    if (rep.verdict == Verdict::NotApplicable) continue;
    ++applicable;
    if (rep.verdict == Verdict::Violated) {
      o.verdict = Verdict::Violated;
      o.certs["dset"] = cert.members();
      o.certs["witness"] = {{"v1", rep.witness->v1},
                            {"v2", rep.witness->v2},
                            {"w", rep.witness->w},
                            {"overlap", rep.witness->overlap}};
      o.stats["nodes"] = st.nodes;
      return o;
    }
  }
  o.certs["applicable_dsets"] = applicable;
  o.stats["nodes"] = st.nodes;
  o.verdict = applicable == 0 ? Verdict::NotApplicable : Verdict::Holds;
  if (applicable == 0) o.certs["reason"] = "no applicable d-set";
  return o;
}

// Probes the all-at-once deletion reading on structured candidate
// subsets: the full redundant set plus, per vertex, all its incident
// redundant edges. A Violated here is an expected research finding.
Outcome prop_bulk_deletion_literal(const Graph& g, const RunConfig& cfg) {
  SolveStats st;
  std::vector<DominationCertificate> dsets = enumerate_min_dsets(g, cfg.budget, &st);
  int tried = 0;
  for (const DominationCertificate& cert : dsets) {
    RedundantEdgeSet u = redundant_edges(g, cert.members());
    if (u.edges.empty()) continue;
    std::vector<EdgeList> candidates;
    EdgeList full;
    for (const TaggedEdge& e : u.edges) full.emplace_back(e.u, e.v);
    candidates.push_back(full);
    for (int v = 0; v < g.vertex_count(); ++v) {
      EdgeList incident;
      for (const TaggedEdge& e : u.edges)
        if (e.u == v || e.v == v) incident.emplace_back(e.u, e.v);
      if (incident.size() >= 2 && incident.size() < full.size())
        candidates.push_back(std::move(incident));
    }
    for (const EdgeList& subset : candidates) {
      ++tried;
      EdgeList kept;
      for (auto e : g.edges())
        if (std::find(subset.begin(), subset.end(), e) == subset.end()) kept.push_back(e);
      Graph reduced = Graph::from_edges(g.vertex_count(), kept);
      int missing = first_undominated(reduced, cert.members());
      if (missing >= 0) {
        Outcome o;
        o.verdict = Verdict::Violated;
        o.certs["dset"] = cert.members();
        o.certs["deleted_edges"] = Json::array();
        TransformTrace trace;
        for (auto [a, b] : subset) {
          o.certs["deleted_edges"].push_back(pair_json(a, b));
          trace.steps.push_back(GraphEdit::delete_edge(a, b, "simultaneous"));
        }
        o.certs["undominated_vertex"] = missing;
        o.certs["trace"] = trace_to_json(to_graph6(g), trace, "Violated");
        o.stats["nodes"] = st.nodes;
        return o;
      }
    }
  }
  Outcome o;
  o.verdict = Verdict::Holds;
  o.certs["dsets"] = static_cast<int>(dsets.size());
  o.certs["subsets_tried"] = tried;
  o.stats["nodes"] = st.nodes;
  return o;
}

Outcome prop_peel_safety(const Graph& g, const RunConfig& cfg) {
  SolveStats st;
  std::vector<DominationCertificate> dsets = enumerate_min_dsets(g, cfg.budget, &st);
  int total_steps = 0;
  for (const DominationCertificate& cert : dsets) {
    PeelResult peel = peel_redundant_edges(g, cert.members(), cfg.peel_policy);
    // independent replay of the recorded trace
    Graph cur = g;
    for (std::size_t i = 0; i < peel.trace.steps.size(); ++i) {
      cur = apply_edit(cur, peel.trace.steps[i]).graph;
      ++total_steps;
      int missing = first_undominated(cur, cert.members());
      if (missing >= 0) {
        Outcome o;
        o.verdict = Verdict::Violated;
        o.certs["blocking"] = true;
        o.certs["dset"] = cert.members();
        o.certs["step_index"] = static_cast<int>(i);
        o.certs["undominated_vertex"] = missing;
        o.certs["trace"] = trace_to_json(to_graph6(g), peel.trace, "Violated");
        return o;
      }
    }
    if (to_graph6(cur) != to_graph6(peel.graph)) {
      Outcome o;
      o.verdict = Verdict::Violated;
      o.certs["blocking"] = true;
      o.certs["reason"] = "trace replay mismatch";
      return o;
    }
  }
  Outcome o;
  o.verdict = Verdict::Holds;
  o.certs["dsets"] = static_cast<int>(dsets.size());
  o.certs["steps"] = total_steps;
  o.certs["policy"] = to_string(cfg.peel_policy);
  o.stats["nodes"] = st.nodes;
  return o;
}

Outcome prop_detach_dominating(const Graph& g, const RunConfig& cfg) {
  SolveStats st;
  std::vector<DominationCertificate> dsets = enumerate_min_dsets(g, cfg.budget, &st);
  int checks = 0;
  for (const DominationCertificate& cert : dsets) {
    AnchoredSet anchored = anchored_vertices(g, cert.members());
    std::vector<VertexList> selections;
    for (int t : anchored.members) selections.push_back({t});
    if (anchored.members.size() >= 2) selections.push_back(anchored.members);
    for (const VertexList& s : selections) {
      ++checks;
      DetachmentResult det = apply_detachment(g, cert.members(), s);
      VertexList combined = set_union(cert.members(), s);
      int missing = first_undominated(det.graph, combined);
      if (missing >= 0) {
        Outcome o;
        o.verdict = Verdict::Violated;
        o.certs["blocking"] = true;
        o.certs["dset"] = cert.members();
        o.certs["selection"] = s;
        o.certs["undominated_vertex"] = missing;
        o.certs["trace"] = trace_to_json(to_graph6(g), det.trace, "Violated");
        return o;
      }
    }
  }
  Outcome o;
  o.verdict = Verdict::Holds;
  o.certs["dsets"] = static_cast<int>(dsets.size());
  o.certs["checks"] = checks;
  o.stats["nodes"] = st.nodes;
  return o;
}

Outcome prop_detach_dset(const Graph& g, const RunConfig& cfg) {
  SolveStats st;
  std::vector<DominationCertificate> dsets = enumerate_min_dsets(g, cfg.budget, &st);
  int qualifying = 0;
  int holds = 0;
  Json failures = Json::array();
  for (const DominationCertificate& cert : dsets) {
    AnchoredSet anchored = anchored_vertices(g, cert.members());
    for (int t : anchored.members) {
      // qualify: the set must stay a minimum dominating set once t is gone
      EditResult removal = apply_edit(g, GraphEdit::delete_vertices({t}));
      VertexList mapped;
      for (int v : cert.members()) mapped.push_back(removal.relabel[v]);
      std::sort(mapped.begin(), mapped.end());
      if (!dominates(removal.graph, mapped)) continue;
      if (removal.graph.vertex_count() > 0 &&
          gamma_exact(removal.graph, cfg.budget, &st).size() !=
              static_cast<int>(mapped.size()))
        continue;
      ++qualifying;
      DetachmentResult det = apply_detachment(g, cert.members(), {t});
      int expected = cert.size() + 1;
      int got = det.graph.vertex_count() == 0
                    ? 0
                    : gamma_exact(det.graph, cfg.budget, &st).size();
      if (got == expected) {
        ++holds;
      } else if (failures.size() < 8) {
        failures.push_back({{"dset", cert.members()},
                            {"selection", Json::array({t})},
                            {"expected", expected},
                            {"detached_gamma", got}});
      }
    }
  }
  Outcome o;
  o.certs["qualifying"] = qualifying;
  o.certs["holds"] = holds;
  o.stats["nodes"] = st.nodes;
  if (qualifying == 0) {
    o.certs["reason"] = "no qualifying instance";
    return o;
  }
  if (holds == qualifying) {
    o.verdict = Verdict::Holds;
  } else {
    o.verdict = Verdict::Violated;  // research finding, non-blocking
    o.certs["failures"] = failures;
  }
  return o;
}

Outcome prop_decomposition(const Graph& g, const RunConfig& cfg) {
  if (!corpus_graph(g)) return not_applicable("not a connected cubic graph");
  SolveStats st;
  std::vector<DominationCertificate> candidates = min_internal_dsets(g, cfg.budget, &st);
  int tested = 0, holds = 0, linear = 0;
  bool blocking = false;
  Json detail;
  for (const DominationCertificate& cert : candidates) {
    DecompositionResult d = decompose_to_linear(g, cert.members(), cfg.peel_policy);
    ++tested;
    if (d.claim_holds) ++holds;
    if (d.linear) ++linear;
    bool core_failure = !d.y_dominates || !d.accounting_ok;
    if (core_failure) blocking = true;
    if ((core_failure || !d.claim_holds) && detail.is_null()) {
      detail = decomposition_to_json(to_graph6(g), d);
      detail["dset"] = cert.members();
    }
  }
  Outcome o;
  o.certs["tested_dsets"] = tested;
  o.certs["claim_holds"] = holds;
  o.certs["linear"] = linear;
  o.certs["policy"] = to_string(cfg.peel_policy);
  o.stats["nodes"] = st.nodes;
  if (blocking) o.certs["blocking"] = true;
  if (!detail.is_null()) o.certs["first_failure"] = detail;
  o.verdict = holds == tested ? Verdict::Holds : Verdict::Violated;
  return o;
}

Outcome prop_independentize(const Graph& g, const RunConfig& cfg) {
  SolveStats st;
  DominationCertificate start = min_internal_edges_dset(g, cfg.budget, &st);
  DominationCertificate ic = i_exact(g, cfg.budget, &st);
  IndependentizeResult r = independentize(g, start.members());
  auto star = find_double_star(g);

  Outcome o;
  o.certs["reading"] = "global_min_internal_edges";
  o.certs["gamma"] = start.size();
  o.certs["i"] = ic.size();
  o.certs["start_internal_edges"] = start.internal_edge_count();
  o.certs["double_star_free"] = !star.has_value();
  o.certs["trace"] = independentize_to_json(r);
  o.stats["nodes"] = st.nodes;

  if (r.success) {
    bool sizes_ok = static_cast<int>(r.final_set.size()) <= start.size();
    if (!star) {
      // constructive route: must certify gamma == i
      sizes_ok = sizes_ok && static_cast<int>(r.final_set.size()) == start.size() &&
                 ic.size() == start.size();
    }
    o.verdict = sizes_ok ? Verdict::Holds : Verdict::Violated;
    if (!sizes_ok) o.certs["blocking"] = true;
    return o;
  }

  // stuck: the blocking edge must be an adjacent degree->=3 pair
  bool witness_ok = false;
  if (r.stuck_witness) {
    witness_ok = g.has_edge(r.stuck_witness->x, r.stuck_witness->y) &&
                 g.degree(r.stuck_witness->x) >= 3 && g.degree(r.stuck_witness->y) >= 3;
  }
  bool ok = witness_ok && star.has_value();
  o.verdict = ok ? Verdict::Holds : Verdict::Violated;
  if (!ok) o.certs["blocking"] = true;
  return o;
}

Outcome prop_solver_oracle(const Graph& g, const RunConfig& cfg) {
  if (g.vertex_count() > 24) return not_applicable("n > 24");
  SolveStats st;
  DominationCertificate ge = gamma_exact(g, cfg.budget, &st);
  DominationCertificate ie = i_exact(g, cfg.budget, &st);
  DominationCertificate bg = brute_force_gamma(g);
  DominationCertificate bi = brute_force_i(g);
  bool ok = ge.size() == bg.size() && ie.size() == bi.size() && ge.size() <= ie.size();
  Outcome o;
  o.certs["gamma"] = ge.size();
  o.certs["i"] = ie.size();
  o.certs["brute_gamma"] = bg.size();
  o.certs["brute_i"] = bi.size();
  o.stats["nodes"] = st.nodes;
  o.verdict = ok ? Verdict::Holds : Verdict::Violated;
  if (!ok) o.certs["blocking"] = true;
  return o;
}

using PropertyFn = Outcome (*)(const Graph&, const RunConfig&);

const std::vector<std::pair<std::string, PropertyFn>>& registry() {
  static const std::vector<std::pair<std::string, PropertyFn>> table = {
      {"claim_2_1", prop_decomposition},
      {"fact_2_2", prop_detach_dominating},
      {"fact_2_3", prop_detach_dset},
      {"fact_u_literal", prop_bulk_deletion_literal},
      {"independentize", prop_independentize},
      {"lemma_2_1", prop_disjoint_neighborhoods},
      {"peel_safety", prop_peel_safety},
      {"prop_a", prop_claw_free_equality},
      {"prop_b", prop_double_star_free_equality},
      {"reed_bound", prop_reed_bound},
      {"solver_oracle", prop_solver_oracle},
      {"theorem_2_1", prop_theorem},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& all_property_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

bool is_known_property(const std::string& id) {
  for (const auto& [name, fn] : registry())
    if (name == id) return true;
  return false;
}

Finding run_property(const std::string& id, const Graph& g, const RunConfig& cfg) {
  PropertyFn fn = nullptr;
  for (const auto& [name, f] : registry())
    if (name == id) fn = f;
  if (!fn) fail(ErrorKind::UnknownName, "unknown property: " + id);

  Finding finding;
  finding.property_id = id;
  try {
    Outcome o = fn(g, cfg);
    finding.verdict = o.verdict;
    finding.certificates = std::move(o.certs);
    finding.solver_stats = std::move(o.stats);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Budget) {
      finding.verdict = Verdict::NotApplicable;
      finding.certificates["reason"] = std::string("budget_exhausted: ") + e.what();
    } else {
      finding.verdict = Verdict::Violated;
      finding.certificates["blocking"] = true;
      finding.certificates["reason"] = std::string(to_string(e.kind())) + ": " + e.what();
    }
  } catch (const std::exception& e) {
    finding.verdict = Verdict::Violated;
    finding.certificates["blocking"] = true;
    finding.certificates["reason"] = std::string("exception: ") + e.what();
  }
  return finding;
}

}  // namespace domlab
