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
#include "core/transforms.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace domlab {

const char* rule_token(EdgeRule r) {
  switch (r) {
    case EdgeRule::BothOutside: return "i";
    case EdgeRule::CoveredEndpoint: return "ii";
    case EdgeRule::BothInside: return "iii";
  }
  return "?";
}

const char* to_string(PeelPolicy p) {
  return p == PeelPolicy::Deg3Incident ? "deg3" : "any";
}

bool RedundantEdgeSet::contains(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (const TaggedEdge& e : edges)
    if (e.u == u && e.v == v) return true;
  return false;
}

RedundantEdgeSet redundant_edges(const Graph& g, const VertexList& x) {
  VertexList set = normalized_vertex_set(x, g.vertex_count());
  RedundantEdgeSet out;
  for (auto [u, v] : g.edges()) {
    bool in_u = sorted_contains(set, u);
    bool in_v = sorted_contains(set, v);
    if (!in_u && !in_v) {
      out.edges.push_back({u, v, EdgeRule::BothOutside});
    } else if (in_u && in_v) {
      out.edges.push_back({u, v, EdgeRule::BothInside});
    } else {
      int member = in_u ? u : v;
      int outside = in_u ? v : u;
      bool second_dominator = false;
      for (int z : g.neighbors(outside))
        if (z != member && sorted_contains(set, z)) {
          second_dominator = true;
          break;
        }
      if (second_dominator)
        out.edges.push_back({u, v, EdgeRule::CoveredEndpoint});
    }
  }
  return out;
}

PeelResult peel_redundant_edges(const Graph& g, const VertexList& x, PeelPolicy policy) {
  VertexList set = normalized_vertex_set(x, g.vertex_count());
  if (!dominates(g, set))
    fail(ErrorKind::Precondition, "peel requires a dominating set");

  PeelResult result{g, {}};
  while (true) {
    RedundantEdgeSet u = redundant_edges(result.graph, set);
    const TaggedEdge* pick = nullptr;
    for (const TaggedEdge& e : u.edges) {
      if (policy == PeelPolicy::Deg3Incident &&
          result.graph.degree(e.u) != 3 && result.graph.degree(e.v) != 3)
        continue;
      if (!pick || std::tuple(e.rule, e.u, e.v) < std::tuple(pick->rule, pick->u, pick->v))
        pick = &e;
    }
    if (!pick) break;
    GraphEdit edit = GraphEdit::delete_edge(pick->u, pick->v,
                                            std::string("rule=") + rule_token(pick->rule));
    result.graph = apply_edit(result.graph, edit).graph;
    result.trace.steps.push_back(std::move(edit));
    int missing = first_undominated(result.graph, set);
    if (missing >= 0)
      fail(ErrorKind::Internal,
           "peel broke domination at vertex " + std::to_string(missing));
  }
  return result;
}

BulkDeletionReport check_bulk_deletion(const Graph& g, const VertexList& x,
                                       const EdgeList& u_subset, const SolveBudget& budget) {
  VertexList set = normalized_vertex_set(x, g.vertex_count());
  if (!dominates(g, set))
    fail(ErrorKind::Precondition, "input set does not dominate the graph");
  if (gamma_exact(g, budget).size() != static_cast<int>(set.size()))
    fail(ErrorKind::Precondition, "input set is not a minimum dominating set");
  RedundantEdgeSet u = redundant_edges(g, set);
  EdgeList normalized;
  for (auto [a, b] : u_subset) {
    if (a > b) std::swap(a, b);
    if (!u.contains(a, b))
      fail(ErrorKind::Precondition, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                        ") is not in the redundant set");
    normalized.emplace_back(a, b);
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());

  EdgeList kept;
  for (auto e : g.edges())
    if (!std::binary_search(normalized.begin(), normalized.end(), e)) kept.push_back(e);
  Graph reduced = Graph::from_edges(g.vertex_count(), kept);

  BulkDeletionReport report{Verdict::Holds, std::nullopt, std::nullopt};
  int missing = first_undominated(reduced, set);
  if (missing >= 0) {
    report.verdict = Verdict::Violated;
    report.undominated_vertex = missing;
    return report;
  }
  DominationCertificate reduced_gamma = gamma_exact(reduced, budget);
  if (reduced_gamma.size() < static_cast<int>(set.size())) {
    report.verdict = Verdict::Violated;
    report.smaller_dset = reduced_gamma.members();
  }
  return report;
}

AnchoredSet anchored_vertices(const Graph& g, const VertexList& y) {
  VertexList set = normalized_vertex_set(y, g.vertex_count());
  AnchoredSet out;
  for (int t : set) {
    for (int b : g.neighbors(t)) {
      // b qualifies when t is the only y-vertex in N[b]
      if (sorted_contains(set, b)) continue;
      bool clean = true;
      for (int z : g.neighbors(b))
        if (z != t && sorted_contains(set, z)) {
          clean = false;
          break;
        }
      if (!clean) continue;
      out.members.push_back(b);
      out.anchor_of[b] = t;
      out.groups[t].push_back(b);
    }
  }
  std::sort(out.members.begin(), out.members.end());
  out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
  return out;
}

DetachmentResult apply_detachment(const Graph& g, const VertexList& y, const VertexList& s) {
  VertexList selection = normalized_vertex_set(s, g.vertex_count());
  AnchoredSet anchored = anchored_vertices(g, y);
  for (int v : selection)
    if (!sorted_contains(anchored.members, v))
      fail(ErrorKind::Precondition,
           "selection contains vertex " + std::to_string(v) + " outside the anchored set");

  DetachmentResult result{g, {}, {}};
  for (int v1 : selection) {
    DetachmentStep step{v1, anchored.anchor_of.at(v1), {}};
    GraphEdit cut = GraphEdit::delete_edge(v1, step.anchor, "anchor");
    result.graph = apply_edit(result.graph, cut).graph;
    result.trace.steps.push_back(std::move(cut));
    // remaining incident edges, ascending by current neighbor id
    VertexList others = result.graph.neighbors(v1);
    for (int t2 : others) {
      int fresh = result.graph.vertex_count();
      GraphEdit sub = GraphEdit::subdivide_edge(v1, t2, fresh, "detach");
      result.graph = apply_edit(result.graph, sub).graph;
      result.trace.steps.push_back(std::move(sub));
      step.subdivisions.push_back({v1, t2, fresh});
    }
    result.steps.push_back(std::move(step));
  }
  return result;
}

DetachDominationReport check_detachment_dominating(const Graph& g, const VertexList& y,
                                                   const VertexList& s,
                                                   const SolveBudget& budget) {
  VertexList set = normalized_vertex_set(y, g.vertex_count());
  if (!dominates(g, set))
    fail(ErrorKind::Precondition, "y does not dominate the graph");
  if (gamma_exact(g, budget).size() != static_cast<int>(set.size()))
    fail(ErrorKind::Precondition, "y is not a minimum dominating set");
  DetachmentResult det = apply_detachment(g, set, s);
  VertexList combined = set_union(set, normalized_vertex_set(s, g.vertex_count()));
  int missing = first_undominated(det.graph, combined);
  if (missing >= 0) return {Verdict::Violated, missing};
  return {Verdict::Holds, std::nullopt};
}

DetachDsetReport check_detachment_dset(const Graph& g, const VertexList& y,
                                       const VertexList& s, const SolveBudget& budget) {
  VertexList yset = normalized_vertex_set(y, g.vertex_count());
  VertexList sel = normalized_vertex_set(s, g.vertex_count());
  AnchoredSet anchored = anchored_vertices(g, yset);
  for (int v : sel)
    if (!sorted_contains(anchored.members, v))
      fail(ErrorKind::Precondition,
           "selection contains vertex " + std::to_string(v) + " outside the anchored set");

  EditResult removal = apply_edit(g, GraphEdit::delete_vertices(sel));
  VertexList y_mapped;
  for (int v : yset) {
    if (removal.relabel[v] < 0)
      fail(ErrorKind::Precondition, "y intersects the deleted selection");
    y_mapped.push_back(removal.relabel[v]);
  }
  std::sort(y_mapped.begin(), y_mapped.end());
  if (!dominates(removal.graph, y_mapped))
    fail(ErrorKind::Precondition, "y does not dominate the graph minus the selection");
  if (removal.graph.vertex_count() > 0 &&
      gamma_exact(removal.graph, budget).size() != static_cast<int>(y_mapped.size()))
    fail(ErrorKind::Precondition,
         "y is not a minimum dominating set of the graph minus the selection");

  DetachmentResult det = apply_detachment(g, yset, sel);
  int combined = static_cast<int>(yset.size() + sel.size());
  int detached_gamma = det.graph.vertex_count() == 0
                           ? 0
                           : gamma_exact(det.graph, budget).size();
  Verdict verdict = combined == detached_gamma ? Verdict::Holds : Verdict::Violated;
  return {verdict, combined, detached_gamma};
}

DecompositionResult decompose_to_linear(const Graph& g, const VertexList& x,
                                        PeelPolicy policy) {
  VertexList set = normalized_vertex_set(x, g.vertex_count());
  if (!dominates(g, set))
    fail(ErrorKind::Precondition, "x does not dominate the graph");

  DecompositionResult result;
  result.peel = peel_redundant_edges(g, set, policy);
  const Graph& peeled = result.peel.graph;

  AnchoredSet anchored = anchored_vertices(peeled, set);

  // degree-3 outsiders must have exactly one dominator after a maximal peel
  for (int v = 0; v < peeled.vertex_count(); ++v) {
    if (sorted_contains(set, v) || peeled.degree(v) != 3) continue;
    int dominators = 0;
    for (int u : peeled.neighbors(v))
      if (sorted_contains(set, u)) ++dominators;
    if (dominators == 0) {
      result.contract_violations.push_back(
          "degree-3 outsider " + std::to_string(v) + " has no dominator");
      continue;
    }
    if (dominators >= 2) {
      result.contract_violations.push_back(
          "degree-3 outsider " + std::to_string(v) + " kept " +
          std::to_string(dominators) + " dominators after the peel");
      continue;
    }
    if (!sorted_contains(anchored.members, v)) {
      result.contract_violations.push_back(
          "degree-3 outsider " + std::to_string(v) + " is not anchored");
      continue;
    }
    result.t1.push_back(v);
  }

  // one chosen neighbor per degree-3 member: first degree-3 neighbor,
  // else the smallest
  for (int v : set) {
    if (peeled.degree(v) != 3) continue;
    const VertexList& nb = peeled.neighbors(v);
    bool bad = false;
    for (int w : nb) {
      if (sorted_contains(set, w)) {
        result.contract_violations.push_back(
            "degree-3 member " + std::to_string(v) + " kept member-neighbor " +
            std::to_string(w));
        bad = true;
        break;
      }
      if (!sorted_contains(anchored.members, w)) {
        result.contract_violations.push_back(
            "degree-3 member " + std::to_string(v) + " has non-anchored neighbor " +
            std::to_string(w));
        bad = true;
        break;
      }
    }
    if (bad) continue;
    int chosen = nb[0];
    for (int w : nb)
      if (peeled.degree(w) == 3) {
        chosen = w;
        break;
      }
    result.t2.push_back(chosen);
  }
  std::sort(result.t2.begin(), result.t2.end());
  result.t2.erase(std::unique(result.t2.begin(), result.t2.end()), result.t2.end());
  result.t_all = set_union(result.t1, result.t2);

  result.detachment = apply_detachment(peeled, set, result.t_all);
  const Graph& final_graph = result.detachment.graph;

  long long extra = 0;
  for (int v : result.t_all) extra += peeled.degree(v) - 1;
  result.accounting_ok =
      final_graph.vertex_count() == peeled.vertex_count() + extra &&
      final_graph.edge_count() ==
          peeled.edge_count() - static_cast<int>(result.t_all.size()) + extra;
  if (!result.accounting_ok)
    result.contract_violations.push_back("detachment accounting mismatch");

  result.y = set_union(set, result.t_all);
  std::vector<char> covered(final_graph.vertex_count(), 0);
  for (int v : result.y) {
    covered[v] = 1;
    for (int u : final_graph.neighbors(v)) covered[u] = 1;
  }

  result.y_dominates = true;
  result.linear = true;
  for (const Component& comp : connected_components(final_graph)) {
    ComponentVerdict cv;
    cv.vertices = comp.vertices;
    cv.shape = comp.shape;
    cv.y_restriction = set_intersection(result.y, comp.vertices);
    cv.dominated = true;
    for (int v : comp.vertices)
      if (!covered[v]) {
        cv.dominated = false;
        break;
      }
    if (!cv.dominated) result.y_dominates = false;
    if (comp.shape == ComponentShape::Other) result.linear = false;
    result.components.push_back(std::move(cv));
  }
  result.claim_holds =
      result.linear && result.y_dominates && result.contract_violations.empty();
  return result;
}

namespace {

std::vector<int> bfs_distances(const Graph& g, const VertexList& sources) {
  std::vector<int> dist(g.vertex_count(), std::numeric_limits<int>::max());
  std::deque<int> queue;
  for (int s : sources) {
    dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : g.neighbors(v))
      if (dist[u] == std::numeric_limits<int>::max()) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  return dist;
}

}  // namespace

ReductionResult component_reduce(const Graph& a, const VertexList& y_a) {
  if (max_degree(a) > 2)
    fail(ErrorKind::Precondition, "component reduction requires max degree <= 2");
  VertexList y = normalized_vertex_set(y_a, a.vertex_count());
  if (!dominates(a, y))
    fail(ErrorKind::Precondition, "y does not dominate the component");

  ReductionResult result{a, y, {}};
  while (true) {
    const Graph& h = result.graph;
    int chosen = -1;
    for (int v : result.y_final) {
      if (h.degree(v) != 2) continue;
      const VertexList& nb = h.neighbors(v);
      if (sorted_contains(result.y_final, nb[0]) ||
          sorted_contains(result.y_final, nb[1]))
        continue;
      if (h.vertex_count() <= 3) continue;  // the window must leave a remainder
      chosen = v;
      break;
    }
    if (chosen < 0) break;

    ReductionStep step;
    step.chosen = chosen;
    VertexList window = {chosen, h.neighbors(chosen)[0], h.neighbors(chosen)[1]};
    std::sort(window.begin(), window.end());
    step.window = {window[0], window[1], window[2]};
    step.attachments = set_difference(open_neighborhood(h, window), window);
    step.edge_already_present = false;

    EditResult removal = apply_edit(result.graph, GraphEdit::delete_vertices(window, "window"));
    step.relabel = removal.relabel;
    Graph next = removal.graph;

    VertexList attach_new;
    for (int p : step.attachments) attach_new.push_back(removal.relabel[p]);
    std::sort(attach_new.begin(), attach_new.end());
    if (attach_new.size() == 2) {
      if (next.has_edge(attach_new[0], attach_new[1])) {
        step.edge_already_present = true;
        step.added_edge = {attach_new[0], attach_new[1]};
      } else {
        step.added_edge = {attach_new[0], attach_new[1]};
        next = apply_edit(next, GraphEdit::add_edge(attach_new[0], attach_new[1], "rejoin")).graph;
      }
    }

    VertexList y_next;
    for (int v : result.y_final)
      if (v != chosen) y_next.push_back(removal.relabel[v]);
    std::sort(y_next.begin(), y_next.end());

    // the y-update: if some y-pair is adjacent now, drop the endpoint
    // farther from the rejoined region and add its other neighbor
    std::optional<std::pair<int, int>> pair;
    for (std::size_t i = 0; i < y_next.size() && !pair; ++i)
      for (std::size_t j = i + 1; j < y_next.size(); ++j)
        if (next.has_edge(y_next[i], y_next[j])) {
          pair = {y_next[i], y_next[j]};
          break;
        }
    if (pair) {
      auto [p, q] = *pair;
      int x1 = p, x2 = q;
      if (!attach_new.empty()) {
        std::vector<int> dist = bfs_distances(next, attach_new);
        if (dist[p] > dist[q] || (dist[p] == dist[q] && p > q)) {
          x1 = q;
          x2 = p;
        }
      }
      YUpdate update{x1, x2, std::nullopt};
      for (int u : next.neighbors(x2))
        if (u != x1) update.added = u;
      VertexList rebuilt;
      for (int v : y_next)
        if (v != x2) rebuilt.push_back(v);
      if (update.added) rebuilt.push_back(*update.added);
      std::sort(rebuilt.begin(), rebuilt.end());
      rebuilt.erase(std::unique(rebuilt.begin(), rebuilt.end()), rebuilt.end());
      y_next = std::move(rebuilt);
      step.y_update = update;
    }

    if (max_degree(next) > 2)
      fail(ErrorKind::Internal, "reduction produced a vertex of degree > 2");
    int missing = first_undominated(next, y_next);
    if (missing >= 0)
      fail(ErrorKind::Internal,
           "reduction broke domination at vertex " + std::to_string(missing));

    result.graph = std::move(next);
    result.y_final = std::move(y_next);
    result.steps.push_back(std::move(step));
  }
  return result;
}

IndependentizeResult independentize(const Graph& g, const VertexList& x) {
  VertexList cur = normalized_vertex_set(x, g.vertex_count());
  if (!dominates(g, cur))
    fail(ErrorKind::Precondition, "input set does not dominate the graph");

  IndependentizeResult result;
  result.success = false;

  while (true) {
    EdgeList inside = internal_edges(g, cur);
    if (inside.empty()) {
      result.success = true;
      result.final_set = cur;
      result.independent = DominationCertificate::verified(
          g, cur, CertificateKind::IndependentDominating);
      return result;
    }

    bool moved = false;
    int cur_internal = static_cast<int>(inside.size());
    for (auto [a, b] : inside) {
      // drops first, then swaps, smaller endpoint first
      for (int victim : {a, b}) {
        VertexList cand = set_difference(cur, {victim});
        if (dominates(g, cand)) {
          result.moves.push_back(
              {ExchangeMove::Type::Drop, {a, b}, victim, -1});
          cur = std::move(cand);
          moved = true;
          break;
        }
      }
      if (moved) break;
      for (int victim : {a, b}) {
        if (g.degree(victim) != 2) continue;
        int partner = victim == a ? b : a;
        int outside = -1;
        for (int u : g.neighbors(victim))
          if (u != partner) outside = u;
        if (outside < 0 || sorted_contains(cur, outside)) continue;
        bool clean = true;
        for (int z : g.neighbors(outside))
          if (z != victim && sorted_contains(cur, z)) {
            clean = false;
            break;
          }
        if (!clean) continue;
        VertexList cand = set_union(set_difference(cur, {victim}), {outside});
        if (!dominates(g, cand)) continue;
        if (internal_edge_count(g, cand) >= cur_internal) continue;
        result.moves.push_back(
            {ExchangeMove::Type::Swap, {a, b}, victim, outside});
        cur = std::move(cand);
        moved = true;
        break;
      }
      if (moved) break;
    }

    if (!moved) {
      result.final_set = cur;
      result.blocking_edge = inside.front();
      auto [a, b] = inside.front();
      if (g.degree(a) >= 3 && g.degree(b) >= 3)
        result.stuck_witness = AdjacentDeg3Pair{a, b};
      else
        result.stuck_witness = find_adjacent_deg3_pair(g);
      return result;
    }
  }
}

BoundOrEqualityReport check_bound_or_equality(const Graph& g, const SolveBudget& budget,
                                              SolveStats* stats) {
  if (!is_cubic(g) || !is_connected(g))
    fail(ErrorKind::Precondition, "the bound-or-equality check requires a connected cubic graph");
  DominationCertificate gc = gamma_exact(g, budget, stats);
  DominationCertificate ic = i_exact(g, budget, stats);
  int bound = reed_bound(g.vertex_count());
  BoundOrEqualityReport report;
  report.gamma = gc.size();
  report.independent_gamma = ic.size();
  report.bound = bound;
  report.gamma_set = gc.members();
  report.i_set = ic.members();
  report.verdict = (gc.size() <= bound || gc.size() == ic.size()) ? Verdict::Holds
                                                                  : Verdict::Violated;
  return report;
}

}  // namespace domlab
