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
#include "core/serialize.hpp"

namespace domlab {

Json edit_to_json(const GraphEdit& e) {
  Json j;
  j["op"] = to_string(e.kind);
  switch (e.kind) {
    case GraphEdit::Kind::DeleteEdge:
    case GraphEdit::Kind::AddEdge:
      j["args"] = {e.u, e.v};
      break;
    case GraphEdit::Kind::SubdivideEdge:
      j["args"] = {e.u, e.v, e.new_id};
      break;
    case GraphEdit::Kind::DeleteVertices:
      j["args"] = e.vertices;
      break;
  }
  j["tag"] = e.tag;
  return j;
}

GraphEdit edit_from_json(const Json& j) {
  const std::string op = j.at("op").get<std::string>();
  const Json& args = j.at("args");
  std::string tag = j.value("tag", "");
  if (op == "delete_edge") return GraphEdit::delete_edge(args.at(0), args.at(1), tag);
  if (op == "add_edge") return GraphEdit::add_edge(args.at(0), args.at(1), tag);
  if (op == "subdivide_edge")
    return GraphEdit::subdivide_edge(args.at(0), args.at(1), args.at(2), tag);
  if (op == "delete_vertices")
    return GraphEdit::delete_vertices(args.get<VertexList>(), tag);
  fail(ErrorKind::Parse, "unknown edit op: " + op);
}

Json trace_to_json(const std::string& input_graph6, const TransformTrace& trace,
                   const std::string& verdict) {
  Json steps = Json::array();
  for (const GraphEdit& e : trace.steps) steps.push_back(edit_to_json(e));
  Json j;
  j["graph6"] = input_graph6;
  j["steps"] = std::move(steps);
  j["verdict"] = verdict;
  return j;
}

Json certificate_to_json(const DominationCertificate& c) {
  Json j;
  j["set"] = c.members();
  j["size"] = c.size();
  j["internal_edges"] = c.internal_edge_count();
  j["kind"] = c.kind() == CertificateKind::IndependentDominating ? "independent-dominating"
                                                                 : "dominating";
  return j;
}

namespace {

Json edge_json(const std::pair<int, int>& e) { return Json::array({e.first, e.second}); }

}  // namespace

Json decomposition_to_json(const std::string& input_graph6, const DecompositionResult& d) {
  Json j;
  j["input"] = input_graph6;
  j["peel"] = trace_to_json(input_graph6, d.peel.trace, "peeled");
  j["peeled_graph6"] = to_graph6(d.peel.graph);
  j["t1"] = d.t1;
  j["t2"] = d.t2;
  j["t_all"] = d.t_all;
  j["detach_trace"] = trace_to_json(to_graph6(d.peel.graph), d.detachment.trace, "detached");
  j["result_graph6"] = to_graph6(d.detachment.graph);
  j["y"] = d.y;
  Json comps = Json::array();
  for (const ComponentVerdict& c : d.components) {
    Json cj;
    cj["vertices"] = c.vertices;
    cj["shape"] = to_string(c.shape);
    cj["y_restriction"] = c.y_restriction;
    cj["dominated"] = c.dominated;
    comps.push_back(std::move(cj));
  }
  j["components"] = std::move(comps);
  j["contract_violations"] = d.contract_violations;
  j["accounting_ok"] = d.accounting_ok;
  j["y_dominates"] = d.y_dominates;
  j["linear"] = d.linear;
  j["claim_holds"] = d.claim_holds;
  return j;
}

Json reduction_to_json(const ReductionResult& r) {
  Json steps = Json::array();
  for (const ReductionStep& s : r.steps) {
    Json sj;
    sj["chosen"] = s.chosen;
    sj["window"] = {s.window[0], s.window[1], s.window[2]};
    sj["attachments"] = s.attachments;
    if (s.added_edge) sj["added_edge"] = edge_json(*s.added_edge);
    sj["edge_already_present"] = s.edge_already_present;
    if (s.y_update) {
      Json uj;
      uj["kept"] = s.y_update->kept;
      uj["dropped"] = s.y_update->dropped;
      if (s.y_update->added) uj["added"] = *s.y_update->added;
      sj["y_update"] = std::move(uj);
    }
    sj["relabel"] = s.relabel;
    steps.push_back(std::move(sj));
  }
  Json j;
  j["result_graph6"] = to_graph6(r.graph);
  j["y_final"] = r.y_final;
  j["steps"] = std::move(steps);
  return j;
}

Json independentize_to_json(const IndependentizeResult& r) {
  Json moves = Json::array();
  for (const ExchangeMove& m : r.moves) {
    Json mj;
    mj["type"] = m.type == ExchangeMove::Type::Drop ? "drop" : "swap";
    mj["edge"] = edge_json(m.edge);
    mj["removed"] = m.removed;
    if (m.added >= 0) mj["added"] = m.added;
    moves.push_back(std::move(mj));
  }
  Json j;
  j["success"] = r.success;
  j["moves"] = std::move(moves);
  j["final_set"] = r.final_set;
  if (r.blocking_edge) j["blocking_edge"] = edge_json(*r.blocking_edge);
  if (r.stuck_witness) j["stuck_witness"] = Json::array({r.stuck_witness->x, r.stuck_witness->y});
  return j;
}

}  // namespace domlab
