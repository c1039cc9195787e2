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
#include "core/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace domlab {

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    fail(ErrorKind::Precondition,
         "vertex id " + std::to_string(v) + " out of range [0, " +
             std::to_string(n_) + ")");
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

const VertexList& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  if (!rows_.empty()) return (rows_[u] >> v) & 1u;
  const VertexList& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::uint64_t Graph::row_mask(int v) const {
  check_vertex(v);
  if (rows_.empty())
    fail(ErrorKind::Precondition, "bitset rows only exist for n <= 64");
  return rows_[v];
}

std::uint64_t Graph::closed_row_mask(int v) const {
  return row_mask(v) | (std::uint64_t{1} << v);
}

Graph Graph::empty(int n) {
  if (n < 0) fail(ErrorKind::Precondition, "negative vertex count");
  Graph g;
  g.n_ = n;
  g.adj_.resize(n);
  if (n <= 64) g.rows_.assign(n, 0);
  return g;
}

Graph Graph::from_edges(int n, const EdgeList& edges) {
  Graph g = Graph::empty(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(ErrorKind::Precondition, "edge endpoint out of range");
    if (u == v) fail(ErrorKind::Precondition, "self-loop rejected");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& a = g.adj_[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      fail(ErrorKind::Precondition, "parallel edge rejected");
  }
  g.m_ = static_cast<int>(edges.size());
  if (!g.rows_.empty())
    for (int v = 0; v < n; ++v)
      for (int u : g.adj_[v]) g.rows_[v] |= std::uint64_t{1} << u;
  return g;
}

Graph relabeled(const Graph& g, const std::vector<int>& perm) {
  int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n)
    fail(ErrorKind::Precondition, "relabel map has wrong size");
  std::vector<char> seen(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p])
      fail(ErrorKind::Precondition, "relabel map is not a bijection");
    seen[p] = 1;
  }
  EdgeList mapped;
  mapped.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) {
    int a = perm[u], b = perm[v];
    if (a > b) std::swap(a, b);
    mapped.emplace_back(a, b);
  }
  return Graph::from_edges(n, mapped);
}

VertexList open_neighborhood(const Graph& g, const VertexList& w) {
  std::vector<char> mark(g.vertex_count(), 0);
  for (int v : w) {
    if (v < 0 || v >= g.vertex_count())
      fail(ErrorKind::Precondition, "vertex id out of range");
    for (int u : g.neighbors(v)) mark[u] = 1;
  }
  VertexList out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (mark[v]) out.push_back(v);
  return out;
}

VertexList closed_neighborhood(const Graph& g, const VertexList& w) {
  std::vector<char> mark(g.vertex_count(), 0);
  for (int v : w) {
    if (v < 0 || v >= g.vertex_count())
      fail(ErrorKind::Precondition, "vertex id out of range");
    mark[v] = 1;
    for (int u : g.neighbors(v)) mark[u] = 1;
  }
  VertexList out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (mark[v]) out.push_back(v);
  return out;
}

GraphEdit GraphEdit::delete_edge(int u, int v, std::string tag) {
  GraphEdit e;
  e.kind = Kind::DeleteEdge;
  e.u = std::min(u, v);
  e.v = std::max(u, v);
  e.tag = std::move(tag);
  return e;
}

GraphEdit GraphEdit::subdivide_edge(int u, int v, int new_id, std::string tag) {
  GraphEdit e;
  e.kind = Kind::SubdivideEdge;
  e.u = std::min(u, v);
  e.v = std::max(u, v);
  e.new_id = new_id;
  e.tag = std::move(tag);
  return e;
}

GraphEdit GraphEdit::delete_vertices(VertexList vs, std::string tag) {
  GraphEdit e;
  e.kind = Kind::DeleteVertices;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  e.vertices = std::move(vs);
  e.tag = std::move(tag);
  return e;
}

GraphEdit GraphEdit::add_edge(int u, int v, std::string tag) {
  GraphEdit e;
  e.kind = Kind::AddEdge;
  e.u = std::min(u, v);
  e.v = std::max(u, v);
  e.tag = std::move(tag);
  return e;
}

const char* to_string(GraphEdit::Kind k) {
  switch (k) {
    case GraphEdit::Kind::DeleteEdge: return "delete_edge";
    case GraphEdit::Kind::SubdivideEdge: return "subdivide_edge";
    case GraphEdit::Kind::DeleteVertices: return "delete_vertices";
    case GraphEdit::Kind::AddEdge: return "add_edge";
  }
  return "unknown";
}

namespace {

std::string edit_desc(const GraphEdit& e) {
  std::string s = to_string(e.kind);
  s += "(";
  if (e.kind == GraphEdit::Kind::DeleteVertices) {
    for (size_t i = 0; i < e.vertices.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(e.vertices[i]);
    }
  } else {
    s += std::to_string(e.u) + "," + std::to_string(e.v);
    if (e.kind == GraphEdit::Kind::SubdivideEdge)
      s += "," + std::to_string(e.new_id);
  }
  s += ")";
  return s;
}

}  // namespace

EditResult apply_edit(const Graph& g, const GraphEdit& e) {
  const int n = g.vertex_count();
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);

  switch (e.kind) {
    case GraphEdit::Kind::DeleteEdge: {
      if (e.u < 0 || e.v >= n || !g.has_edge(e.u, e.v))
        fail(ErrorKind::Precondition, "edit precondition failed: " + edit_desc(e) + " (edge absent)");
      EdgeList kept;
      kept.reserve(g.edge_count() - 1);
      for (auto ed : g.edges())
        if (!(ed.first == e.u && ed.second == e.v)) kept.push_back(ed);
      return {Graph::from_edges(n, kept), identity};
    }
    case GraphEdit::Kind::SubdivideEdge: {
      if (e.u < 0 || e.v >= n || !g.has_edge(e.u, e.v))
        fail(ErrorKind::Precondition, "edit precondition failed: " + edit_desc(e) + " (edge absent)");
      if (e.new_id != n)
        fail(ErrorKind::Precondition,
             "edit precondition failed: " + edit_desc(e) + " (new id must be " + std::to_string(n) + ")");
      EdgeList kept;
      kept.reserve(g.edge_count() + 1);
      for (auto ed : g.edges())
        if (!(ed.first == e.u && ed.second == e.v)) kept.push_back(ed);
      kept.emplace_back(e.u, n);
      kept.emplace_back(e.v, n);
      return {Graph::from_edges(n + 1, kept), identity};
    }
    case GraphEdit::Kind::DeleteVertices: {
      for (int v : e.vertices)
        if (v < 0 || v >= n)
          fail(ErrorKind::Precondition, "edit precondition failed: " + edit_desc(e) + " (vertex absent)");
      std::vector<int> relabel(n, -1);
      int next = 0;
      size_t k = 0;
      for (int v = 0; v < n; ++v) {
        if (k < e.vertices.size() && e.vertices[k] == v) {
          ++k;
          continue;
        }
        relabel[v] = next++;
      }
      EdgeList kept;
      for (auto [u, v] : g.edges())
        if (relabel[u] >= 0 && relabel[v] >= 0)
          kept.emplace_back(relabel[u], relabel[v]);
      return {Graph::from_edges(next, kept), relabel};
    }
    case GraphEdit::Kind::AddEdge: {
      if (e.u < 0 || e.v >= n || e.u == e.v)
        fail(ErrorKind::Precondition, "edit precondition failed: " + edit_desc(e) + " (bad endpoints)");
      if (g.has_edge(e.u, e.v))
        fail(ErrorKind::Precondition, "edit precondition failed: " + edit_desc(e) + " (edge already present)");
      EdgeList kept = g.edges();
      kept.emplace_back(e.u, e.v);
      return {Graph::from_edges(n, kept), identity};
    }
  }
  fail(ErrorKind::Internal, "unreachable edit kind");
}

Graph replay_trace(const Graph& g, const TransformTrace& trace) {
  Graph cur = g;
  for (const GraphEdit& e : trace.steps) cur = apply_edit(cur, e).graph;
  return cur;
}

const char* to_string(ComponentShape s) {
  switch (s) {
    case ComponentShape::Isolated: return "isolated";
    case ComponentShape::Path: return "path";
    case ComponentShape::Cycle: return "cycle";
    case ComponentShape::Other: return "other";
  }
  return "unknown";
}

std::vector<Component> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<Component> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    std::deque<int> queue{s};
    comp[s] = id;
    VertexList members;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      members.push_back(v);
      for (int u : g.neighbors(v))
        if (comp[u] < 0) {
          comp[u] = id;
          queue.push_back(u);
        }
    }
    std::sort(members.begin(), members.end());
    ComponentShape shape;
    if (members.size() == 1) {
      shape = ComponentShape::Isolated;
    } else {
      int deg_one = 0;
      int big = 0;
      for (int v : members) {
        int d = g.degree(v);
        if (d == 1) ++deg_one;
        if (d > 2) ++big;
      }
      if (big > 0)
        shape = ComponentShape::Other;
      else if (deg_one == 0)
        shape = ComponentShape::Cycle;
      else
        shape = ComponentShape::Path;
    }
    out.push_back({std::move(members), shape});
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  return connected_components(g).size() == 1;
}

bool is_cubic(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3) return false;
  return g.vertex_count() > 0;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
  return d;
}

int min_degree(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  int d = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v) d = std::min(d, g.degree(v));
  return d;
}

namespace {

// unit-capacity max flow on the vertex-split network; flow values stay tiny
struct FlowNet {
  struct Arc {
    int to;
    int cap;
    int rev;
  };
  std::vector<std::vector<Arc>> arcs;

  explicit FlowNet(int nodes) : arcs(nodes) {}

  void add(int a, int b, int cap) {
    arcs[a].push_back({b, cap, static_cast<int>(arcs[b].size())});
    arcs[b].push_back({a, 0, static_cast<int>(arcs[a].size()) - 1});
  }

  int max_flow(int s, int t) {
    int flow = 0;
    while (true) {
      std::vector<std::pair<int, int>> parent(arcs.size(), {-1, -1});
      std::deque<int> queue{s};
      parent[s] = {s, -1};
      while (!queue.empty() && parent[t].first < 0) {
        int v = queue.front();
        queue.pop_front();
        for (size_t i = 0; i < arcs[v].size(); ++i) {
          const Arc& a = arcs[v][i];
          if (a.cap > 0 && parent[a.to].first < 0) {
            parent[a.to] = {v, static_cast<int>(i)};
            queue.push_back(a.to);
          }
        }
      }
      if (parent[t].first < 0) return flow;
      for (int v = t; v != s;) {
        auto [p, idx] = parent[v];
        arcs[p][idx].cap -= 1;
        arcs[arcs[p][idx].to][arcs[p][idx].rev].cap += 1;
        v = p;
      }
      ++flow;
    }
  }
};

int vertex_flow(const Graph& g, int s, int t) {
  const int n = g.vertex_count();
  const int big = n + 1;
  FlowNet net(2 * n);
  for (int v = 0; v < n; ++v) net.add(2 * v, 2 * v + 1, 1);
  for (auto [u, v] : g.edges()) {
    net.add(2 * u + 1, 2 * v, big);
    net.add(2 * v + 1, 2 * u, big);
  }
  return net.max_flow(2 * s + 1, 2 * t);
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 0;
  if (g.edge_count() == n * (n - 1) / 2) return n - 1;  // complete
  if (!is_connected(g)) return 0;
  int best = n;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (!g.has_edge(s, t)) best = std::min(best, vertex_flow(g, s, t));
  return best;
}

VertexList normalized_vertex_set(VertexList v, int n) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  for (int x : v)
    if (x < 0 || x >= n)
      fail(ErrorKind::Precondition,
           "vertex id " + std::to_string(x) + " out of range [0, " + std::to_string(n) + ")");
  return v;
}

bool sorted_contains(const VertexList& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

VertexList set_union(const VertexList& a, const VertexList& b) {
  VertexList out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexList set_difference(const VertexList& a, const VertexList& b) {
  VertexList out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexList set_intersection(const VertexList& a, const VertexList& b) {
  VertexList out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

int first_undominated(const Graph& g, const VertexList& x) {
  std::vector<char> covered(g.vertex_count(), 0);
  for (int v : x) {
    covered[v] = 1;
    for (int u : g.neighbors(v)) covered[u] = 1;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!covered[v]) return v;
  return -1;
}

bool dominates(const Graph& g, const VertexList& x) {
  return first_undominated(g, x) == -1;
}

int internal_edge_count(const Graph& g, const VertexList& x) {
  int count = 0;
  for (int v : x)
    for (int u : g.neighbors(v))
      if (u > v && sorted_contains(x, u)) ++count;
  return count;
}

EdgeList internal_edges(const Graph& g, const VertexList& x) {
  EdgeList out;
  for (int v : x)
    for (int u : g.neighbors(v))
      if (u > v && sorted_contains(x, u)) out.emplace_back(v, u);
  return out;
}

bool is_independent_set(const Graph& g, const VertexList& x) {
  return internal_edge_count(g, x) == 0;
}

}  // namespace domlab
