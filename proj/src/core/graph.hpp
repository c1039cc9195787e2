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

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/errors.hpp"

namespace domlab {

using VertexList = std::vector<int>;                 // sorted, unique ids
using EdgeList = std::vector<std::pair<int, int>>;   // (u, v) with u < v

// Immutable simple undirected graph. Vertices are dense ids 0..n-1 and
// neighbor lists are sorted ascending. Graphs on at most 64 vertices also
// carry one bitset adjacency row per vertex; larger graphs take the
// general path everywhere.
class Graph {
 public:
  Graph() = default;

  static Graph empty(int n);
  static Graph from_edges(int n, const EdgeList& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  int degree(int v) const;
  const VertexList& neighbors(int v) const;
  bool has_edge(int u, int v) const;
  EdgeList edges() const;  // lexicographic, u < v

  bool has_row_masks() const { return n_ <= 64; }
  std::uint64_t row_mask(int v) const;
  std::uint64_t closed_row_mask(int v) const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexList> adj_;
  std::vector<std::uint64_t> rows_;  // only populated for n <= 64
};

// perm[old] = new; must be a bijection on 0..n-1.
Graph relabeled(const Graph& g, const std::vector<int>& perm);

// graph6: header byte 63+n for n <= 62 (longer headers above), then the
// upper triangle column-major, 6 bits per byte offset by 63. One graph per
// line. Parsing accepts n up to 2^18.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

VertexList open_neighborhood(const Graph& g, const VertexList& w);
VertexList closed_neighborhood(const Graph& g, const VertexList& w);

// A single replayable graph edit. Applying an edit whose precondition
// fails is an error, never a silent no-op.
struct GraphEdit {
  enum class Kind { DeleteEdge, SubdivideEdge, DeleteVertices, AddEdge };

  Kind kind{};
  int u = -1;
  int v = -1;
  int new_id = -1;       // SubdivideEdge only; must equal the current n
  VertexList vertices;   // DeleteVertices only
  std::string tag;       // free-form justification

  static GraphEdit delete_edge(int u, int v, std::string tag = {});
  static GraphEdit subdivide_edge(int u, int v, int new_id, std::string tag = {});
  static GraphEdit delete_vertices(VertexList vs, std::string tag = {});
  static GraphEdit add_edge(int u, int v, std::string tag = {});
};

const char* to_string(GraphEdit::Kind k);

struct EditResult {
  Graph graph;
  // old id -> new id; -1 for deleted vertices. Identity-extended for
  // SubdivideEdge (size n, new vertex appended as id n).
  std::vector<int> relabel;
};

EditResult apply_edit(const Graph& g, const GraphEdit& e);

// Ordered, replayable list of edits.
struct TransformTrace {
  std::vector<GraphEdit> steps;
};

// Replays every step in order; throws if any precondition fails.
Graph replay_trace(const Graph& g, const TransformTrace& trace);

enum class ComponentShape { Isolated, Path, Cycle, Other };
const char* to_string(ComponentShape s);

struct Component {
  VertexList vertices;
  ComponentShape shape;
};

std::vector<Component> connected_components(const Graph& g);

bool is_connected(const Graph& g);
bool is_cubic(const Graph& g);
int max_degree(const Graph& g);
int min_degree(const Graph& g);

// Flow-based (vertex-split max-flow over all non-adjacent pairs).
// Complete graphs yield n-1, disconnected graphs 0.
int vertex_connectivity(const Graph& g);

// ---- sorted vertex-set helpers shared across modules ----

VertexList normalized_vertex_set(VertexList v, int n);
bool sorted_contains(const VertexList& s, int v);
VertexList set_union(const VertexList& a, const VertexList& b);
VertexList set_difference(const VertexList& a, const VertexList& b);
VertexList set_intersection(const VertexList& a, const VertexList& b);

bool dominates(const Graph& g, const VertexList& x);
// First vertex not covered by N[x], or -1 when x dominates.
int first_undominated(const Graph& g, const VertexList& x);
int internal_edge_count(const Graph& g, const VertexList& x);
EdgeList internal_edges(const Graph& g, const VertexList& x);
bool is_independent_set(const Graph& g, const VertexList& x);

}  // namespace domlab
