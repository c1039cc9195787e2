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
#include <doctest.h>

#include <algorithm>
#include <random>

#include "core/canonical.hpp"
#include "core/graph.hpp"

using namespace domlab;

namespace {

Graph k4() {
  return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Graph cycle(int n) {
  EdgeList e;
  for (int i = 0; i < n; ++i)
    e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return Graph::from_edges(n, e);
}

Graph path(int n) {
  EdgeList e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph random_graph(int n, std::mt19937_64& rng) {
  EdgeList e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() % 2) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
  return perm;
}

}  // namespace

TEST_CASE("graph6 decodes K4 from C~") {
  Graph g = parse_graph6("C~");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 6);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) CHECK(g.has_edge(u, v));
}

TEST_CASE("graph6 encodes K4 and the one-vertex graph") {
  CHECK(to_graph6(k4()) == "C~");
  CHECK(to_graph6(Graph::empty(1)) == "@");
}

TEST_CASE("graph6 rejects bytes below 63 in the body") {
  CHECK_THROWS_WITH_AS(parse_graph6(std::string("C\x01")),
                       doctest::Contains("out of range"), Error);
}

TEST_CASE("graph6 distinguishes its parse failures") {
  try {
    parse_graph6("C");  // body missing entirely
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("truncated") != std::string::npos);
  }
  try {
    parse_graph6("C~~");  // extra byte after the body
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("trailing") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_graph6(std::string(1, '\x05')), Error);  // bad header
}

TEST_CASE("graph6 round-trips 100 random graphs") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + static_cast<int>(rng() % 17);
    Graph g = random_graph(n, rng);
    std::string s = to_graph6(g);
    Graph back = parse_graph6(s);
    CHECK(to_graph6(back) == s);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edge_count() == g.edge_count());
  }
}

TEST_CASE("graph6 long header round-trips") {
  Graph g = path(100);
  Graph back = parse_graph6(to_graph6(g));
  CHECK(back.vertex_count() == 100);
  CHECK(back.edge_count() == 99);
}

TEST_CASE("closed neighborhood on the 4-cycle") {
  Graph c4 = cycle(4);
  CHECK(closed_neighborhood(c4, {0}) == VertexList{0, 1, 3});
  CHECK(closed_neighborhood(c4, {}) == VertexList{});
  CHECK(closed_neighborhood(c4, {0, 1, 2, 3}) == VertexList{0, 1, 2, 3});
  CHECK_THROWS_AS(closed_neighborhood(c4, {7}), Error);
}

TEST_CASE("closed neighborhood equals open union self, pointwise") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    int n = 2 + static_cast<int>(rng() % 12);
    Graph g = random_graph(n, rng);
    VertexList w;
    for (int v = 0; v < n; ++v)
      if (rng() % 3 == 0) w.push_back(v);
    VertexList closed = closed_neighborhood(g, w);
    CHECK(closed == set_union(open_neighborhood(g, w), w));
    CHECK(set_intersection(closed, w) == w);  // W subset of N[W]
  }
}

TEST_CASE("subdividing the edge of P2 yields P3") {
  Graph p2 = path(2);
  EditResult r = apply_edit(p2, GraphEdit::subdivide_edge(0, 1, 2));
  CHECK(r.graph.vertex_count() == 3);
  CHECK(r.graph.has_edge(0, 2));
  CHECK(r.graph.has_edge(1, 2));
  CHECK(!r.graph.has_edge(0, 1));
}

TEST_CASE("subdivision insists on the next dense id") {
  CHECK_THROWS_AS(apply_edit(path(2), GraphEdit::subdivide_edge(0, 1, 5)), Error);
}

TEST_CASE("deleting a vertex of K4 leaves K3 and reports the relabeling") {
  EditResult r = apply_edit(k4(), GraphEdit::delete_vertices({1}));
  CHECK(r.graph.vertex_count() == 3);
  CHECK(r.graph.edge_count() == 3);
  CHECK(r.relabel == std::vector<int>{0, -1, 1, 2});
}

TEST_CASE("adding a present edge is an error, never a no-op") {
  CHECK_THROWS_AS(apply_edit(k4(), GraphEdit::add_edge(0, 1)), Error);
  CHECK_THROWS_AS(apply_edit(path(3), GraphEdit::delete_edge(0, 2)), Error);
}

TEST_CASE("edits leave everything outside their footprint alone") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    int n = 4 + static_cast<int>(rng() % 8);
    Graph g = random_graph(n, rng);
    if (g.edge_count() == 0) continue;
    EdgeList edges = g.edges();
    auto [u, v] = edges[rng() % edges.size()];
    Graph after = apply_edit(g, GraphEdit::delete_edge(u, v)).graph;
    for (auto [a, b] : edges)
      if (!(a == u && b == v)) CHECK(after.has_edge(a, b));
    CHECK(after.edge_count() == g.edge_count() - 1);
  }
}

TEST_CASE("components classify as isolated, path, cycle, other") {
  // P2 plus P4 in one graph
  Graph two_paths = Graph::from_edges(6, {{0, 1}, {2, 3}, {3, 4}, {4, 5}});
  auto comps = connected_components(two_paths);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].shape == ComponentShape::Path);
  CHECK(comps[1].shape == ComponentShape::Path);

  auto k4_comps = connected_components(k4());
  REQUIRE(k4_comps.size() == 1);
  CHECK(k4_comps[0].shape == ComponentShape::Other);

  auto lonely = connected_components(Graph::empty(3));
  REQUIRE(lonely.size() == 3);
  for (const Component& c : lonely) CHECK(c.shape == ComponentShape::Isolated);

  auto ring = connected_components(cycle(5));
  REQUIRE(ring.size() == 1);
  CHECK(ring[0].shape == ComponentShape::Cycle);
}

TEST_CASE("replaying a trace reproduces the edited graph") {
  Graph g = cycle(6);
  TransformTrace trace;
  trace.steps.push_back(GraphEdit::delete_edge(0, 1));
  trace.steps.push_back(GraphEdit::subdivide_edge(2, 3, 6));
  Graph direct = apply_edit(apply_edit(g, trace.steps[0]).graph, trace.steps[1]).graph;
  CHECK(to_graph6(replay_trace(g, trace)) == to_graph6(direct));
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(42);
  Graph g = k4();
  std::string base = canonical_graph6(g);
  for (int t = 0; t < 10; ++t)
    CHECK(canonical_graph6(relabeled(g, random_permutation(4, rng))) == base);
}

TEST_CASE("canonical form separates K33 from the prism") {
  Graph k33 = Graph::from_edges(
      6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  Graph prism = Graph::from_edges(
      6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(canonical_graph6(k33) != canonical_graph6(prism));
}

TEST_CASE("canonical form is idempotent and permutation-invariant in bulk") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 50; ++t) {
    int n = 2 + static_cast<int>(rng() % 11);
    Graph g = random_graph(n, rng);
    CanonicalForm canon = canonical_form(g);
    CHECK(canonical_graph6(parse_graph6(canon.graph6)) == canon.graph6);
    for (int p = 0; p < 2; ++p) {
      Graph shuffled = relabeled(g, random_permutation(n, rng));
      CHECK(canonical_graph6(shuffled) == canon.graph6);
    }
  }
}

TEST_CASE("canonical relabel map actually produces the canonical string") {
  std::mt19937_64 rng(5);
  Graph g = random_graph(9, rng);
  CanonicalForm canon = canonical_form(g);
  CHECK(to_graph6(relabeled(g, canon.relabel)) == canon.graph6);
}

TEST_CASE("degree-style classifiers") {
  CHECK(is_cubic(k4()));
  CHECK(!is_cubic(cycle(5)));
  CHECK(max_degree(k4()) == 3);
  CHECK(min_degree(path(4)) == 1);
  CHECK(is_connected(k4()));
  CHECK(!is_connected(Graph::empty(2)));
}

TEST_CASE("vertex connectivity on the usual suspects") {
  CHECK(vertex_connectivity(k4()) == 3);          // complete
  CHECK(vertex_connectivity(cycle(5)) == 2);      // cycle
  CHECK(vertex_connectivity(path(4)) == 1);       // path
  CHECK(vertex_connectivity(Graph::empty(3)) == 0);
  Graph k33 = Graph::from_edges(
      6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  CHECK(vertex_connectivity(k33) == 3);
}

TEST_CASE("set helpers keep vertex sets sorted and in range") {
  CHECK(normalized_vertex_set({3, 1, 3, 2}, 5) == VertexList{1, 2, 3});
  CHECK_THROWS_AS(normalized_vertex_set({9}, 4), Error);
  CHECK(set_difference({1, 2, 3}, {2}) == VertexList{1, 3});
  CHECK(internal_edge_count(k4(), {0, 1, 2}) == 3);
  CHECK(is_independent_set(cycle(4), {0, 2}));
  CHECK(!is_independent_set(cycle(4), {0, 1}));
}
