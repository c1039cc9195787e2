#include <cstdio>
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
#include "core/generators.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <random>

namespace domlab {

namespace {

// Exhaustive cubic enumeration. Rows of the adjacency matrix are fixed
// top to bottom; after each row the partial matrix is kept only if no
// permutation of the settled vertices yields a lexicographically
// greater graph6 bit string, and the full test at the last row leaves
// exactly the maximum labeling of each class.
inline std::uint64_t g_dfs_nodes = 0, g_beat_calls = 0;
inline std::uint64_t g_beat_by_r[20] = {};
inline std::uint64_t g_dfs_by_r[20] = {};
struct CubicEnumerator {
  int n;
  std::vector<std::uint32_t> adj;  // neighbor masks
  std::vector<int> deg;
  std::vector<Graph> found;

  explicit CubicEnumerator(int size) : n(size), adj(size, 0), deg(size, 0) {}

  bool edge(int a, int b) const { return (adj[a] >> b) & 1u; }

  void link(int a, int b) {
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
    ++deg[a];
    ++deg[b];
  }

  void unlink(int a, int b) {
    adj[a] &= ~(1u << b);
    adj[b] &= ~(1u << a);
    --deg[a];
    --deg[b];
  }

  // Does any permutation of {0..r} (identity elsewhere) produce a
  // strictly greater prefix of the column-major bit string? Candidates
  // whose transposition with an already-tried candidate fixes the
  // settled square are skipped: their subtrees are bit-identical.
  //
  // Intermediate rows cap the search: an inconclusive capped run means
  // "no prune", which only costs tree size, never correctness. The
  // leaf check runs uncapped, so each class survives exactly once.
  enum class BeatResult { NoBeat, Beaten, CapHit };
  static constexpr std::uint64_t kInnerCap = 800;

  struct BeatState {
    int r;
    std::vector<std::uint32_t> mask;
    std::vector<int> image;
    std::uint32_t used = 0;
    std::uint64_t nodes_left = 0;
    bool capped = false;
  };

  bool beatable(int r, bool exact) const {
    ++g_beat_calls; g_beat_by_r[r]++;
    const std::uint32_t square = (r + 1 >= 32) ? ~0u : ((1u << (r + 1)) - 1);
    BeatState st;
    st.r = r;
    st.mask.resize(r + 1);
    for (int v = 0; v <= r; ++v) st.mask[v] = adj[v] & square;
    st.image.assign(r + 1, -1);
    st.capped = !exact;
    st.nodes_left = kInnerCap;
    return beat_dfs(0, st) == BeatResult::Beaten;
  }

  BeatResult beat_dfs(int pos, BeatState& st) const {
    ++g_dfs_nodes;
    if (pos > st.r) return BeatResult::NoBeat;  // all equal: automorphism
    if (st.capped && st.nodes_left-- == 0) return BeatResult::CapHit;
    std::uint32_t tried = 0;
    bool saw_cap = false;
    for (int cand = 0; cand <= st.r; ++cand) {
      const std::uint32_t cand_bit = 1u << cand;
      if (st.used & cand_bit) continue;
      bool twin = false;
      for (std::uint32_t rest = tried; rest; rest &= rest - 1) {
        int t = std::countr_zero(rest);
        if (((st.mask[t] ^ st.mask[cand]) & ~((1u << t) | cand_bit)) == 0) {
          twin = true;
          break;
        }
      }
      tried |= cand_bit;
      if (twin) continue;
      int cmp = 0;  // -1 image smaller, 0 tie, 1 image greater
      for (int a = 0; a < pos && cmp == 0; ++a) {
        bool img = (st.mask[st.image[a]] >> cand) & 1u;
        bool cur = (st.mask[a] >> pos) & 1u;
        if (img != cur) cmp = img ? 1 : -1;
      }
      if (cmp == 1) return BeatResult::Beaten;
      if (cmp == -1) continue;
      st.image[pos] = cand;
      st.used |= cand_bit;
      g_dfs_by_r[st.r]++;
      BeatResult sub = beat_dfs(pos + 1, st);
      st.used &= ~cand_bit;
      if (sub == BeatResult::Beaten) return BeatResult::Beaten;
      if (sub == BeatResult::CapHit) saw_cap = true;
    }
    return saw_cap ? BeatResult::CapHit : BeatResult::NoBeat;
  }

  bool feasible_after_row(int row) const {
    long long need = 0;
    for (int j = row + 1; j < n; ++j) {
      int missing = 3 - deg[j];
      if (missing > n - row - 2) return false;
      need += missing;
    }
    return need % 2 == 0;
  }

  void emit_if_cubic_connected() {
    for (int v = 0; v < n; ++v)
      if (deg[v] != 3) return;
    EdgeList edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (edge(a, b)) edges.emplace_back(a, b);
    Graph g = Graph::from_edges(n, edges);
    if (is_connected(g)) found.push_back(std::move(g));
  }

  void fill_row(int row) {
    if (row == n) {
      emit_if_cubic_connected();
      return;
    }
    if (row == 0) {
      // the maximum labeling of a connected cubic graph opens 1110...
      link(0, 1);
      link(0, 2);
      link(0, 3);
      std::vector<int> none;
      choose(0, 0, 0, none, none);
      unlink(0, 3);
      unlink(0, 2);
      unlink(0, 1);
      return;
    }
    int needed = 3 - deg[row];
    if (needed < 0) return;
    std::vector<int> cols;
    for (int j = row + 1; j < n; ++j)
      if (deg[j] < 3) cols.push_back(j);
    std::vector<int> pick;
    choose(row, needed, 0, cols, pick);
  }

  void choose(int row, int needed, std::size_t from, const std::vector<int>& cols,
              std::vector<int>& pick) {
    if (needed == 0) {
      if (!feasible_after_row(row)) return;
      // the column of the next vertex is settled now; a zero column
      // cannot appear in the maximum labeling of a connected graph
      if (row + 1 < n && deg[row + 1] == 0) return;
      if (beatable(std::min(row + 1, n - 1), /*exact=*/row + 1 >= n - 1)) return;
      fill_row(row + 1);
      return;
    }
    if (cols.size() - from < static_cast<std::size_t>(needed)) return;
    for (std::size_t i = from; i < cols.size(); ++i) {
      link(row, cols[i]);
      pick.push_back(cols[i]);
      choose(row, needed - 1, i + 1, cols, pick);
      pick.pop_back();
      unlink(row, cols[i]);
    }
  }
};

}  // namespace

std::vector<Graph> enumerate_cubic_connected(int n) {
  if (n % 2 != 0)
    fail(ErrorKind::Precondition, "cubic graphs need an even vertex count");
  if (n < 4 || n > 14)
    fail(ErrorKind::SizeLimit, "exhaustive enumeration covers 4 <= n <= 14");
  CubicEnumerator en(n);
  en.fill_row(0);
  std::fprintf(stderr, "n=%d beat_calls=%llu dfs_nodes=%llu\n", n,
               (unsigned long long)g_beat_calls, (unsigned long long)g_dfs_nodes);
  for (int r = 0; r < 20; ++r) if (g_beat_by_r[r]) std::fprintf(stderr, "  r=%d calls=%llu dfs=%llu\n", r, (unsigned long long)g_beat_by_r[r], (unsigned long long)g_dfs_by_r[r]);
  g_beat_calls = g_dfs_nodes = 0; for (int r=0;r<20;++r){g_beat_by_r[r]=0;g_dfs_by_r[r]=0;}
  std::sort(en.found.begin(), en.found.end(),
            [](const Graph& a, const Graph& b) { return to_graph6(a) < to_graph6(b); });
  return en.found;
}

namespace {

// mt19937_64 keeps output identical across platforms; shuffle by hand
// for the same reason.
template <class T>
void seeded_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i)
    std::swap(items[i - 1], items[rng() % i]);
}

}  // namespace

Graph random_cubic(int n, std::uint64_t seed, bool require_connected, int max_attempts) {
  if (n < 4 || n % 2 != 0)
    fail(ErrorKind::Precondition, "pairing model needs even n >= 4");
  std::mt19937_64 rng(seed);
  std::vector<int> stubs;
  stubs.reserve(3 * n);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    stubs.clear();
    for (int v = 0; v < n; ++v)
      for (int c = 0; c < 3; ++c) stubs.push_back(v);
    seeded_shuffle(stubs, rng);
    EdgeList edges;
    bool ok = true;
    std::vector<char> matrix(static_cast<std::size_t>(n) * n, 0);
    for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
      int a = stubs[i], b = stubs[i + 1];
      if (a == b || matrix[static_cast<std::size_t>(a) * n + b]) {
        ok = false;
        break;
      }
      matrix[static_cast<std::size_t>(a) * n + b] = 1;
      matrix[static_cast<std::size_t>(b) * n + a] = 1;
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    if (!ok) continue;
    Graph g = Graph::from_edges(n, edges);
    if (require_connected && !is_connected(g)) continue;
    return g;
  }
  fail(ErrorKind::Budget,
       "pairing rejection budget exceeded after " + std::to_string(max_attempts) + " attempts");
}

namespace {

Graph make_cycle(int n) {
  if (n < 3) fail(ErrorKind::Precondition, "cycles need n >= 3");
  EdgeList e;
  for (int i = 0; i < n; ++i) e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return Graph::from_edges(n, e);
}

Graph make_path(int n) {
  if (n < 1) fail(ErrorKind::Precondition, "paths need n >= 1");
  EdgeList e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph make_generalized_petersen(int n, int k) {
  EdgeList e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));  // outer
    e.emplace_back(i, n + i);                                            // spoke
    int a = n + i, b = n + (i + k) % n;                                  // inner
    e.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return Graph::from_edges(2 * n, e);
}

}  // namespace

Graph named_graph(const std::string& raw) {
  std::string name;
  for (char c : raw) name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  std::replace(name.begin(), name.end(), '-', '_');

  if (name == "k4")
    return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  if (name == "k33")
    return Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  if (name == "prism")
    return Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
  if (name == "petersen") return make_generalized_petersen(5, 2);
  if (name == "mobius_kantor") return make_generalized_petersen(8, 3);
  if (name == "claw" || name == "k13")
    return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  if (name.size() > 1 && (name[0] == 'c' || name[0] == 'p')) {
    bool digits = std::all_of(name.begin() + 1, name.end(),
                              [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (digits) {
      int count = std::stoi(name.substr(1));
      return name[0] == 'c' ? make_cycle(count) : make_path(count);
    }
  }
  fail(ErrorKind::UnknownName, "unknown graph name: " + raw);
}

std::vector<std::string> named_graph_names() {
  return {"k4", "k33", "prism", "petersen", "mobius_kantor", "claw", "cN", "pN"};
}

namespace {

// K4 with one subdivided edge; local id 4 is the degree-2 stub.
const EdgeList kEndGadget = {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}};
// K4 with two disjoint subdivided edges; local ids 4 and 5 are stubs.
const EdgeList kInteriorGadget = {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}, {1, 4}, {2, 5}, {3, 5}};

}  // namespace

Graph gadget_chain(int k, std::uint64_t seed) {
  if (k < 1) fail(ErrorKind::Precondition, "gadget chains need k >= 1");
  EdgeList edges;
  int base = 0;
  std::vector<int> left_stub, right_stub;
  // first end gadget
  for (auto [u, v] : kEndGadget) edges.emplace_back(base + u, base + v);
  right_stub.push_back(base + 4);
  base += 5;
  for (int i = 0; i < k - 1; ++i) {
    for (auto [u, v] : kInteriorGadget) edges.emplace_back(base + u, base + v);
    left_stub.push_back(base + 4);
    right_stub.push_back(base + 5);
    base += 6;
  }
  // second end gadget
  for (auto [u, v] : kEndGadget) edges.emplace_back(base + u, base + v);
  left_stub.push_back(base + 4);
  base += 5;
  for (std::size_t i = 0; i < left_stub.size(); ++i) {
    int a = right_stub[i], b = left_stub[i];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  Graph g = Graph::from_edges(base, edges);

  std::mt19937_64 rng(seed);
  std::vector<int> perm(base);
  for (int i = 0; i < base; ++i) perm[i] = i;
  seeded_shuffle(perm, rng);
  Graph out = relabeled(g, perm);
  if (!is_cubic(out) || !is_connected(out))
    fail(ErrorKind::Internal, "gadget chain construction broke its invariants");
  return out;
}

}  // namespace domlab
