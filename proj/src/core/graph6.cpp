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
#include <cstdint>
#include <string>

#include "core/graph.hpp"

namespace domlab {

namespace {

constexpr long long kMaxVertices = 1LL << 18;

int body_char(std::string_view text, std::size_t pos) {
  if (pos >= text.size())
    fail(ErrorKind::Parse, "truncated graph6 bit vector");
  unsigned char c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126)
    fail(ErrorKind::Parse,
         "graph6 character out of range at byte " + std::to_string(pos));
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) fail(ErrorKind::Parse, "malformed graph6 header: empty line");

  std::size_t pos = 0;
  unsigned char h0 = static_cast<unsigned char>(text[pos]);
  if (h0 < 63 || h0 > 126)
    fail(ErrorKind::Parse, "malformed graph6 header byte");
  ++pos;

  long long n;
  if (h0 != 126) {
    n = h0 - 63;
  } else {
    if (pos >= text.size())
      fail(ErrorKind::Parse, "malformed graph6 header: missing size bytes");
    bool wide = static_cast<unsigned char>(text[pos]) == 126;
    if (wide) ++pos;
    int groups = wide ? 6 : 3;
    n = 0;
    for (int i = 0; i < groups; ++i) {
      if (pos >= text.size())
        fail(ErrorKind::Parse, "malformed graph6 header: missing size bytes");
      unsigned char c = static_cast<unsigned char>(text[pos]);
      if (c < 63 || c > 126)
        fail(ErrorKind::Parse, "malformed graph6 header byte");
      n = (n << 6) | (c - 63);
      ++pos;
    }
  }
  if (n > kMaxVertices)
    fail(ErrorKind::SizeLimit,
         "graph6 vertex count " + std::to_string(n) + " exceeds limit " +
             std::to_string(kMaxVertices));

  EdgeList edges;
  int cur = 0;
  int cur_left = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (cur_left == 0) {
        cur = body_char(text, pos);
        ++pos;
        cur_left = 6;
      }
      int bit = (cur >> (cur_left - 1)) & 1;
      --cur_left;
      if (bit) edges.emplace_back(i, j);
    }
  }
  // padding bits of the final byte must be zero
  if (cur_left > 0 && (cur & ((1 << cur_left) - 1)) != 0)
    fail(ErrorKind::Parse, "graph6 body has nonzero padding bits");
  if (pos != text.size())
    fail(ErrorKind::Parse, "trailing data after graph6 body");

  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const long long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int cur = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      cur = (cur << 1) | (g.has_edge(i, static_cast<int>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + cur));
        cur = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (cur << (6 - filled))));
  return out;
}

}  // namespace domlab
