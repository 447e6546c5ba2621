// Copyright 2026 The Discprobe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "discprobe/disc.hpp"
#include "discprobe/errors.hpp"
#include "discprobe/graph.hpp"
#include "discprobe/rng.hpp"

namespace discprobe {
namespace gen {

inline Graph empty_graph(int n) { return Graph(n, {}); }

inline Graph path(int n) {
  if (n < 1) throw InvalidParameter("path needs n >= 1");
  std::vector<VertexPair> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

inline Graph cycle(int n) {
  if (n < 3) throw InvalidParameter("cycle needs n >= 3");
  std::vector<VertexPair> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  e.push_back({0, n - 1});
  return Graph(n, e);
}

// Star with center 0 and n-1 leaves.
inline Graph star(int n) {
  if (n < 1) throw InvalidParameter("star needs n >= 1");
  std::vector<VertexPair> e;
  for (int i = 1; i < n; ++i) e.push_back({0, i});
  return Graph(n, e);
}

inline Graph clique(int n) {
  if (n < 1) throw InvalidParameter("clique needs n >= 1");
  std::vector<VertexPair> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, e);
}

// Binomial random graph G(n, p) via geometric skipping over the ordered
// pair sequence — expected O(n + m) work.
inline Graph er(int n, double p, std::uint64_t seed) {
  if (n < 1) throw InvalidParameter("er needs n >= 1");
  if (p < 0.0 || p > 1.0) throw InvalidParameter("er needs p in [0, 1]");
  if (p >= 1.0) return clique(n);
  std::vector<VertexPair> e;
  if (p > 0.0) {
    Rng rng(seed);
    double logq = std::log1p(-p);
    long long i = 1, j = -1;
    while (i < n) {
      double r = rng.unit();
      long long skip =
          static_cast<long long>(std::floor(std::log1p(-r) / logq));
      j += 1 + skip;
      while (j >= i && i < n) {
        j -= i;
        ++i;
      }
      if (i < n) e.push_back({static_cast<int>(j), static_cast<int>(i)});
    }
  }
  return Graph(n, e);
}

// Uniform random graph with exactly m distinct edges (rejection sampling;
// intended for sparse m).
inline Graph er_nm(int n, std::int64_t m, std::uint64_t seed) {
  if (n < 1) throw InvalidParameter("er_nm needs n >= 1");
  std::int64_t max_edges =
      static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (m < 0 || m > max_edges)
    throw InvalidParameter("er_nm needs 0 <= m <= n*(n-1)/2");
  if (m * 2 > max_edges) {  // dense fallback: shuffle all pairs
    std::vector<VertexPair> all;
    all.reserve(static_cast<std::size_t>(max_edges));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) all.push_back({i, j});
    Rng rng(seed);
    rng.shuffle(all);
    all.resize(static_cast<std::size_t>(m));
    return Graph(n, all);
  }
  Rng rng(seed);
  std::set<VertexPair> edges;
  while (edges.size() < static_cast<std::size_t>(m)) {
    int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    if (u == v) continue;
    edges.insert(norm_edge(u, v));
  }
  return Graph(n, {edges.begin(), edges.end()});
}

// Two graphs side by side: b's vertex ids are shifted past a's.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<VertexPair> e = a.edges();
  for (auto [u, v] : b.edges())
    e.push_back({u + a.vertex_count(), v + a.vertex_count()});
  return Graph(a.vertex_count() + b.vertex_count(), e);
}

struct Planted {
  Graph graph;
  std::vector<int> image;  // image[i] = host vertex of pattern vertex i
};

// Adds a pattern's edges on distinct randomly chosen host vertices.
inline Planted planted(const Graph& base, const RootedGraph& pattern,
                       std::uint64_t seed) {
  if (pattern.n > base.vertex_count())
    throw InvalidParameter("pattern larger than host graph");
  Rng rng(seed);
  std::vector<int> ids(static_cast<std::size_t>(base.vertex_count()));
  std::iota(ids.begin(), ids.end(), 0);
  rng.shuffle(ids);
  std::vector<int> image(ids.begin(), ids.begin() + pattern.n);
  std::set<VertexPair> edges(base.edges().begin(), base.edges().end());
  for (auto [u, v] : pattern.edges)
    edges.insert(norm_edge(image[static_cast<std::size_t>(u)],
                           image[static_cast<std::size_t>(v)]));
  return {Graph(base.vertex_count(), {edges.begin(), edges.end()}),
          std::move(image)};
}

}  // namespace gen
}  // namespace discprobe
