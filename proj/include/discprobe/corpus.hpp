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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "discprobe/graph.hpp"

namespace discprobe {
namespace corpus_detail {

// Bit position of pair (i, j), i < j, in lexicographic order.
inline int pair_bit(int i, int j, int n) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline bool mask_connected(int n, std::uint64_t mask) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (mask >> pair_bit(i, j, n) & 1) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
      }
  std::vector<bool> vis(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  vis[0] = true;
  int seen = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(u)])
      if (!vis[static_cast<std::size_t>(w)]) {
        vis[static_cast<std::size_t>(w)] = true;
        ++seen;
        stack.push_back(w);
      }
  }
  return seen == n;
}

// Minimum adjacency bitmask over all vertex relabelings: an unlabeled
// canonical form by brute force, on purpose independent of the project's
// coded canonicalization so the two can cross-check each other.
inline std::uint64_t min_perm_mask(int n, std::uint64_t mask) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~0ULL;
  do {
    std::uint64_t relabeled = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (mask >> pair_bit(i, j, n) & 1) {
          int a = perm[static_cast<std::size_t>(i)];
          int b = perm[static_cast<std::size_t>(j)];
          if (a > b) std::swap(a, b);
          relabeled |= 1ULL << pair_bit(a, b, n);
        }
    best = std::min(best, relabeled);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline Graph mask_to_graph(int n, std::uint64_t mask) {
  std::vector<VertexPair> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (mask >> pair_bit(i, j, n) & 1) edges.push_back({i, j});
  return Graph(n, edges);
}

}  // namespace corpus_detail

// Every connected graph with at most 6 vertices and at most 6 edges, one
// representative per isomorphism class, ordered by (n, m, canonical mask).
// Enumerated afresh by exhaustion — 42 graphs in total.
inline const std::vector<Graph>& small_connected_corpus() {
  static const std::vector<Graph> corpus = [] {
    std::vector<Graph> out;
    for (int n = 1; n <= 6; ++n) {
      const int pairs = n * (n - 1) / 2;
      std::set<std::uint64_t> seen;
      std::vector<std::pair<int, std::uint64_t>> keep;
      for (std::uint64_t mask = 0; mask < (1ULL << pairs); ++mask) {
        if (std::popcount(mask) > 6) continue;
        if (!corpus_detail::mask_connected(n, mask)) continue;
        std::uint64_t canon = corpus_detail::min_perm_mask(n, mask);
        if (seen.insert(canon).second)
          keep.push_back({std::popcount(canon), canon});
      }
      std::sort(keep.begin(), keep.end());
      for (auto [m, canon] : keep)
        out.push_back(corpus_detail::mask_to_graph(n, canon));
    }
    return out;
  }();
  return corpus;
}

}  // namespace discprobe
