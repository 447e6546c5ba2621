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

#include <deque>
#include <map>
#include <set>
#include <vector>

#include "discprobe/disc.hpp"
#include "discprobe/errors.hpp"
#include "discprobe/oracle.hpp"

namespace discprobe {

// c_j = sum_{i=0}^{j} q^i: the maximum number of vertices a breadth-bounded
// random BFS can pop (j = q-1) or visit (j = q). Saturates instead of
// overflowing.
inline long long breadth_bound(int q, int j) {
  long long total = 0, pw = 1;
  for (int i = 0; i <= j; ++i) {
    total += pw;
    if (pw > (1LL << 40) / (q > 1 ? q : 1)) return 1LL << 40;  // saturate
    pw *= q;
  }
  return total;
}

// Breadth-bounded random BFS from v: pops vertices from a FIFO queue and
// issues exactly q random-neighbor queries per popped vertex (draws are with
// replacement). Every drawn vertex and the connecting edge join the result.
// A drawn vertex s is enqueued only on first discovery and only while the
// popped vertex u still has label < q-1; then s gets label l[u] + 1. Labels
// are never decreased afterwards: the FIFO order already hands out minimal
// labels on first discovery. The returned subgraph is undirected and
// deduplicated.
//
// An isolated start vertex yields the singleton disc: its q queries all
// report no neighbor and contribute nothing.
inline Disc random_bfs(QueryOracle& oracle, int v, int q) {
  if (q < 1) throw InvalidParameter("random_bfs requires q >= 1");
  oracle.graph().check_vertex(v);

  std::map<int, int> label;  // only discovered vertices carry labels
  label[v] = 0;
  std::deque<int> queue{v};
  std::set<int> h_vertices{v};
  std::set<VertexPair> h_edges;

  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    int lu = label.at(u);
    for (int i = 0; i < q; ++i) {
      std::optional<int> s = oracle.random_neighbor(u);
      if (!s) continue;  // isolated u: query issued, nothing added
      h_vertices.insert(*s);
      h_edges.insert(norm_edge(u, *s));
      if (lu < q - 1 && label.find(*s) == label.end()) {
        label[*s] = lu + 1;
        queue.push_back(*s);
      }
    }
  }

  Disc d;
  d.root = v;
  d.vertices.assign(h_vertices.begin(), h_vertices.end());
  d.edges.assign(h_edges.begin(), h_edges.end());
  // Distance labels of the returned disc: breadth-first distances inside the
  // collected subgraph. Vertices that were drawn but never enqueued did not
  // receive an internal label; their distance is still well defined in H.
  std::map<int, std::vector<int>> adj;
  for (auto [a, b] : h_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  d.depth[v] = 0;
  std::deque<int> bfs{v};
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop_front();
    for (int w : adj[u]) {
      if (d.depth.find(w) == d.depth.end()) {
        d.depth[w] = d.depth[u] + 1;
        bfs.push_back(w);
      }
    }
  }
  return d;
}

}  // namespace discprobe
