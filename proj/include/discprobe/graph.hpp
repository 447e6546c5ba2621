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
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "discprobe/errors.hpp"

namespace discprobe {

using VertexPair = std::pair<int, int>;

// Normalizes an undirected edge so that first < second.
inline VertexPair norm_edge(int u, int v) {
  return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

// Immutable simple undirected graph on vertex set {0, ..., n-1}.
// Duplicate edges in the input are deduplicated; self-loops are rejected.
// Once constructed, a Graph is never mutated and can be shared freely
// across concurrent workers.
class Graph {
 public:
  Graph() = default;

  Graph(int n, const std::vector<VertexPair>& edge_list) : n_(n) {
    if (n < 0) throw InvalidParameter("vertex count must be non-negative");
    std::set<VertexPair> dedup;
    for (auto [u, v] : edge_list) {
      check_vertex(u);
      check_vertex(v);
      if (u == v) throw SelfLoop(u);
      dedup.insert(norm_edge(u, v));
    }
    edges_.assign(dedup.begin(), dedup.end());
    adjacency_.assign(static_cast<std::size_t>(n_), {});
    for (auto [u, v] : edges_) {
      adjacency_[static_cast<std::size_t>(u)].push_back(v);
      adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size());
  }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adjacency_[static_cast<std::size_t>(v)];
  }

  // Edges sorted lexicographically with u < v in each pair.
  const std::vector<VertexPair>& edges() const { return edges_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& nbrs = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw VertexOutOfRange(v, n_);
  }

  // --- Edge-list text format -------------------------------------------
  // First non-comment line: "n m". Then m lines "u v" with 0 <= u, v < n.
  // Lines starting with '#' are comments. Vertex ids are 0-based.

  static Graph load(std::istream& in) {
    std::vector<VertexPair> edge_list;
    long long n = -1, m = -1;
    std::string line;
    while (std::getline(in, line)) {
      std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      if (n < 0) {
        if (ls >> n >> m) {
          if (n < 0 || m < 0) throw IoError("invalid header counts");
          continue;
        }
        std::string junk;
        if (ls.clear(), std::istringstream(line) >> junk)
          throw IoError("expected header line 'n m'");
        continue;  // blank or comment-only line before header
      }
      long long u, v;
      std::istringstream es(line);
      if (es >> u >> v) {
        edge_list.push_back({static_cast<int>(u), static_cast<int>(v)});
      } else {
        std::string junk;
        if (std::istringstream(line) >> junk)
          throw IoError("expected edge line 'u v', got: " + line);
      }
    }
    if (n < 0) throw IoError("missing header line 'n m'");
    if (static_cast<long long>(edge_list.size()) != m)
      throw IoError("header promised " + std::to_string(m) + " edges, found " +
                    std::to_string(edge_list.size()));
    return Graph(static_cast<int>(n), edge_list);
  }

  void save(std::ostream& out) const {
    out << n_ << ' ' << edges_.size() << '\n';
    for (auto [u, v] : edges_) out << u << ' ' << v << '\n';
  }

 private:
  int n_ = 0;
  std::vector<VertexPair> edges_;
  std::vector<std::vector<int>> adjacency_;
};

// Rooted subgraph over an ambient vertex id space: vertex/edge sets plus
// marked roots. This is the working representation for explored subgraphs
// (single discs, and unions H = U_v H_v of several of them). Ordered
// containers keep iteration deterministic.
struct Subgraph {
  std::set<int> vertices;
  std::set<VertexPair> edges;
  std::set<int> roots;

  void add_vertex(int v) { vertices.insert(v); }

  void add_edge(int u, int v) {
    if (u == v) throw SelfLoop(u);
    vertices.insert(u);
    vertices.insert(v);
    edges.insert(norm_edge(u, v));
  }

  bool has_edge(int u, int v) const {
    return edges.count(norm_edge(u, v)) > 0;
  }

  // Number of collected edges incident to v.
  int degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges)
      if (a == v || b == v) ++d;
    return d;
  }

  // Per-vertex degree map, cheaper than repeated degree() scans.
  std::map<int, int> degree_map() const {
    std::map<int, int> d;
    for (int v : vertices) d[v] = 0;
    for (const auto& [a, b] : edges) {
      ++d[a];
      ++d[b];
    }
    return d;
  }

  // In-place union: vertex, edge, and root sets are merged; roots of both
  // operands stay marked.
  void merge(const Subgraph& other) {
    vertices.insert(other.vertices.begin(), other.vertices.end());
    edges.insert(other.edges.begin(), other.edges.end());
    roots.insert(other.roots.begin(), other.roots.end());
  }

  bool operator==(const Subgraph& other) const {
    return vertices == other.vertices && edges == other.edges &&
           roots == other.roots;
  }
};

// Union of two rooted subgraphs (commutative, associative, idempotent).
inline Subgraph union_of(const Subgraph& a, const Subgraph& b) {
  Subgraph out = a;
  out.merge(b);
  return out;
}

}  // namespace discprobe
