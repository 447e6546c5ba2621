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

#include <cstdint>
#include <optional>
#include <utility>

#include "discprobe/errors.hpp"
#include "discprobe/graph.hpp"
#include "discprobe/rng.hpp"

namespace discprobe {

// Query-access front end to a graph: uniform random vertex, uniform random
// neighbor, and uniform random edge queries, with deterministic seeding and
// per-query accounting.
//
// An oracle instance is single-threaded (stateful generator plus counter).
// Parallel experiments construct one oracle per worker, seeded with
// derive_seed(master, worker_index).
class QueryOracle {
 public:
  QueryOracle(const Graph& graph, std::uint64_t seed)
      : graph_(&graph), rng_(seed) {}

  const Graph& graph() const { return *graph_; }

  // Total number of queries issued (each call below counts as exactly one).
  std::uint64_t query_count() const { return query_count_; }

  // Uniform vertex from [0, n).
  int random_vertex() {
    if (graph_->vertex_count() == 0) throw EmptyGraph();
    ++query_count_;
    return static_cast<int>(
        rng_.below(static_cast<std::uint64_t>(graph_->vertex_count())));
  }

  // Uniform neighbor of v, or nullopt if v is isolated. NoNeighbor is a
  // distinguished return rather than an error so that exploration loops can
  // treat isolated vertices as singleton discs.
  std::optional<int> random_neighbor(int v) {
    graph_->check_vertex(v);
    ++query_count_;
    const auto& nbrs = graph_->neighbors(v);
    if (nbrs.empty()) return std::nullopt;
    return nbrs[static_cast<std::size_t>(
        rng_.below(static_cast<std::uint64_t>(nbrs.size())))];
  }

  // Uniform edge with uniformly random endpoint order.
  VertexPair random_edge() {
    if (graph_->edge_count() == 0) throw NoEdges();
    ++query_count_;
    auto [u, v] = graph_->edges()[static_cast<std::size_t>(
        rng_.below(static_cast<std::uint64_t>(graph_->edge_count())))];
    if (rng_.coin()) std::swap(u, v);
    return {u, v};
  }

 private:
  const Graph* graph_;
  Rng rng_;
  std::uint64_t query_count_ = 0;
};

}  // namespace discprobe
