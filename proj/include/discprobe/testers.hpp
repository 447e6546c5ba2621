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
#include <map>
#include <optional>
#include <vector>

#include "discprobe/disc.hpp"
#include "discprobe/errors.hpp"
#include "discprobe/forbidden.hpp"
#include "discprobe/graph.hpp"
#include "discprobe/oracle.hpp"
#include "discprobe/rbfs.hpp"
#include "discprobe/rng.hpp"
#include "discprobe/stream.hpp"

namespace discprobe {

enum class OracleMode { kNeighbor, kNeighborEdge };

struct TesterParams {
  int q0 = 1;            // exploration radius the family was designed for
  int amplification = 3; // effective radius multiplier
  int q_override = 0;    // explicit effective radius (0 = amplification * q0)
  int samples = 16;      // sampled roots per streaming run
  OracleMode mode = OracleMode::kNeighbor;
  int n0 = 0;            // streaming stores graphs up to this size verbatim

  int effective_q() const {
    int q = q_override > 0 ? q_override : amplification * q0;
    if (q < 1) throw InvalidParameter("effective radius must be >= 1");
    return q;
  }
};

struct Transcript {
  std::uint64_t queries = 0;   // oracle calls of any kind
  std::vector<int> roots;      // every explored root, sampled and pinned
  std::size_t reserved_words = 0;
  std::size_t used_words = 0;
  int growth_events = 0;
  bool exact_path = false;     // streaming run stored the whole graph
};

struct Verdict {
  bool reject = false;
  std::optional<Match> match;
  bool witness_checked = false;  // witness revalidated against the input
  Transcript transcript;
};

namespace detail {

inline Verdict decide(const Subgraph& h, const ForbiddenFamily& fam,
                      const Graph& g, const std::map<int, int>* colors,
                      Transcript transcript) {
  Verdict v;
  v.transcript = std::move(transcript);
  auto m = fam.find(h, colors);
  if (m) {
    v.reject = true;
    v.witness_checked = fam.witness_valid(m->witness, g, colors);
    v.match = std::move(m);
  }
  return v;
}

inline Subgraph whole_graph_view(const Graph& g) {
  Subgraph whole;
  for (int v = 0; v < g.vertex_count(); ++v) {
    whole.add_vertex(v);
    whole.roots.insert(v);
  }
  for (auto [u, w] : g.edges()) whole.add_edge(u, w);
  return whole;
}

}  // namespace detail

// One run of the canonical query tester: sample q' start vertices uniformly
// (plus, in the neighbor/edge model, the endpoints of q' uniform edges, and
// any roots the family pins), run an independent q'-radius exploration from
// each, and reject exactly when the union of the explored subgraphs
// contains a forbidden structure. Rejections carry a revalidated witness,
// so the tester never rejects a graph that satisfies the property.
inline Verdict canonical_test(const Graph& g, const ForbiddenFamily& fam,
                              const TesterParams& p, std::uint64_t seed,
                              const std::map<int, int>* colors = nullptr) {
  const int q = p.effective_q();
  QueryOracle oracle(g, derive_seed(seed, 0));
  std::vector<int> roots;
  for (int i = 0; i < q; ++i) roots.push_back(oracle.random_vertex());
  if (p.mode == OracleMode::kNeighborEdge && g.edge_count() > 0) {
    for (int i = 0; i < q; ++i) {
      auto [a, b] = oracle.random_edge();
      roots.push_back(a);
      roots.push_back(b);
    }
  }
  for (int r : fam.pinned_roots()) {
    g.check_vertex(r);
    roots.push_back(r);
  }
  Subgraph h;
  for (int r : roots) h.merge(random_bfs(oracle, r, q).to_subgraph());
  Transcript t;
  t.queries = oracle.query_count();
  t.roots = roots;
  return detail::decide(h, fam, g, colors, std::move(t));
}

// One run of the streaming tester on a given edge order. Small graphs
// (n <= n0) are stored verbatim and decided exactly; otherwise `samples`
// start vertices are drawn uniformly (plus pinned roots), their bounded
// neighborhoods are collected in a single pass, and the union is scanned
// for forbidden structures, with the same certified-rejection guarantee as
// the query tester.
inline Verdict stream_test_on(const StreamOrder& order,
                              const ForbiddenFamily& fam,
                              const TesterParams& p, std::uint64_t seed,
                              CollectorPool* pool = nullptr,
                              const std::map<int, int>* colors = nullptr) {
  const Graph& g = *order.graph;
  const int n = g.vertex_count();
  if (p.n0 > 0 && n <= p.n0) {
    Transcript t;
    t.exact_path = true;
    t.reserved_words = static_cast<std::size_t>(n) +
                       static_cast<std::size_t>(g.edge_count());
    t.used_words = t.reserved_words;
    return detail::decide(detail::whole_graph_view(g), fam, g, colors,
                          std::move(t));
  }
  if (n == 0) throw EmptyGraph();
  const int q = p.effective_q();
  Rng rng(derive_seed(seed, 2));
  std::vector<int> roots;
  roots.reserve(static_cast<std::size_t>(p.samples));
  for (int i = 0; i < p.samples; ++i)
    roots.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
  for (int r : fam.pinned_roots()) {
    g.check_vertex(r);
    roots.push_back(r);
  }
  std::optional<CollectorPool> local;
  if (!pool) local.emplace(q, roots.size());
  CollectorPool& bank = pool ? *pool : *local;
  auto discs = bank.run(order, roots);
  Subgraph h;
  for (const auto& d : discs) h.merge(d.to_subgraph());
  Transcript t;
  t.roots = roots;
  t.reserved_words = bank.reserved_words(roots.size());
  t.used_words = bank.last_used_words();
  t.growth_events = bank.growth_events();
  return detail::decide(h, fam, g, colors, std::move(t));
}

// Streaming tester over a fresh uniformly random edge order derived from
// the seed.
inline Verdict stream_test(const Graph& g, const ForbiddenFamily& fam,
                           const TesterParams& p, std::uint64_t seed,
                           CollectorPool* pool = nullptr,
                           const std::map<int, int>* colors = nullptr) {
  if (p.n0 > 0 && g.vertex_count() <= p.n0) {
    // Decided exactly; no order needed.
    StreamOrder order = StreamOrder::as_given(g);
    return stream_test_on(order, fam, p, seed, pool, colors);
  }
  StreamOrder order = StreamOrder::uniform(g, derive_seed(seed, 1));
  return stream_test_on(order, fam, p, seed, pool, colors);
}

}  // namespace discprobe
