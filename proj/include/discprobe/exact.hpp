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

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "discprobe/disc.hpp"
#include "discprobe/errors.hpp"
#include "discprobe/graph.hpp"
#include "discprobe/stream.hpp"

namespace discprobe {

// Formats an exact rational as "numerator/denominator", always with an
// explicit denominator.
inline std::string rational_str(const mpq_class& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

struct DiscProb {
  Disc disc;
  mpq_class prob;
};

namespace detail {

// Rebuilds a disc record (sorted members plus distances inside the
// collected subgraph) from raw vertex and edge sets. Kept local to the
// exact oracles on purpose: they must not lean on the sampling code paths
// they are meant to check.
inline Disc assemble_disc(int root, const std::set<int>& hv,
                          const std::set<VertexPair>& he) {
  Disc d;
  d.root = root;
  d.vertices.assign(hv.begin(), hv.end());
  d.edges.assign(he.begin(), he.end());
  std::map<int, std::vector<int>> adj;
  for (int v : hv) adj[v];
  for (auto [u, w] : he) {
    adj[u].push_back(w);
    adj[w].push_back(u);
  }
  std::deque<int> bfs{root};
  d.depth[root] = 0;
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop_front();
    for (int w : adj[u])
      if (!d.depth.count(w)) {
        d.depth[w] = d.depth[u] + 1;
        bfs.push_back(w);
      }
  }
  return d;
}

// Depth-first enumeration of every draw sequence the bounded exploration
// can make, with its exact probability. Mirrors the process definition —
// FIFO queue, q uniform neighbor draws per popped vertex, labels assigned
// only below q-1 — with mutate-and-undo state so the walk stays cheap.
class ExactExplorer {
 public:
  ExactExplorer(const Graph& g, int v, int q, std::uint64_t leaf_guard)
      : g_(g), q_(q), guard_(leaf_guard) {
    g.check_vertex(v);
    if (q < 1) throw InvalidParameter("exploration requires q >= 1");
    label_[v] = 0;
    queue_.push_back(v);
    hv_.insert(v);
    root_ = v;
  }

  std::map<DiscKey, mpq_class> run() {
    out_.clear();
    leaves_ = 0;
    step(mpq_class(1));
    return std::move(out_);
  }

 private:
  void step(const mpq_class& prob) {
    if (queue_.empty()) {
      if (++leaves_ > guard_) throw StateSpaceTooLarge(leaves_, guard_);
      DiscKey key{{hv_.begin(), hv_.end()}, {he_.begin(), he_.end()}};
      out_[key] += prob;
      return;
    }
    int u = queue_.front();
    queue_.pop_front();
    draw(u, 0, prob);
    queue_.push_front(u);
  }

  void draw(int u, int i, const mpq_class& prob) {
    if (i == q_) {
      step(prob);
      return;
    }
    const auto& nb = g_.neighbors(u);
    if (nb.empty()) {  // every remaining draw reports no neighbor
      step(prob);
      return;
    }
    mpq_class branch = prob / static_cast<int>(nb.size());
    for (int s : nb) {
      bool added_v = hv_.insert(s).second;
      bool added_e = he_.insert(norm_edge(u, s)).second;
      bool labeled = label_.at(u) < q_ - 1 && !label_.count(s);
      if (labeled) {
        label_[s] = label_[u] + 1;
        queue_.push_back(s);
      }
      draw(u, i + 1, branch);
      if (labeled) {
        queue_.pop_back();
        label_.erase(s);
      }
      if (added_e) he_.erase(norm_edge(u, s));
      if (added_v) hv_.erase(s);
    }
  }

  const Graph& g_;
  int q_, root_ = 0;
  std::uint64_t guard_, leaves_ = 0;
  std::map<int, int> label_;
  std::deque<int> queue_;
  std::set<int> hv_;
  std::set<VertexPair> he_;
  std::map<DiscKey, mpq_class> out_;
};

}  // namespace detail

// Exact distribution of the bounded exploration started at v: probability of
// producing each concrete disc, as exact rationals summing to 1.
inline std::map<DiscKey, mpq_class> exact_rbfs_distribution(
    const Graph& g, int v, int q, std::uint64_t leaf_guard = 1000000) {
  detail::ExactExplorer ex(g, v, q, leaf_guard);
  return ex.run();
}

// Same distribution with assembled disc records, sorted by key.
inline std::vector<DiscProb> exact_rbfs_oracle(const Graph& g, int v, int q,
                                               std::uint64_t leaf_guard = 1000000) {
  auto dist = exact_rbfs_distribution(g, v, q, leaf_guard);
  std::vector<DiscProb> out;
  out.reserve(dist.size());
  for (const auto& [key, p] : dist) {
    std::set<int> hv(key.first.begin(), key.first.end());
    std::set<VertexPair> he(key.second.begin(), key.second.end());
    out.push_back({detail::assemble_disc(v, hv, he), p});
  }
  return out;
}

// Exact probability that the exploration from a uniformly random start
// vertex reaches each target: r(t) = (1/n) * sum_u Pr[t in disc of u].
inline std::vector<mpq_class> exact_reach_all(const Graph& g, int q,
                                              std::uint64_t leaf_guard = 1000000) {
  const int n = g.vertex_count();
  if (n == 0) throw EmptyGraph();
  std::vector<mpq_class> reach(static_cast<std::size_t>(n), mpq_class(0));
  for (int u = 0; u < n; ++u) {
    auto dist = exact_rbfs_distribution(g, u, q, leaf_guard);
    for (const auto& [key, p] : dist)
      for (int t : key.first) reach[static_cast<std::size_t>(t)] += p;
  }
  for (auto& r : reach) r /= n;
  return reach;
}

inline mpq_class exact_reach_vertex(const Graph& g, int target, int q,
                                    std::uint64_t leaf_guard = 1000000) {
  g.check_vertex(target);
  return exact_reach_all(g, q, leaf_guard)[static_cast<std::size_t>(target)];
}

// Exact distribution of the single-root stream collector under a uniformly
// random edge order: enumerates all m! orders. Guarded by edge count.
inline std::map<DiscKey, mpq_class> exact_stream_distribution(const Graph& g,
                                                              int v, int q,
                                                              int edge_guard = 8) {
  g.check_vertex(v);
  const int m = g.edge_count();
  if (m > edge_guard) throw TooManyEdges(m, edge_guard);
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  mpz_class orders = 1;
  for (int i = 2; i <= m; ++i) orders *= i;
  mpq_class weight(mpz_class(1), orders);
  const auto& edges = g.edges();
  CollectorState c(q);
  std::map<DiscKey, mpq_class> out;
  do {
    c.reset(v);
    for (int idx : perm) {
      auto [a, b] = edges[static_cast<std::size_t>(idx)];
      c.offer(a, b);
    }
    Disc d = c.disc();
    out[d.key()] += weight;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Exact probability that the stream collector's output contains a given
// disc (all of its vertices and edges).
inline mpq_class exact_stream_contains(const Graph& g, int v, int q,
                                       const DiscKey& target,
                                       int edge_guard = 8) {
  auto dist = exact_stream_distribution(g, v, q, edge_guard);
  mpq_class total(0);
  for (const auto& [key, p] : dist) {
    bool verts = std::includes(key.first.begin(), key.first.end(),
                               target.first.begin(), target.first.end());
    bool edges = std::includes(key.second.begin(), key.second.end(),
                               target.second.begin(), target.second.end());
    if (verts && edges) total += p;
  }
  return total;
}

// One row of the query-versus-stream support comparison.
struct CstEntry {
  int root = 0;
  DiscKey key;
  mpq_class rbfs_prob;
  mpq_class stream_contain;
};

struct CstReport {
  std::vector<CstEntry> entries;
  mpq_class min_ratio;   // min over entries of stream_contain / rbfs_prob
  bool support_ok = true;  // every exploration-support disc has positive
                           // stream containment probability
};

// For every root and every disc the query exploration can produce, compares
// its exact probability against the exact probability that one streaming
// pass collects a superset of it.
inline CstReport verify_stream_lower_bound_exact(const Graph& g, int q,
                                                 std::uint64_t leaf_guard = 1000000,
                                                 int edge_guard = 8) {
  CstReport report;
  bool first = true;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto rbfs = exact_rbfs_distribution(g, v, q, leaf_guard);
    auto stream = exact_stream_distribution(g, v, q, edge_guard);
    for (const auto& [key, p] : rbfs) {
      if (p == 0) continue;
      mpq_class contain(0);
      for (const auto& [skey, sp] : stream) {
        bool verts = std::includes(skey.first.begin(), skey.first.end(),
                                   key.first.begin(), key.first.end());
        bool edges = std::includes(skey.second.begin(), skey.second.end(),
                                   key.second.begin(), key.second.end());
        if (verts && edges) contain += sp;
      }
      CstEntry e{v, key, p, contain};
      if (contain == 0) report.support_ok = false;
      mpq_class ratio = contain / p;
      if (first || ratio < report.min_ratio) {
        report.min_ratio = ratio;
        first = false;
      }
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

// Groups a concrete-disc distribution into disc types: probabilities of
// isomorphism classes under the given coloring and color semantics.
inline std::map<CanonicalCode, mpq_class> group_by_type(
    const std::map<DiscKey, mpq_class>& dist, int root,
    const std::map<int, int>* ambient_colors = nullptr,
    ColorMode mode = ColorMode::kPartition) {
  std::map<CanonicalCode, mpq_class> out;
  for (const auto& [key, p] : dist) {
    std::set<int> hv(key.first.begin(), key.first.end());
    std::set<VertexPair> he(key.second.begin(), key.second.end());
    Disc d = detail::assemble_disc(root, hv, he);
    if (ambient_colors) d.apply_coloring(*ambient_colors);
    out[canonical_code(d, mode)] += p;
  }
  return out;
}

}  // namespace discprobe
