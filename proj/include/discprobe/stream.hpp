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
#include <numeric>
#include <optional>
#include <vector>

#include "discprobe/disc.hpp"
#include "discprobe/errors.hpp"
#include "discprobe/graph.hpp"
#include "discprobe/rng.hpp"

namespace discprobe {

// q^{2q}: the stream collector's per-vertex degree budget. Saturates far
// above any practical value instead of overflowing.
inline std::uint64_t degree_budget(int q) {
  std::uint64_t r = 1;
  for (int i = 0; i < 2 * q; ++i) {
    if (r > (1ULL << 40)) return 1ULL << 40;
    r *= static_cast<std::uint64_t>(q);
  }
  return r;
}

// c'_q = sum_{i=0}^{q+1} q^{2qi}: bound on the number of vertices a single
// stream collector can accumulate. Saturates.
inline std::uint64_t collector_vertex_bound(int q) {
  std::uint64_t total = 0, pw = 1;
  const std::uint64_t step = degree_budget(q);
  for (int i = 0; i <= q + 1; ++i) {
    total += pw;
    if (total > (1ULL << 40)) return 1ULL << 40;
    if (pw > (1ULL << 40)) return 1ULL << 40;
    pw *= step;
  }
  return total;
}

// A permutation of a graph's edge list: the input of all streaming
// procedures. When generated from a seed it is uniform over all m!
// permutations (Fisher-Yates); orders loaded from a file carry no seed.
struct StreamOrder {
  const Graph* graph = nullptr;
  std::vector<int> order;  // permutation of edge indices [0, m)
  std::optional<std::uint64_t> seed;

  static StreamOrder uniform(const Graph& g, std::uint64_t seed) {
    StreamOrder s;
    s.graph = &g;
    s.order.resize(static_cast<std::size_t>(g.edge_count()));
    std::iota(s.order.begin(), s.order.end(), 0);
    Rng rng(seed);
    rng.shuffle(s.order);
    s.seed = seed;
    return s;
  }

  static StreamOrder as_given(const Graph& g) {
    StreamOrder s;
    s.graph = &g;
    s.order.resize(static_cast<std::size_t>(g.edge_count()));
    std::iota(s.order.begin(), s.order.end(), 0);
    return s;
  }

  VertexPair edge_at(std::size_t pos) const {
    return graph->edges()[static_cast<std::size_t>(order[pos])];
  }

  std::size_t length() const { return order.size(); }
};

// Single-root stream collector state. Stores labels and degree counters only
// for collected vertices, in flat storage whose capacity is reserved up
// front as a function of q alone — never of n or m — so the memory footprint
// of a streaming run is a constant for fixed parameters. Should a run ever
// outgrow the reserved bound (the analysis says it cannot), storage doubles
// and the event is counted rather than hidden.
//
// Admission rule for an arriving edge (u, w): the edge must touch the
// collected set U, and at least one endpoint x in {u, w} that is already in
// U must satisfy l_x < q and d_x < q^{2q}. On admission both endpoints join
// U, both degree counters increment, and labels update sequentially by
// l_u <- min(l_u, l_w + 1), then l_w <- min(l_w, l_u + 1) using the updated
// l_u, with infinity saturating. The start vertex begins with l = 0; all
// other vertices are unlabeled (infinity) and carry degree counter 0 from
// the moment they are first stored.
class CollectorState {
 public:
  static constexpr std::uint32_t kInf = UINT32_MAX;

  explicit CollectorState(int q)
      : q_(q), budget_(degree_budget(q)) {
    if (q < 1) throw InvalidParameter("collector requires q >= 1");
    vertex_cap_ = static_cast<std::size_t>(
        std::min<std::uint64_t>(collector_vertex_bound(q), 8192));
    table_mask_ = table_size_for(vertex_cap_) - 1;
    edge_cap_ = static_cast<std::size_t>(std::min<std::uint64_t>(
        static_cast<std::uint64_t>(vertex_cap_) * budget_, 65536));
    ids_.resize(vertex_cap_);
    ell_.resize(vertex_cap_);
    deg_.resize(vertex_cap_);
    table_.assign(table_mask_ + 1, 0);
    edges_.resize(edge_cap_);
    reset(0);
  }

  // Re-arms the collector for a new pass, clearing only the entries the
  // previous pass touched.
  void reset(int root) {
    for (std::size_t pos : touched_) table_[pos] = 0;
    touched_.clear();
    size_ = 0;
    edge_count_ = 0;
    root_ = root;
    std::size_t slot = insert(root);
    ell_[slot] = 0;
  }

  int root() const { return root_; }

  // Offers the next stream edge; returns true iff it was admitted.
  bool offer(int u, int w) {
    long su = lookup(u);
    long sw = lookup(w);
    if (su < 0 && sw < 0) return false;  // does not touch U
    bool qual_u = su >= 0 && ell_[static_cast<std::size_t>(su)] < static_cast<std::uint32_t>(q_) &&
                  deg_[static_cast<std::size_t>(su)] < budget_;
    bool qual_w = sw >= 0 && ell_[static_cast<std::size_t>(sw)] < static_cast<std::uint32_t>(q_) &&
                  deg_[static_cast<std::size_t>(sw)] < budget_;
    if (!qual_u && !qual_w) return false;
    if (su < 0) su = static_cast<long>(insert(u));
    if (sw < 0) sw = static_cast<long>(insert(w));
    std::size_t a = static_cast<std::size_t>(su), b = static_cast<std::size_t>(sw);
    ++deg_[a];
    ++deg_[b];
    ell_[a] = std::min(ell_[a], saturating_inc(ell_[b]));
    ell_[b] = std::min(ell_[b], saturating_inc(ell_[a]));
    if (edge_count_ == edge_cap_) grow_edges();
    auto [x, y] = norm_edge(u, w);
    edges_[edge_count_++] = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) |
                            static_cast<std::uint32_t>(y);
    return true;
  }

  std::size_t collected_vertices() const { return size_; }
  std::size_t collected_edges() const { return edge_count_; }
  int growth_events() const { return growth_events_; }

  // Space accounting, in 8-byte words. Reserved words depend only on q (and
  // on growth events, which the analysis rules out); used words count the
  // entries a pass actually filled.
  std::size_t reserved_words() const {
    return 3 * vertex_cap_ + (table_mask_ + 1) + edge_cap_;
  }
  std::size_t used_words() const {
    return 3 * size_ + touched_.size() + edge_count_;
  }

  std::uint32_t label_of_slot(std::size_t i) const { return ell_[i]; }
  std::uint32_t degree_of_slot(std::size_t i) const { return deg_[i]; }

  Disc disc() const {
    Disc d;
    d.root = root_;
    for (std::size_t i = 0; i < size_; ++i) {
      d.vertices.push_back(ids_[i]);
      d.depth[ids_[i]] = static_cast<int>(ell_[i]);
    }
    std::sort(d.vertices.begin(), d.vertices.end());
    for (std::size_t i = 0; i < edge_count_; ++i) {
      int x = static_cast<int>(edges_[i] >> 32);
      int y = static_cast<int>(edges_[i] & 0xffffffffULL);
      d.edges.push_back({x, y});
    }
    std::sort(d.edges.begin(), d.edges.end());
    return d;
  }

 private:
  static std::size_t table_size_for(std::size_t vertex_cap) {
    std::size_t s = 8;
    while (s < 2 * vertex_cap) s <<= 1;
    return s;
  }

  static std::uint32_t saturating_inc(std::uint32_t x) {
    return x == kInf ? kInf : x + 1;
  }

  // Open-addressing lookup; returns slot index or -1.
  long lookup(int id) const {
    std::size_t pos = static_cast<std::size_t>(
        mix64(static_cast<std::uint64_t>(static_cast<std::uint32_t>(id)))) & table_mask_;
    while (true) {
      std::uint64_t entry = table_[pos];
      if (entry == 0) return -1;
      if (static_cast<std::uint32_t>(entry >> 32) ==
          static_cast<std::uint32_t>(id) + 1)
        return static_cast<long>(static_cast<std::uint32_t>(entry));
      pos = (pos + 1) & table_mask_;
    }
  }

  std::size_t insert(int id) {
    if (size_ == vertex_cap_) grow_vertices();
    std::size_t slot = size_++;
    ids_[slot] = id;
    ell_[slot] = kInf;
    deg_[slot] = 0;
    std::size_t pos = static_cast<std::size_t>(
        mix64(static_cast<std::uint64_t>(static_cast<std::uint32_t>(id)))) & table_mask_;
    while (table_[pos] != 0) pos = (pos + 1) & table_mask_;
    table_[pos] = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(id) + 1) << 32) |
                  static_cast<std::uint32_t>(slot);
    touched_.push_back(pos);
    return slot;
  }

  void grow_vertices() {
    ++growth_events_;
    vertex_cap_ *= 2;
    ids_.resize(vertex_cap_);
    ell_.resize(vertex_cap_);
    deg_.resize(vertex_cap_);
    table_mask_ = table_size_for(vertex_cap_) - 1;
    table_.assign(table_mask_ + 1, 0);
    touched_.clear();
    for (std::size_t slot = 0; slot < size_; ++slot) {
      std::size_t pos = static_cast<std::size_t>(mix64(
          static_cast<std::uint64_t>(static_cast<std::uint32_t>(ids_[slot])))) & table_mask_;
      while (table_[pos] != 0) pos = (pos + 1) & table_mask_;
      table_[pos] = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(ids_[slot]) + 1) << 32) |
                    static_cast<std::uint32_t>(slot);
      touched_.push_back(pos);
    }
  }

  void grow_edges() {
    ++growth_events_;
    edge_cap_ *= 2;
    edges_.resize(edge_cap_);
  }

  int q_;
  std::uint64_t budget_;
  int root_ = 0;
  std::size_t vertex_cap_ = 0, edge_cap_ = 0, table_mask_ = 0;
  std::size_t size_ = 0, edge_count_ = 0;
  int growth_events_ = 0;
  std::vector<int> ids_;
  std::vector<std::uint32_t> ell_, deg_;
  std::vector<std::uint64_t> table_;   // packed (id+1) << 32 | slot; 0 empty
  std::vector<std::uint64_t> edges_;   // packed normalized ambient pairs
  std::vector<std::size_t> touched_;   // table positions to clear on reset
};

// Reusable bank of collectors. Construction reserves all storage once;
// successive passes reset in O(previously used) time, so trial batteries do
// not pay the reservation cost per trial.
class CollectorPool {
 public:
  CollectorPool(int q, std::size_t count) {
    collectors_.reserve(count);
    for (std::size_t i = 0; i < count; ++i) collectors_.emplace_back(q);
  }

  std::size_t size() const { return collectors_.size(); }

  // One physical pass over the stream: every edge is offered to every
  // collector exactly once; collector states never interact, so the result
  // equals |roots| independent single-root passes over the same order.
  std::vector<Disc> run(const StreamOrder& s, const std::vector<int>& roots) {
    if (roots.empty()) throw InvalidParameter("multi_collect requires roots");
    if (roots.size() > collectors_.size())
      throw InvalidParameter("collector pool too small for root list");
    for (std::size_t i = 0; i < roots.size(); ++i) {
      s.graph->check_vertex(roots[i]);
      collectors_[i].reset(roots[i]);
    }
    const std::size_t m = s.length();
    for (std::size_t pos = 0; pos < m; ++pos) {
      auto [u, w] = s.edge_at(pos);
      for (std::size_t i = 0; i < roots.size(); ++i) collectors_[i].offer(u, w);
    }
    std::vector<Disc> out;
    out.reserve(roots.size());
    std::size_t used = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      out.push_back(collectors_[i].disc());
      used += collectors_[i].used_words();
    }
    last_used_words_ = used;
    return out;
  }

  std::size_t reserved_words(std::size_t active) const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < std::min(active, collectors_.size()); ++i)
      total += collectors_[i].reserved_words();
    return total;
  }

  std::size_t last_used_words() const { return last_used_words_; }

  int growth_events() const {
    int total = 0;
    for (const auto& c : collectors_) total += c.growth_events();
    return total;
  }

 private:
  std::vector<CollectorState> collectors_;
  std::size_t last_used_words_ = 0;
};

// Collects the bounded disc of one root from a random-order stream.
inline Disc stream_collect(const StreamOrder& s, int v, int q) {
  CollectorState c(q);
  c.reset(v);
  s.graph->check_vertex(v);
  for (std::size_t pos = 0; pos < s.length(); ++pos) {
    auto [u, w] = s.edge_at(pos);
    c.offer(u, w);
  }
  return c.disc();
}

// One-pass multi-root collection; semantically identical to independent
// stream_collect runs per root. Duplicate roots run as separate collectors.
inline std::vector<Disc> multi_collect(const StreamOrder& s,
                                       const std::vector<int>& roots, int q,
                                       CollectorPool* pool = nullptr) {
  if (pool) return pool->run(s, roots);
  CollectorPool local(q, roots.size());
  return local.run(s, roots);
}

}  // namespace discprobe
