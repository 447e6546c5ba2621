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
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "discprobe/errors.hpp"
#include "discprobe/graph.hpp"

namespace discprobe {

// Identity of a disc as a concrete subgraph of the ambient graph: its sorted
// vertex list and sorted normalized edge list. Two runs that explore the same
// vertices and edges produce equal keys regardless of discovery order.
using DiscKey = std::pair<std::vector<int>, std::vector<VertexPair>>;

// A bounded disc: rooted connected subgraph returned by the random BFS or by
// the stream collector, over ambient vertex ids, with per-vertex distance
// labels and an optional partial coloring.
struct Disc {
  int root = 0;
  std::vector<int> vertices;        // sorted ambient ids, includes root
  std::vector<VertexPair> edges;    // sorted, normalized, deduplicated
  std::map<int, int> depth;         // ambient id -> distance label from root
  std::map<int, int> colors;        // ambient id -> color (partial)

  DiscKey key() const { return {vertices, edges}; }

  int radius() const {
    int r = 0;
    for (const auto& [v, d] : depth) r = std::max(r, d);
    return r;
  }

  Subgraph to_subgraph() const {
    Subgraph s;
    s.roots.insert(root);
    for (int v : vertices) s.add_vertex(v);
    for (auto [u, v] : edges) s.add_edge(u, v);
    return s;
  }

  // Applies a coloring of the ambient graph, keeping only colors of vertices
  // present in this disc.
  void apply_coloring(const std::map<int, int>& ambient_colors) {
    colors.clear();
    for (int v : vertices) {
      auto it = ambient_colors.find(v);
      if (it != ambient_colors.end()) colors[v] = it->second;
    }
  }
};

// Dense local representation of a rooted, partially colored graph: vertices
// are 0..n-1, roots is a sorted set of local ids, colors[v] is kUncolored or
// a non-negative color id. This is the input shape for canonicalization,
// pattern matching, and decomposition.
struct RootedGraph {
  static constexpr int kUncolored = -1;

  int n = 0;
  std::vector<VertexPair> edges;  // normalized local pairs, sorted
  std::vector<int> roots;         // sorted, distinct local ids
  std::vector<int> colors;        // size n; kUncolored where absent

  void normalize() {
    for (auto& e : edges) e = norm_edge(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    if (colors.empty()) colors.assign(static_cast<std::size_t>(n), kUncolored);
  }

  bool has_edge(int u, int v) const {
    return std::binary_search(edges.begin(), edges.end(), norm_edge(u, v));
  }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
  }

  // Relabels vertices by permutation perm (new id of old vertex v is
  // perm[v]); roots, colors and edges follow.
  RootedGraph relabeled(const std::vector<int>& perm) const {
    RootedGraph out;
    out.n = n;
    out.colors.assign(static_cast<std::size_t>(n), kUncolored);
    for (int v = 0; v < n; ++v)
      out.colors[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] =
          colors[static_cast<std::size_t>(v)];
    for (auto [u, v] : edges)
      out.edges.push_back(norm_edge(perm[static_cast<std::size_t>(u)],
                                    perm[static_cast<std::size_t>(v)]));
    for (int r : roots)
      out.roots.push_back(perm[static_cast<std::size_t>(r)]);
    out.normalize();
    return out;
  }
};

// Converts an ambient disc to a dense local rooted graph. Local ids follow
// the sorted order of ambient ids.
inline RootedGraph to_rooted_graph(const Disc& d) {
  RootedGraph g;
  g.n = static_cast<int>(d.vertices.size());
  g.colors.assign(static_cast<std::size_t>(g.n), RootedGraph::kUncolored);
  std::map<int, int> local;
  for (int i = 0; i < g.n; ++i)
    local[d.vertices[static_cast<std::size_t>(i)]] = i;
  for (auto [u, v] : d.edges) g.edges.push_back(norm_edge(local[u], local[v]));
  g.roots.push_back(local.at(d.root));
  for (const auto& [v, c] : d.colors) g.colors[static_cast<std::size_t>(local.at(v))] = c;
  g.normalize();
  return g;
}

inline RootedGraph to_rooted_graph(const Subgraph& s) {
  RootedGraph g;
  g.n = static_cast<int>(s.vertices.size());
  g.colors.assign(static_cast<std::size_t>(g.n), RootedGraph::kUncolored);
  std::map<int, int> local;
  int next = 0;
  for (int v : s.vertices) local[v] = next++;
  for (auto [u, v] : s.edges) g.edges.push_back(norm_edge(local[u], local[v]));
  for (int r : s.roots) g.roots.push_back(local.at(r));
  g.normalize();
  return g;
}

// How vertex colors enter isomorphism:
//  - kPartition: an isomorphism maps colored vertices to colored vertices
//    and preserves equality/inequality of colors, but not the color values
//    themselves. This is the equivalence that defines disc types.
//  - kExact: color values must match exactly. Used where a multiset of discs
//    shares one palette and the values carry cross-disc identity (stitching).
enum class ColorMode { kPartition, kExact };

using CanonicalCode = std::vector<std::uint8_t>;

namespace detail {

// Appends a big-endian 32-bit field.
inline void put_u32(CanonicalCode& code, std::uint32_t x) {
  code.push_back(static_cast<std::uint8_t>(x >> 24));
  code.push_back(static_cast<std::uint8_t>(x >> 16));
  code.push_back(static_cast<std::uint8_t>(x >> 8));
  code.push_back(static_cast<std::uint8_t>(x));
}

// Backtracking search for the lexicographically minimal encoding over all
// vertex orderings that place the roots first (in any order among
// themselves). The per-position block is: 4 bytes of color field, one byte of
// vertex degree, the sorted neighbor degrees (one byte each), then one byte
// per earlier position, 0 where an edge to that position exists and 1 where
// it does not.
//
// Every block field is isomorphism-invariant, so the minimum over orderings
// is constant on isomorphism classes, and the adjacency indicators alone
// reconstruct the graph, so equal codes imply isomorphism. The degree
// signatures exist purely to make the search tractable: without them,
// vertices that differ only through their unplaced neighborhoods produce
// byte-identical prefixes, and equal prefixes must all be explored, which
// turns sparse inputs factorial. The edge-bit inversion serves the same end:
// the minimal ordering prefers vertices adjacent to the placed prefix, so on
// connected inputs ties collapse to genuine symmetries instead of orderings
// of an independent set. Prefixes that exceed the best known code are cut.
//
// Worst-case cost remains factorial for adversarially symmetric inputs,
// which is why the vertex cap exists.
class MinCodeSearch {
 public:
  MinCodeSearch(const RootedGraph& g, ColorMode mode)
      : g_(g), mode_(mode), r_(static_cast<int>(g.roots.size())) {
    adj_.assign(static_cast<std::size_t>(g.n), 0);
    for (auto [u, v] : g.edges) {
      adj_[static_cast<std::size_t>(u)] |= 1u << v;
      adj_[static_cast<std::size_t>(v)] |= 1u << u;
    }
    is_root_.assign(static_cast<std::size_t>(g.n), false);
    for (int r : g.roots) is_root_[static_cast<std::size_t>(r)] = true;
    deg_.assign(static_cast<std::size_t>(g.n), 0);
    for (int v = 0; v < g.n; ++v)
      deg_[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(
          std::popcount(adj_[static_cast<std::size_t>(v)]));
    nbr_degs_.assign(static_cast<std::size_t>(g.n), {});
    for (int v = 0; v < g.n; ++v) {
      auto& ds = nbr_degs_[static_cast<std::size_t>(v)];
      for (std::uint32_t m = adj_[static_cast<std::size_t>(v)]; m != 0;
           m &= m - 1)
        ds.push_back(deg_[static_cast<std::size_t>(std::countr_zero(m))]);
      std::sort(ds.begin(), ds.end());
    }
    block_lo_.assign(static_cast<std::size_t>(g.n), {});
    block_tmp_.assign(static_cast<std::size_t>(g.n), {});
  }

  CanonicalCode run() {
    placed_.clear();
    used_.assign(static_cast<std::size_t>(g_.n), false);
    current_.clear();
    best_.clear();
    color_slot_.clear();
    place(0);
    CanonicalCode code;
    code.push_back(static_cast<std::uint8_t>(g_.n));
    code.push_back(static_cast<std::uint8_t>(r_));
    code.insert(code.end(), best_.begin(), best_.end());
    return code;
  }

 private:
  // Color field for vertex v given the colored vertices placed so far.
  // kExact: the absolute value + 1 (0 means uncolored).
  // kPartition: 1 + index of v's color in order of first appearance among
  // placed colored vertices, so codes are invariant under color renaming.
  std::uint32_t color_field(int v) const {
    int c = g_.colors[static_cast<std::size_t>(v)];
    if (c == RootedGraph::kUncolored) return 0;
    if (mode_ == ColorMode::kExact)
      return static_cast<std::uint32_t>(c) + 1;
    for (std::size_t i = 0; i < color_slot_.size(); ++i)
      if (color_slot_[i] == c) return static_cast<std::uint32_t>(i) + 1;
    return static_cast<std::uint32_t>(color_slot_.size()) + 1;
  }

  // Fills block with v's encoding block for the current placed prefix.
  void build_block(int v, int pos, CanonicalCode& block) const {
    block.clear();
    put_u32(block, color_field(v));
    block.push_back(deg_[static_cast<std::size_t>(v)]);
    block.insert(block.end(), nbr_degs_[static_cast<std::size_t>(v)].begin(),
                 nbr_degs_[static_cast<std::size_t>(v)].end());
    for (int j = 0; j < pos; ++j)
      block.push_back(
          (adj_[static_cast<std::size_t>(v)] >> placed_[static_cast<std::size_t>(j)]) & 1u
              ? 0
              : 1);
  }

  // Expands the node for the current placed prefix. Only children whose block
  // equals the minimal candidate block are descended into: a smaller next
  // block always wins the lexicographic comparison no matter the suffix
  // (blocks at one node are never strict prefixes of each other because a
  // length difference implies a degree-byte difference first), so the overall
  // minimum lives below a minimal block. Ties are explored exhaustively and
  // resolve at deeper positions. No state is carried between nodes, so an
  // improvement to best_ deep in one subtree can never leave a sibling
  // subtree running with an outdated pruning decision.
  void place(int pos) {
    if (pos == g_.n) {
      if (best_.empty() || current_ < best_) best_ = current_;
      return;
    }
    int tied[16];
    int ntied = 0;
    int tried[16];
    int ntried = 0;
    CanonicalCode& low = block_lo_[static_cast<std::size_t>(pos)];
    CanonicalCode& scratch = block_tmp_[static_cast<std::size_t>(pos)];
    for (int v = 0; v < g_.n; ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      if ((pos < r_) != is_root_[static_cast<std::size_t>(v)]) continue;

      // Skip candidates interchangeable with one already considered here:
      // equal color and identical adjacency outside the pair make the
      // transposition an automorphism fixing every placed vertex, so this
      // branch could only repeat encodings the earlier branch produces.
      // Collapses stars, cliques and other homogeneous regions.
      bool duplicate = false;
      for (int k = 0; k < ntried && !duplicate; ++k) {
        int u = tried[k];
        if (g_.colors[static_cast<std::size_t>(u)] !=
            g_.colors[static_cast<std::size_t>(v)])
          continue;
        std::uint32_t diff =
            adj_[static_cast<std::size_t>(u)] ^ adj_[static_cast<std::size_t>(v)];
        diff &= ~((1u << u) | (1u << v));
        duplicate = diff == 0;
      }
      if (duplicate) continue;
      tried[ntried++] = v;

      build_block(v, pos, scratch);
      if (ntied == 0 || scratch < low) {
        low.swap(scratch);
        tied[0] = v;
        ntied = 1;
      } else if (scratch == low) {
        tied[ntied++] = v;
      }
    }

    // Against an established full encoding that shares our prefix, a larger
    // minimal block loses outright, so the whole node can be cut. The check
    // is recomputed from scratch at every node, which keeps it valid however
    // best_ moved since the ancestors were expanded.
    std::size_t cur = current_.size();
    if (!best_.empty() &&
        std::equal(current_.begin(), current_.end(), best_.begin())) {
      bool greater = false;
      for (std::size_t i = 0; i < low.size(); ++i) {
        std::uint8_t b = best_[cur + i];
        if (low[i] != b) {
          greater = low[i] > b;
          break;
        }
      }
      if (greater) return;
    }

    for (int k = 0; k < ntied; ++k) {
      int v = tied[k];
      current_.insert(current_.end(), low.begin(), low.end());
      int c = g_.colors[static_cast<std::size_t>(v)];
      bool new_color = false;
      if (mode_ == ColorMode::kPartition && c != RootedGraph::kUncolored &&
          std::find(color_slot_.begin(), color_slot_.end(), c) ==
              color_slot_.end()) {
        color_slot_.push_back(c);
        new_color = true;
      }
      used_[static_cast<std::size_t>(v)] = true;
      placed_.push_back(v);
      place(pos + 1);
      placed_.pop_back();
      used_[static_cast<std::size_t>(v)] = false;
      if (new_color) color_slot_.pop_back();
      current_.resize(cur);
    }
  }

  const RootedGraph& g_;
  ColorMode mode_;
  int r_;
  std::vector<std::uint32_t> adj_;  // bitmask adjacency (n <= 16 guaranteed)
  std::vector<std::uint8_t> deg_;
  std::vector<std::vector<std::uint8_t>> nbr_degs_;  // sorted, per vertex
  std::vector<bool> is_root_;
  std::vector<int> placed_;
  std::vector<bool> used_;
  CanonicalCode current_;
  CanonicalCode best_;
  std::vector<CanonicalCode> block_lo_;   // per-depth minimal-block scratch
  std::vector<CanonicalCode> block_tmp_;  // per-depth candidate scratch
  std::vector<int> color_slot_;  // first-appearance order of color values
};

}  // namespace detail

inline constexpr int kCanonicalCap = 16;

// Canonical byte code of a rooted colored graph: equal codes iff the graphs
// are root- and color-preserving isomorphic (in the chosen color mode).
// Roots are interchangeable as a set; vertices beyond kCanonicalCap are
// rejected because the search is brute force.
inline CanonicalCode canonical_code(const RootedGraph& g,
                                    ColorMode mode = ColorMode::kPartition) {
  if (g.n > kCanonicalCap) throw DiscTooLarge(g.n, kCanonicalCap);
  if (g.n == 0) throw InvalidParameter("cannot canonicalize an empty graph");
  detail::MinCodeSearch search(g, mode);
  return search.run();
}

inline CanonicalCode canonical_code(const Disc& d,
                                    ColorMode mode = ColorMode::kPartition) {
  return canonical_code(to_rooted_graph(d), mode);
}

// Lowercase hex rendering used in JSON reports.
inline std::string code_hex(const CanonicalCode& code) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(code.size() * 2);
  for (std::uint8_t b : code) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

inline bool is_isomorphic(const RootedGraph& a, const RootedGraph& b,
                          ColorMode mode = ColorMode::kPartition) {
  if (a.n != b.n || a.edges.size() != b.edges.size() ||
      a.roots.size() != b.roots.size())
    return false;
  return canonical_code(a, mode) == canonical_code(b, mode);
}

inline bool is_isomorphic(const Disc& a, const Disc& b,
                          ColorMode mode = ColorMode::kPartition) {
  return is_isomorphic(to_rooted_graph(a), to_rooted_graph(b), mode);
}

// Reference implementation: explicit search over all vertex bijections that
// map roots onto roots. Independent of the canonical-code machinery; used by
// tests to certify it.
inline bool brute_force_isomorphic(const RootedGraph& a, const RootedGraph& b,
                                   ColorMode mode = ColorMode::kPartition) {
  if (a.n != b.n || a.edges.size() != b.edges.size() ||
      a.roots.size() != b.roots.size())
    return false;
  const int n = a.n;
  std::vector<bool> root_a(static_cast<std::size_t>(n), false);
  std::vector<bool> root_b(static_cast<std::size_t>(n), false);
  for (int r : a.roots) root_a[static_cast<std::size_t>(r)] = true;
  for (int r : b.roots) root_b[static_cast<std::size_t>(r)] = true;

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      int w = perm[static_cast<std::size_t>(v)];
      if (root_a[static_cast<std::size_t>(v)] != root_b[static_cast<std::size_t>(w)]) ok = false;
      int ca = a.colors[static_cast<std::size_t>(v)];
      int cb = b.colors[static_cast<std::size_t>(w)];
      if ((ca == RootedGraph::kUncolored) != (cb == RootedGraph::kUncolored))
        ok = false;
      if (ok && mode == ColorMode::kExact && ca != cb) ok = false;
    }
    if (ok && mode == ColorMode::kPartition) {
      // Colors must agree on equality: same color in a iff same color in b.
      for (int u = 0; u < n && ok; ++u) {
        for (int v = u + 1; v < n && ok; ++v) {
          int cu = a.colors[static_cast<std::size_t>(u)];
          int cv = a.colors[static_cast<std::size_t>(v)];
          if (cu == RootedGraph::kUncolored || cv == RootedGraph::kUncolored)
            continue;
          int du = b.colors[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])];
          int dv = b.colors[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])];
          if ((cu == cv) != (du == dv)) ok = false;
        }
      }
    }
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (a.has_edge(u, v) !=
            b.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
          ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace discprobe
