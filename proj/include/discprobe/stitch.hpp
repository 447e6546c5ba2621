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
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "discprobe/disc.hpp"
#include "discprobe/errors.hpp"
#include "discprobe/graph.hpp"
#include "discprobe/rbfs.hpp"

namespace discprobe {

// Glues a multiset of rooted colored parts into one multi-rooted graph:
// take the disjoint union, then identify all vertices that carry the same
// color. Colors are exact labels here — parts meant to stitch together must
// share one palette. Within a single part every color may appear at most
// once. Merged vertices come first in the output (ascending by color),
// followed by the uncolored vertices of each part in input order.
inline RootedGraph stitch(const std::vector<RootedGraph>& parts) {
  if (parts.empty()) throw InvalidParameter("stitch requires at least one part");
  std::set<int> palette;
  for (const auto& p : parts) {
    if (p.n < 1) throw InvalidParameter("stitch part must be non-empty");
    std::set<int> seen;
    for (int v = 0; v < p.n; ++v) {
      int c = p.colors.empty() ? RootedGraph::kUncolored
                               : p.colors[static_cast<std::size_t>(v)];
      if (c == RootedGraph::kUncolored) continue;
      if (!seen.insert(c).second) throw ColorRepeatedWithinDisc(c);
      palette.insert(c);
    }
  }
  std::map<int, int> color_to_id;
  int next = 0;
  for (int c : palette) color_to_id[c] = next++;
  std::vector<std::vector<int>> image(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& p = parts[i];
    image[i].assign(static_cast<std::size_t>(p.n), -1);
    for (int v = 0; v < p.n; ++v) {
      int c = p.colors.empty() ? RootedGraph::kUncolored
                               : p.colors[static_cast<std::size_t>(v)];
      image[i][static_cast<std::size_t>(v)] =
          c == RootedGraph::kUncolored ? next++ : color_to_id[c];
    }
  }
  RootedGraph out;
  out.n = next;
  if (!palette.empty()) {
    out.colors.assign(static_cast<std::size_t>(next), RootedGraph::kUncolored);
    for (auto [c, id] : color_to_id)
      out.colors[static_cast<std::size_t>(id)] = c;
  }
  std::set<VertexPair> edge_set;
  std::set<int> root_set;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (auto [u, v] : parts[i].edges)
      edge_set.insert(norm_edge(image[i][static_cast<std::size_t>(u)],
                                image[i][static_cast<std::size_t>(v)]));
    for (int r : parts[i].roots)
      root_set.insert(image[i][static_cast<std::size_t>(r)]);
  }
  out.edges.assign(edge_set.begin(), edge_set.end());
  out.roots.assign(root_set.begin(), root_set.end());
  out.normalize();
  return out;
}

// One way of splitting a configuration into rooted parts, each within the
// structural envelope of a radius-q exploration. Parts use local vertex ids
// and keep the configuration's exact colors, so stitching them reproduces
// the configuration.
struct Decomposition {
  std::vector<RootedGraph> parts;
  std::vector<CanonicalCode> part_codes;  // exact-color codes, sorted
};

namespace detail {

// Checks one candidate part: edge set plus its owning root. The part must
// be connected through its root, fit in radius q with at most q^i vertices
// at distance i and at most q * c_{q-1} edges, and repeat no color.
inline bool part_within_envelope(const std::vector<VertexPair>& edges, int root,
                                 int q, const std::vector<int>& colors) {
  std::map<int, std::vector<int>> adj;
  adj[root];
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  if (edges.size() > static_cast<std::size_t>(q) *
                         static_cast<std::size_t>(breadth_bound(q, q - 1)))
    return false;
  std::map<int, int> depth{{root, 0}};
  std::deque<int> queue{root};
  std::vector<std::size_t> per_depth{1};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : adj[u]) {
      if (depth.count(v)) continue;
      depth[v] = depth[u] + 1;
      if (depth[v] > q) return false;
      if (per_depth.size() <= static_cast<std::size_t>(depth[v]))
        per_depth.resize(static_cast<std::size_t>(depth[v]) + 1, 0);
      ++per_depth[static_cast<std::size_t>(depth[v])];
      queue.push_back(v);
    }
  }
  if (depth.size() != adj.size()) return false;  // disconnected from root
  std::uint64_t cap = 1;
  for (std::size_t i = 1; i < per_depth.size(); ++i) {
    cap = std::min<std::uint64_t>(cap * static_cast<std::uint64_t>(q), 1ULL << 40);
    if (per_depth[i] > cap) return false;
  }
  std::set<int> seen;
  for (const auto& [v, d] : depth) {
    int c = colors.empty() ? RootedGraph::kUncolored
                           : colors[static_cast<std::size_t>(v)];
    if (c != RootedGraph::kUncolored && !seen.insert(c).second) return false;
  }
  return true;
}

}  // namespace detail

// Enumerates every way to split a configuration's edges among its roots so
// that each root's share is a valid radius-q part, every vertex is covered,
// and every vertex landing in two or more parts is colored (otherwise the
// copies could never be re-identified). Results are deduplicated as
// multisets of part types under exact colors. The configuration's coloring
// must be injective. Exhaustive over k^m assignments, guarded.
inline std::vector<Decomposition> decompose(const RootedGraph& f, int q,
                                            std::uint64_t state_guard = 2000000) {
  if (q < 1) throw InvalidParameter("decompose requires q >= 1");
  RootedGraph g = f;
  g.normalize();
  if (g.n < 1) throw InvalidParameter("empty configuration");
  if (g.n > 16) throw DiscTooLarge(g.n, 16);
  if (g.roots.empty()) throw NotDecomposable("configuration has no roots");
  std::set<int> palette;
  for (int v = 0; v < g.n; ++v) {
    int c = g.colors.empty() ? RootedGraph::kUncolored
                             : g.colors[static_cast<std::size_t>(v)];
    if (c == RootedGraph::kUncolored) continue;
    if (!palette.insert(c).second)
      throw NotDecomposable("coloring must be injective");
  }
  std::vector<int> deg(static_cast<std::size_t>(g.n), 0);
  for (auto [u, v] : g.edges) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  std::set<int> root_set(g.roots.begin(), g.roots.end());
  for (int v = 0; v < g.n; ++v)
    if (deg[static_cast<std::size_t>(v)] == 0 && !root_set.count(v))
      throw NotDecomposable("isolated non-root vertex cannot be covered");

  const std::size_t k = g.roots.size();
  const std::size_t m = g.edges.size();
  std::uint64_t states = 1;
  for (std::size_t i = 0; i < m; ++i) {
    states *= k;
    if (states > state_guard) throw StateSpaceTooLarge(states, state_guard);
  }

  std::map<std::vector<CanonicalCode>, Decomposition> found;
  std::vector<std::size_t> assign(m, 0);
  while (true) {
    // Gather each root's edge share.
    std::vector<std::vector<VertexPair>> share(k);
    for (std::size_t e = 0; e < m; ++e) share[assign[e]].push_back(g.edges[e]);
    bool ok = true;
    std::vector<int> containing(static_cast<std::size_t>(g.n), 0);
    for (std::size_t j = 0; j < k && ok; ++j) {
      if (!detail::part_within_envelope(share[j], g.roots[j], q, g.colors)) {
        ok = false;
        break;
      }
      std::set<int> members{g.roots[j]};
      for (auto [u, v] : share[j]) {
        members.insert(u);
        members.insert(v);
      }
      for (int v : members) ++containing[static_cast<std::size_t>(v)];
    }
    if (ok) {
      for (int v = 0; v < g.n && ok; ++v) {
        if (containing[static_cast<std::size_t>(v)] == 0) ok = false;
        if (containing[static_cast<std::size_t>(v)] >= 2) {
          int c = g.colors.empty() ? RootedGraph::kUncolored
                                   : g.colors[static_cast<std::size_t>(v)];
          if (c == RootedGraph::kUncolored) ok = false;
        }
      }
    }
    if (ok) {
      Decomposition d;
      for (std::size_t j = 0; j < k; ++j) {
        std::set<int> members{g.roots[j]};
        for (auto [u, v] : share[j]) {
          members.insert(u);
          members.insert(v);
        }
        std::vector<int> ambient(members.begin(), members.end());
        std::map<int, int> local;
        for (std::size_t i = 0; i < ambient.size(); ++i)
          local[ambient[i]] = static_cast<int>(i);
        RootedGraph part;
        part.n = static_cast<int>(ambient.size());
        part.roots = {local[g.roots[j]]};
        for (auto [u, v] : share[j])
          part.edges.push_back(norm_edge(local[u], local[v]));
        if (!g.colors.empty()) {
          part.colors.assign(ambient.size(), RootedGraph::kUncolored);
          for (std::size_t i = 0; i < ambient.size(); ++i)
            part.colors[i] = g.colors[static_cast<std::size_t>(ambient[i])];
        }
        part.normalize();
        d.parts.push_back(std::move(part));
      }
      for (const auto& p : d.parts)
        d.part_codes.push_back(canonical_code(p, ColorMode::kExact));
      // Order parts by their codes so equal multisets compare equal.
      std::vector<std::size_t> order(k);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return d.part_codes[a] < d.part_codes[b];
      });
      Decomposition sorted;
      for (std::size_t i : order) {
        sorted.parts.push_back(std::move(d.parts[i]));
        sorted.part_codes.push_back(std::move(d.part_codes[i]));
      }
      auto key = sorted.part_codes;
      found.emplace(std::move(key), std::move(sorted));
    }
    // Next assignment (odometer).
    std::size_t pos = 0;
    while (pos < m) {
      if (++assign[pos] < k) break;
      assign[pos] = 0;
      ++pos;
    }
    if (pos == m) break;
  }

  std::vector<Decomposition> out;
  out.reserve(found.size());
  for (auto& [codes, d] : found) out.push_back(std::move(d));
  return out;
}

}  // namespace discprobe
