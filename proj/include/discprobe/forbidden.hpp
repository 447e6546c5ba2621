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
#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "discprobe/disc.hpp"
#include "discprobe/errors.hpp"
#include "discprobe/graph.hpp"

namespace discprobe {

// Evidence that a collected subgraph contains a forbidden structure. All
// ids are ambient vertex ids, so a witness can be revalidated against the
// original graph independently of the run that produced it.
struct Witness {
  std::string kind;
  std::vector<int> vertices;      // ordered as the kind prescribes
  std::vector<VertexPair> edges;  // normalized ambient edges
};

struct Match {
  std::string pattern;  // family or pattern name that matched
  Witness witness;
};

enum class FamilyKind { kStDisconnectivity, kPkFree, kDBounded, kExplicit };

namespace detail {

inline std::map<int, std::vector<int>> adjacency_of(const Subgraph& h) {
  std::map<int, std::vector<int>> adj;
  for (int v : h.vertices) adj[v];
  for (auto [u, w] : h.edges) {
    adj[u].push_back(w);
    adj[w].push_back(u);
  }
  for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

}  // namespace detail

// A family of forbidden structures: the rejection rule of a one-sided
// tester. A detector scans a collected subgraph for a witness; testers
// reject exactly when one is found, so every rejection is certified.
//
// Built-in families:
//   st_disconnectivity(s, t, L): forbidden structure is a path from s to t
//     with at most L edges. Roots s and t are pinned: they are always added
//     to the sampled root set so the detector can meet both endpoints.
//   pk_free(k): forbidden structure is a simple path with exactly k edges.
//   d_bounded(d): forbidden structure is a vertex with d+1 distinct
//     incident edges.
//   explicit_patterns: forbidden structures given as rooted, optionally
//     colored graphs; a witness is an injective non-induced embedding whose
//     pattern roots land on collected roots. Colored pattern vertices match
//     only ambient vertices carrying exactly that color; with no ambient
//     coloring supplied they match nothing.
class ForbiddenFamily {
 public:
  static ForbiddenFamily st_disconnectivity(int s, int t, int max_len) {
    if (s == t) throw InvalidParameter("s and t must differ");
    if (max_len < 1) throw InvalidParameter("path length bound must be >= 1");
    ForbiddenFamily f;
    f.kind_ = FamilyKind::kStDisconnectivity;
    f.name_ = "st-disconnectivity";
    f.a_ = s;
    f.b_ = t;
    f.len_ = max_len;
    return f;
  }

  static ForbiddenFamily pk_free(int k) {
    if (k < 1) throw InvalidParameter("path edge count must be >= 1");
    ForbiddenFamily f;
    f.kind_ = FamilyKind::kPkFree;
    f.name_ = "pk-free";
    f.len_ = k;
    return f;
  }

  static ForbiddenFamily d_bounded(int d) {
    if (d < 0) throw InvalidParameter("degree bound must be >= 0");
    ForbiddenFamily f;
    f.kind_ = FamilyKind::kDBounded;
    f.name_ = "degree-bounded";
    f.deg_ = d;
    return f;
  }

  static ForbiddenFamily explicit_patterns(std::vector<RootedGraph> patterns,
                                           std::string name = "explicit") {
    if (patterns.empty()) throw InvalidParameter("empty pattern family");
    for (auto& p : patterns) {
      if (p.n < 1 || p.n > kMaxPatternVertices)
        throw PatternTooLarge(p.n, kMaxPatternVertices);
      p.normalize();
    }
    ForbiddenFamily f;
    f.kind_ = FamilyKind::kExplicit;
    f.name_ = std::move(name);
    f.patterns_ = std::move(patterns);
    return f;
  }

  FamilyKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::vector<RootedGraph>& patterns() const { return patterns_; }

  std::map<std::string, int> params() const {
    switch (kind_) {
      case FamilyKind::kStDisconnectivity:
        return {{"s", a_}, {"t", b_}, {"max_len", len_}};
      case FamilyKind::kPkFree:
        return {{"k", len_}};
      case FamilyKind::kDBounded:
        return {{"d", deg_}};
      case FamilyKind::kExplicit:
        return {{"patterns", static_cast<int>(patterns_.size())}};
    }
    return {};
  }

  // Roots every run must include regardless of sampling.
  std::vector<int> pinned_roots() const {
    if (kind_ == FamilyKind::kStDisconnectivity) return {a_, b_};
    return {};
  }

  // Scans a collected subgraph for a forbidden structure.
  std::optional<Match> find(const Subgraph& h,
                            const std::map<int, int>* ambient_colors = nullptr) const {
    switch (kind_) {
      case FamilyKind::kStDisconnectivity:
        return find_st_path(h);
      case FamilyKind::kPkFree:
        return find_simple_path(h);
      case FamilyKind::kDBounded:
        return find_high_degree(h);
      case FamilyKind::kExplicit:
        return find_embedding(h, ambient_colors);
    }
    return std::nullopt;
  }

  // Ground truth on a fully known graph: true iff g contains no forbidden
  // structure. Every vertex counts as a root.
  bool holds_exactly(const Graph& g,
                     const std::map<int, int>* ambient_colors = nullptr) const {
    Subgraph whole;
    for (int v = 0; v < g.vertex_count(); ++v) {
      whole.add_vertex(v);
      whole.roots.insert(v);
    }
    for (auto [u, w] : g.edges()) whole.add_edge(u, w);
    if (kind_ == FamilyKind::kStDisconnectivity) {
      g.check_vertex(a_);
      g.check_vertex(b_);
    }
    return !find(whole, ambient_colors).has_value();
  }

  // Revalidates a witness against the original graph (and coloring, when
  // the family is color-sensitive).
  bool witness_valid(const Witness& w, const Graph& g,
                     const std::map<int, int>* ambient_colors = nullptr) const {
    for (int v : w.vertices)
      if (v < 0 || v >= g.vertex_count()) return false;
    for (auto [u, v] : w.edges)
      if (!g.has_edge(u, v)) return false;
    switch (kind_) {
      case FamilyKind::kStDisconnectivity:
        return valid_path(w, g, true);
      case FamilyKind::kPkFree:
        return valid_path(w, g, false);
      case FamilyKind::kDBounded: {
        if (w.vertices.empty()) return false;
        int center = w.vertices[0];
        std::set<int> partners;
        for (auto [u, v] : w.edges) {
          if (u != center && v != center) return false;
          partners.insert(u == center ? v : u);
        }
        return static_cast<int>(partners.size()) >= deg_ + 1;
      }
      case FamilyKind::kExplicit:
        return valid_embedding(w, g, ambient_colors);
    }
    return false;
  }

 private:
  static constexpr int kMaxPatternVertices = 12;

  std::optional<Match> find_st_path(const Subgraph& h) const {
    if (!h.vertices.count(a_) || !h.vertices.count(b_)) return std::nullopt;
    auto adj = detail::adjacency_of(h);
    std::map<int, int> parent;
    std::map<int, int> dist;
    std::deque<int> queue{a_};
    dist[a_] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      if (u == b_) break;
      if (dist[u] == len_) continue;
      for (int v : adj[u]) {
        if (dist.count(v)) continue;
        dist[v] = dist[u] + 1;
        parent[v] = u;
        queue.push_back(v);
      }
    }
    if (!dist.count(b_) || dist[b_] > len_) return std::nullopt;
    Witness w;
    w.kind = "st-path";
    for (int v = b_; v != a_; v = parent[v]) w.vertices.push_back(v);
    w.vertices.push_back(a_);
    std::reverse(w.vertices.begin(), w.vertices.end());
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
      w.edges.push_back(norm_edge(w.vertices[i], w.vertices[i + 1]));
    return Match{name_, std::move(w)};
  }

  std::optional<Match> find_simple_path(const Subgraph& h) const {
    auto adj = detail::adjacency_of(h);
    std::vector<int> path;
    std::set<int> on_path;
    std::optional<Witness> hit;
    auto dfs = [&](auto&& self, int u) -> bool {
      if (static_cast<int>(path.size()) == len_ + 1) {
        Witness w;
        w.kind = "simple-path";
        w.vertices = path;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
          w.edges.push_back(norm_edge(path[i], path[i + 1]));
        hit = std::move(w);
        return true;
      }
      for (int v : adj[u]) {
        if (on_path.count(v)) continue;
        path.push_back(v);
        on_path.insert(v);
        if (self(self, v)) return true;
        on_path.erase(v);
        path.pop_back();
      }
      return false;
    };
    for (int s : h.vertices) {
      path = {s};
      on_path = {s};
      if (dfs(dfs, s)) return Match{name_, std::move(*hit)};
    }
    return std::nullopt;
  }

  std::optional<Match> find_high_degree(const Subgraph& h) const {
    auto adj = detail::adjacency_of(h);
    for (const auto& [v, nb] : adj) {
      if (static_cast<int>(nb.size()) >= deg_ + 1) {
        Witness w;
        w.kind = "high-degree-vertex";
        w.vertices.push_back(v);
        for (int i = 0; i <= deg_; ++i) {
          w.vertices.push_back(nb[static_cast<std::size_t>(i)]);
          w.edges.push_back(norm_edge(v, nb[static_cast<std::size_t>(i)]));
        }
        return Match{name_, std::move(w)};
      }
    }
    return std::nullopt;
  }

  std::optional<Match> find_embedding(const Subgraph& h,
                                      const std::map<int, int>* colors) const {
    auto adj = detail::adjacency_of(h);
    std::vector<int> hv(h.vertices.begin(), h.vertices.end());
    std::vector<int> hroots(h.roots.begin(), h.roots.end());
    for (const auto& p : patterns_) {
      if (static_cast<std::size_t>(p.n) > hv.size()) continue;
      // Place roots first, then remaining vertices by descending degree.
      std::vector<int> pdeg(static_cast<std::size_t>(p.n), 0);
      for (auto [u, w] : p.edges) {
        ++pdeg[static_cast<std::size_t>(u)];
        ++pdeg[static_cast<std::size_t>(w)];
      }
      std::vector<bool> is_root(static_cast<std::size_t>(p.n), false);
      for (int r : p.roots) is_root[static_cast<std::size_t>(r)] = true;
      std::vector<int> order(static_cast<std::size_t>(p.n));
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        bool rx = is_root[static_cast<std::size_t>(x)];
        bool ry = is_root[static_cast<std::size_t>(y)];
        if (rx != ry) return rx;
        return pdeg[static_cast<std::size_t>(x)] > pdeg[static_cast<std::size_t>(y)];
      });
      std::vector<int> image(static_cast<std::size_t>(p.n), -1);
      std::set<int> used;
      auto compatible = [&](int pv, int gv) {
        if (used.count(gv)) return false;
        if (is_root[static_cast<std::size_t>(pv)] && !h.roots.count(gv)) return false;
        int pc = p.colors.empty() ? RootedGraph::kUncolored
                                  : p.colors[static_cast<std::size_t>(pv)];
        if (pc != RootedGraph::kUncolored) {
          if (!colors) return false;
          auto it = colors->find(gv);
          if (it == colors->end() || it->second != pc) return false;
        }
        for (auto [x, y] : p.edges) {
          int other = -1;
          if (x == pv) other = y;
          else if (y == pv) other = x;
          else continue;
          if (image[static_cast<std::size_t>(other)] >= 0 &&
              !h.has_edge(gv, image[static_cast<std::size_t>(other)]))
            return false;
        }
        return true;
      };
      auto place = [&](auto&& self, std::size_t idx) -> bool {
        if (idx == order.size()) return true;
        int pv = order[idx];
        const std::vector<int>& cands =
            is_root[static_cast<std::size_t>(pv)] ? hroots : hv;
        for (int gv : cands) {
          if (!compatible(pv, gv)) continue;
          image[static_cast<std::size_t>(pv)] = gv;
          used.insert(gv);
          if (self(self, idx + 1)) return true;
          used.erase(gv);
          image[static_cast<std::size_t>(pv)] = -1;
        }
        return false;
      };
      if (place(place, 0)) {
        Witness w;
        w.kind = "pattern-embedding";
        w.vertices = image;  // vertices[i] = image of pattern vertex i
        for (auto [x, y] : p.edges)
          w.edges.push_back(norm_edge(image[static_cast<std::size_t>(x)],
                                      image[static_cast<std::size_t>(y)]));
        std::sort(w.edges.begin(), w.edges.end());
        return Match{name_, std::move(w)};
      }
    }
    return std::nullopt;
  }

  bool valid_path(const Witness& w, const Graph& g, bool st) const {
    if (w.vertices.size() < 2) return false;
    std::set<int> distinct(w.vertices.begin(), w.vertices.end());
    if (distinct.size() != w.vertices.size()) return false;
    if (w.edges.size() != w.vertices.size() - 1) return false;
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
      if (!g.has_edge(w.vertices[i], w.vertices[i + 1])) return false;
      if (w.edges[i] != norm_edge(w.vertices[i], w.vertices[i + 1])) return false;
    }
    if (st)
      return w.vertices.front() == a_ && w.vertices.back() == b_ &&
             static_cast<int>(w.edges.size()) <= len_;
    return static_cast<int>(w.edges.size()) == len_;
  }

  bool valid_embedding(const Witness& w, const Graph& g,
                       const std::map<int, int>* colors) const {
    for (const auto& p : patterns_) {
      if (static_cast<int>(w.vertices.size()) != p.n) continue;
      std::set<int> used(w.vertices.begin(), w.vertices.end());
      if (static_cast<int>(used.size()) != p.n) continue;
      bool ok = true;
      for (auto [x, y] : p.edges)
        if (!g.has_edge(w.vertices[static_cast<std::size_t>(x)],
                        w.vertices[static_cast<std::size_t>(y)])) {
          ok = false;
          break;
        }
      if (ok && !p.colors.empty())
        for (int pv = 0; pv < p.n && ok; ++pv) {
          int pc = p.colors[static_cast<std::size_t>(pv)];
          if (pc == RootedGraph::kUncolored) continue;
          if (!colors) {
            ok = false;
            break;
          }
          auto it = colors->find(w.vertices[static_cast<std::size_t>(pv)]);
          ok = it != colors->end() && it->second == pc;
        }
      if (ok) return true;
    }
    return false;
  }

  FamilyKind kind_ = FamilyKind::kPkFree;
  std::string name_;
  int a_ = 0, b_ = 1, len_ = 1, deg_ = 0;
  std::vector<RootedGraph> patterns_;
};

// Parses a rooted pattern: an edge-list header "n m" and edge lines, plus
// "root <v>" and "color <v> <c>" lines; '#' starts a comment.
inline RootedGraph load_pattern(std::istream& in) {
  RootedGraph p;
  p.n = -1;
  int m = -1, seen = 0;
  std::string line;
  std::set<VertexPair> edge_set;
  std::set<int> root_set;
  std::map<int, int> color_map;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    auto fail = [&](const std::string& why) -> IoError {
      return IoError("pattern line " + std::to_string(lineno) + ": " + why);
    };
    if (first == "root") {
      int v;
      if (!(ls >> v)) throw fail("expected vertex after 'root'");
      root_set.insert(v);
    } else if (first == "color") {
      int v, c;
      if (!(ls >> v >> c)) throw fail("expected vertex and color after 'color'");
      if (c < 0) throw fail("colors must be non-negative");
      color_map[v] = c;
    } else if (p.n < 0) {
      std::istringstream hs(line);
      if (!(hs >> p.n >> m) || p.n < 0 || m < 0) throw fail("bad header");
    } else {
      int u, v;
      std::istringstream es(line);
      if (!(es >> u >> v)) throw fail("bad edge line");
      if (u == v) throw SelfLoop(u);
      edge_set.insert(norm_edge(u, v));
      ++seen;
    }
  }
  if (p.n < 0) throw IoError("pattern file missing header");
  if (seen != m) throw IoError("pattern edge count mismatch");
  auto check = [&](int v) {
    if (v < 0 || v >= p.n) throw VertexOutOfRange(v, p.n);
  };
  for (auto [u, v] : edge_set) {
    check(u);
    check(v);
  }
  for (int r : root_set) check(r);
  for (const auto& kv : color_map) check(kv.first);
  p.edges.assign(edge_set.begin(), edge_set.end());
  p.roots.assign(root_set.begin(), root_set.end());
  if (!color_map.empty()) {
    p.colors.assign(static_cast<std::size_t>(p.n), RootedGraph::kUncolored);
    for (auto [v, c] : color_map) p.colors[static_cast<std::size_t>(v)] = c;
  }
  p.normalize();
  return p;
}

}  // namespace discprobe
