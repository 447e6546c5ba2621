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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <vector>

#include "discprobe/corpus.hpp"
#include "discprobe/generators.hpp"

using discprobe::Graph;
using discprobe::VertexPair;

namespace {

// Unlabeled isomorphism by direct permutation search, written here so the
// test does not lean on the library's canonicalization machinery.
bool plain_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  const int n = a.vertex_count();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<VertexPair> mapped;
    mapped.reserve(a.edges().size());
    for (auto [u, v] : a.edges()) {
      int x = perm[static_cast<std::size_t>(u)];
      int y = perm[static_cast<std::size_t>(v)];
      if (x > y) std::swap(x, y);
      mapped.push_back({x, y});
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped == b.edges()) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool plain_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  std::vector<bool> vis(static_cast<std::size_t>(n), false);
  std::queue<int> fifo;
  fifo.push(0);
  vis[0] = true;
  int seen = 1;
  while (!fifo.empty()) {
    int u = fifo.front();
    fifo.pop();
    for (int w : g.neighbors(u))
      if (!vis[static_cast<std::size_t>(w)]) {
        vis[static_cast<std::size_t>(w)] = true;
        ++seen;
        fifo.push(w);
      }
  }
  return seen == n;
}

bool corpus_contains(const Graph& g) {
  for (const Graph& h : discprobe::small_connected_corpus())
    if (plain_isomorphic(g, h)) return true;
  return false;
}

}  // namespace

TEST_CASE("corpus has one representative per small connected class") {
  const auto& corpus = discprobe::small_connected_corpus();
  REQUIRE(corpus.size() == 42);

  std::map<int, int> per_n;
  for (const Graph& g : corpus) {
    CHECK(g.vertex_count() >= 1);
    CHECK(g.vertex_count() <= 6);
    CHECK(g.edge_count() <= 6);
    CHECK(plain_connected(g));
    ++per_n[g.vertex_count()];
  }
  // Connected graphs with at most six edges, counted per vertex count:
  // trees and sparse cyclic graphs only once n reaches 5 and 6.
  CHECK(per_n[1] == 1);
  CHECK(per_n[2] == 1);
  CHECK(per_n[3] == 2);
  CHECK(per_n[4] == 6);
  CHECK(per_n[5] == 13);
  CHECK(per_n[6] == 19);
}

TEST_CASE("corpus entries are pairwise non-isomorphic") {
  const auto& corpus = discprobe::small_connected_corpus();
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i + 1; j < corpus.size(); ++j) {
      CAPTURE(i, j);
      CHECK_FALSE(plain_isomorphic(corpus[i], corpus[j]));
    }
}

TEST_CASE("corpus is ordered by size and contains the standard landmarks") {
  const auto& corpus = discprobe::small_connected_corpus();
  for (std::size_t i = 1; i < corpus.size(); ++i) {
    const Graph& prev = corpus[i - 1];
    const Graph& cur = corpus[i];
    bool ordered = prev.vertex_count() < cur.vertex_count() ||
                   (prev.vertex_count() == cur.vertex_count() &&
                    prev.edge_count() <= cur.edge_count());
    CHECK(ordered);
  }

  CHECK(corpus_contains(discprobe::gen::clique(3)));
  CHECK(corpus_contains(discprobe::gen::cycle(4)));
  CHECK(corpus_contains(discprobe::gen::clique(4)));
  Graph diamond(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(corpus_contains(diamond));
  CHECK(corpus_contains(discprobe::gen::path(6)));
  CHECK(corpus_contains(discprobe::gen::cycle(6)));
  CHECK(corpus_contains(discprobe::gen::star(6)));
  // Too many edges for the corpus cap.
  CHECK_FALSE(corpus_contains(discprobe::gen::clique(5)));

  // The list is built once and reused.
  CHECK(&discprobe::small_connected_corpus() == &corpus);
}

TEST_CASE("corpus mask helpers are self-consistent") {
  using discprobe::corpus_detail::mask_connected;
  using discprobe::corpus_detail::mask_to_graph;
  using discprobe::corpus_detail::min_perm_mask;
  using discprobe::corpus_detail::pair_bit;

  CHECK(pair_bit(0, 1, 4) == 0);
  CHECK(pair_bit(0, 3, 4) == 2);
  CHECK(pair_bit(2, 3, 4) == 5);

  // Triangle on three vertices occupies the three low bits.
  Graph k3 = mask_to_graph(3, 0b111);
  CHECK(k3.edge_count() == 3);
  CHECK(plain_isomorphic(k3, discprobe::gen::clique(3)));

  // A 3-path in any labeling minimizes to the center-at-vertex-0 form.
  CHECK(min_perm_mask(3, 0b101) == 0b011);
  CHECK(min_perm_mask(3, 0b011) == 0b011);
  CHECK(min_perm_mask(3, 0b110) == 0b011);

  CHECK(mask_connected(3, 0b101));
  CHECK_FALSE(mask_connected(3, 0b001));  // one edge plus an isolated vertex
  CHECK(mask_connected(1, 0));
}
