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

#include "discprobe/exact.hpp"
#include "discprobe/generators.hpp"
#include "discprobe/oracle.hpp"
#include "discprobe/rbfs.hpp"

using discprobe::DiscKey;
using discprobe::Graph;
using discprobe::VertexPair;

namespace {

mpq_class total(const std::map<DiscKey, mpq_class>& dist) {
  mpq_class t(0);
  for (const auto& [k, p] : dist) t += p;
  return t;
}

}  // namespace

TEST_CASE("rationals render with explicit denominators") {
  CHECK(discprobe::rational_str(mpq_class(1, 2)) == "1/2");
  CHECK(discprobe::rational_str(mpq_class(2)) == "2/1");
  CHECK(discprobe::rational_str(mpq_class(0)) == "0/1");
  mpq_class r = mpq_class(3) / mpq_class(6);
  CHECK(discprobe::rational_str(r) == "1/2");
}

TEST_CASE("three-vertex path, center root: two equally likely discs") {
  Graph g = discprobe::gen::path(3);
  auto dist = discprobe::exact_rbfs_distribution(g, 1, 1);
  REQUIRE(dist.size() == 2);
  DiscKey left{{0, 1}, {{0, 1}}};
  DiscKey right{{1, 2}, {{1, 2}}};
  REQUIRE(dist.count(left) == 1);
  REQUIRE(dist.count(right) == 1);
  CHECK(dist[left] == mpq_class(1, 2));
  CHECK(dist[right] == mpq_class(1, 2));
  CHECK(total(dist) == 1);
}

TEST_CASE("end roots explore deterministically at radius one") {
  Graph g = discprobe::gen::path(3);
  auto dist = discprobe::exact_rbfs_distribution(g, 0, 1);
  REQUIRE(dist.size() == 1);
  CHECK(dist.begin()->first == DiscKey{{0, 1}, {{0, 1}}});
  CHECK(dist.begin()->second == 1);
}

TEST_CASE("isolated roots give the singleton disc with certainty") {
  Graph g(3, {{1, 2}});
  auto dist = discprobe::exact_rbfs_distribution(g, 0, 2);
  REQUIRE(dist.size() == 1);
  CHECK(dist.begin()->first == DiscKey{{0}, {}});
  CHECK(dist.begin()->second == 1);
}

TEST_CASE("distributions sum to exactly one") {
  struct Case {
    Graph g;
    int root, q;
  };
  std::vector<Case> cases;
  cases.push_back({discprobe::gen::path(4), 1, 2});
  cases.push_back({discprobe::gen::star(4), 0, 2});
  cases.push_back({discprobe::gen::cycle(5), 3, 2});
  cases.push_back({discprobe::gen::clique(4), 0, 2});
  for (const auto& c : cases) {
    auto dist = discprobe::exact_rbfs_distribution(c.g, c.root, c.q);
    CHECK(total(dist) == 1);
    for (const auto& [key, p] : dist) {
      CHECK(p > 0);
      CHECK(std::binary_search(key.first.begin(), key.first.end(), c.root));
      for (auto [u, v] : key.second) CHECK(c.g.has_edge(u, v));
    }
  }
}

TEST_CASE("reach probabilities match hand-computed values") {
  auto reach3 = discprobe::exact_reach_all(discprobe::gen::path(3), 1);
  REQUIRE(reach3.size() == 3);
  CHECK(reach3[0] == mpq_class(1, 2));
  CHECK(reach3[1] == 1);
  CHECK(reach3[2] == mpq_class(1, 2));

  // Star on four vertices: the center is in every disc; a leaf is reached
  // from itself always and from the center with probability 1/3.
  auto star = discprobe::exact_reach_all(discprobe::gen::star(4), 1);
  CHECK(star[0] == 1);
  CHECK(star[1] == mpq_class(1, 3));
  CHECK(discprobe::exact_reach_vertex(discprobe::gen::star(4), 2, 1) ==
        mpq_class(1, 3));
}

TEST_CASE("exact distribution matches empirical sampling frequencies") {
  Graph g = discprobe::gen::path(4);
  const int root = 1, q = 2;
  auto exact = discprobe::exact_rbfs_distribution(g, root, q);
  const std::uint64_t trials = 40000;
  std::map<DiscKey, std::uint64_t> counts;
  discprobe::QueryOracle oracle(g, 515);
  for (std::uint64_t i = 0; i < trials; ++i)
    ++counts[discprobe::random_bfs(oracle, root, q).key()];
  // Every observed disc must be in the exact support.
  for (const auto& [key, c] : counts) REQUIRE(exact.count(key) == 1);
  for (const auto& [key, p] : exact) {
    double expected = p.get_d();
    double freq = counts.count(key)
                      ? static_cast<double>(counts[key]) / static_cast<double>(trials)
                      : 0.0;
    double se = std::sqrt(std::max(expected * (1 - expected), 1e-12) /
                          static_cast<double>(trials));
    CHECK(std::abs(freq - expected) < 5 * se + 1e-9);
  }
}

TEST_CASE("assembled disc records carry correct distances") {
  Graph g = discprobe::gen::path(3);
  auto oracle = discprobe::exact_rbfs_oracle(g, 1, 1);
  REQUIRE(oracle.size() == 2);
  for (const auto& entry : oracle) {
    CHECK(entry.prob == mpq_class(1, 2));
    CHECK(entry.disc.root == 1);
    CHECK(entry.disc.depth.at(1) == 0);
    CHECK(entry.disc.radius() == 1);
  }
}

TEST_CASE("stream distribution over all edge orders: forced collections") {
  // On the path 0-1-2 with q = 1 and root 0, both orders collect exactly
  // the incident edge.
  Graph g = discprobe::gen::path(3);
  auto dist = discprobe::exact_stream_distribution(g, 0, 1);
  REQUIRE(dist.size() == 1);
  CHECK(dist.begin()->first == DiscKey{{0, 1}, {{0, 1}}});
  CHECK(dist.begin()->second == 1);
}

TEST_CASE("stream distribution splits evenly on the triangle") {
  Graph g = discprobe::gen::clique(3);
  auto dist = discprobe::exact_stream_distribution(g, 0, 1);
  REQUIRE(dist.size() == 2);
  DiscKey a{{0, 1}, {{0, 1}}};
  DiscKey b{{0, 2}, {{0, 2}}};
  CHECK(dist[a] == mpq_class(1, 2));
  CHECK(dist[b] == mpq_class(1, 2));
  CHECK(total(dist) == 1);
  CHECK(discprobe::exact_stream_contains(g, 0, 1, a) == mpq_class(1, 2));
}

TEST_CASE("stream collection dominates the exploration on small inputs") {
  for (const Graph& g :
       {discprobe::gen::path(3), discprobe::gen::clique(3),
        discprobe::gen::star(4), discprobe::gen::path(4)}) {
    for (int q : {1, 2}) {
      auto rep = discprobe::verify_stream_lower_bound_exact(g, q);
      CHECK(rep.support_ok);
      CHECK(rep.min_ratio > 0);
      CHECK_FALSE(rep.entries.empty());
    }
  }
  // Frozen: on the 3-path at q = 1 every ratio is exactly one.
  auto rep = discprobe::verify_stream_lower_bound_exact(
      discprobe::gen::path(3), 1);
  CHECK(rep.min_ratio == 1);
}

TEST_CASE("type grouping merges isomorphic discs") {
  Graph g = discprobe::gen::path(3);
  auto dist = discprobe::exact_rbfs_distribution(g, 1, 1);
  auto types = discprobe::group_by_type(dist, 1);
  REQUIRE(types.size() == 1);  // both discs are a rooted single edge
  CHECK(types.begin()->second == 1);

  // An ambient coloring separates the two discs into distinct types.
  std::map<int, int> colors{{0, 5}};
  auto colored = discprobe::group_by_type(dist, 1, &colors);
  REQUIRE(colored.size() == 2);
  for (const auto& [code, p] : colored) CHECK(p == mpq_class(1, 2));
}

TEST_CASE("guards stop oversized enumerations") {
  CHECK_THROWS_AS(
      discprobe::exact_rbfs_distribution(discprobe::gen::clique(4), 0, 3, 10),
      discprobe::StateSpaceTooLarge);
  CHECK_THROWS_AS(discprobe::exact_stream_distribution(
                      discprobe::gen::clique(5), 0, 1),
                  discprobe::TooManyEdges);
  Graph g = discprobe::gen::path(3);
  CHECK_THROWS_AS(discprobe::exact_rbfs_distribution(g, 9, 1),
                  discprobe::VertexOutOfRange);
  CHECK_THROWS_AS(discprobe::exact_rbfs_distribution(g, 0, 0),
                  discprobe::InvalidParameter);
  CHECK_THROWS_AS(discprobe::exact_reach_all(Graph(0, {}), 1),
                  discprobe::EmptyGraph);
}
