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

#include <map>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "discprobe/analysis.hpp"
#include "discprobe/generators.hpp"
#include "discprobe/oracle.hpp"

using discprobe::Graph;
using discprobe::QueryOracle;

TEST_CASE("every query increments the counter by exactly one") {
  Graph g = discprobe::gen::path(4);
  QueryOracle oracle(g, 1);
  CHECK(oracle.query_count() == 0);
  oracle.random_vertex();
  CHECK(oracle.query_count() == 1);
  oracle.random_neighbor(1);
  CHECK(oracle.query_count() == 2);
  oracle.random_edge();
  CHECK(oracle.query_count() == 3);
  for (int i = 0; i < 7; ++i) oracle.random_neighbor(0);
  CHECK(oracle.query_count() == 10);
}

TEST_CASE("isolated vertices yield the no-neighbor answer, still counted") {
  Graph g(3, {{0, 1}});
  QueryOracle oracle(g, 5);
  auto r = oracle.random_neighbor(2);
  CHECK_FALSE(r.has_value());
  CHECK(oracle.query_count() == 1);
  auto s = oracle.random_neighbor(0);
  REQUIRE(s.has_value());
  CHECK(*s == 1);
}

TEST_CASE("degenerate graphs raise typed errors") {
  Graph empty(0, {});
  QueryOracle a(empty, 1);
  CHECK_THROWS_AS(a.random_vertex(), discprobe::EmptyGraph);

  Graph edgeless(4, {});
  QueryOracle b(edgeless, 1);
  CHECK_THROWS_AS(b.random_edge(), discprobe::NoEdges);
  CHECK_THROWS_AS(b.random_neighbor(9), discprobe::VertexOutOfRange);
}

TEST_CASE("random vertex is uniform") {
  Graph g = discprobe::gen::empty_graph(5);
  QueryOracle oracle(g, 31);
  std::vector<std::uint64_t> counts(5, 0);
  for (int i = 0; i < 50000; ++i)
    ++counts[static_cast<std::size_t>(oracle.random_vertex())];
  CHECK(discprobe::chi_square_uniform(counts) <
        discprobe::chi_square_critical_99(4));
}

TEST_CASE("random neighbor is uniform over the adjacency list") {
  // Star center: neighbors are the 4 leaves.
  Graph g = discprobe::gen::star(5);
  QueryOracle oracle(g, 8);
  std::map<int, std::uint64_t> counts;
  for (int i = 0; i < 40000; ++i) {
    auto r = oracle.random_neighbor(0);
    REQUIRE(r.has_value());
    ++counts[*r];
  }
  REQUIRE(counts.size() == 4);
  std::vector<std::uint64_t> flat;
  for (auto [v, c] : counts) flat.push_back(c);
  CHECK(discprobe::chi_square_uniform(flat) <
        discprobe::chi_square_critical_99(3));
}

TEST_CASE("random edge is uniform with random endpoint order") {
  Graph g = discprobe::gen::path(4);  // edges 01, 12, 23
  QueryOracle oracle(g, 17);
  std::map<discprobe::VertexPair, std::uint64_t> ordered;
  for (int i = 0; i < 60000; ++i) ++ordered[oracle.random_edge()];
  // All six ordered endpoint pairs must appear, roughly equally.
  REQUIRE(ordered.size() == 6);
  std::vector<std::uint64_t> flat;
  for (auto [e, c] : ordered) flat.push_back(c);
  CHECK(discprobe::chi_square_uniform(flat) <
        discprobe::chi_square_critical_99(5));
}

TEST_CASE("transcripts are reproducible from the seed") {
  Graph g = discprobe::gen::er(30, 0.2, 4);
  QueryOracle a(g, 12), b(g, 12);
  for (int i = 0; i < 200; ++i) {
    CHECK(a.random_vertex() == b.random_vertex());
    CHECK(a.random_neighbor(i % 30) == b.random_neighbor(i % 30));
  }
}
