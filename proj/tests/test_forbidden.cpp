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

#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "discprobe/forbidden.hpp"
#include "discprobe/generators.hpp"

using discprobe::ForbiddenFamily;
using discprobe::Graph;
using discprobe::RootedGraph;
using discprobe::Subgraph;

namespace {

Subgraph whole(const Graph& g) {
  Subgraph s;
  for (int v = 0; v < g.vertex_count(); ++v) {
    s.add_vertex(v);
    s.roots.insert(v);
  }
  for (auto [u, w] : g.edges()) s.add_edge(u, w);
  return s;
}

}  // namespace

TEST_CASE("st paths are found, length-bounded, and revalidated") {
  auto fam = ForbiddenFamily::st_disconnectivity(0, 3, 3);
  CHECK(fam.pinned_roots() == std::vector<int>{0, 3});

  Graph path = discprobe::gen::path(4);  // 0-1-2-3: an s-t path of length 3
  auto m = fam.find(whole(path));
  REQUIRE(m.has_value());
  CHECK(m->witness.vertices.front() == 0);
  CHECK(m->witness.vertices.back() == 3);
  CHECK(m->witness.edges.size() <= 3);
  CHECK(fam.witness_valid(m->witness, path));
  CHECK_FALSE(fam.holds_exactly(path));

  // Tighten the bound below the distance: no forbidden structure remains.
  auto tight = ForbiddenFamily::st_disconnectivity(0, 3, 2);
  CHECK_FALSE(tight.find(whole(path)).has_value());
  CHECK(tight.holds_exactly(path));

  // Disconnected endpoints satisfy the property.
  Graph split(4, {{0, 1}, {2, 3}});
  CHECK(fam.holds_exactly(split));

  // A witness that skips an edge of the graph must be refused.
  discprobe::Witness fake;
  fake.kind = "st-path";
  fake.vertices = {0, 2, 3};
  fake.edges = {{0, 2}, {2, 3}};
  CHECK_FALSE(fam.witness_valid(fake, path));
}

TEST_CASE("simple path detection matches exact path lengths") {
  auto fam = ForbiddenFamily::pk_free(3);

  CHECK(fam.holds_exactly(discprobe::gen::path(3)));      // longest path: 2
  CHECK_FALSE(fam.holds_exactly(discprobe::gen::path(4)));  // has a P_3
  CHECK_FALSE(fam.holds_exactly(discprobe::gen::cycle(4)));
  CHECK(fam.holds_exactly(discprobe::gen::star(10)));  // stars cap at 2 edges

  auto m = fam.find(whole(discprobe::gen::cycle(5)));
  REQUIRE(m.has_value());
  CHECK(m->witness.vertices.size() == 4);
  CHECK(m->witness.edges.size() == 3);
  CHECK(fam.witness_valid(m->witness, discprobe::gen::cycle(5)));

  // A walk that revisits a vertex is not a valid simple-path witness.
  discprobe::Witness walk;
  walk.kind = "simple-path";
  walk.vertices = {0, 1, 0, 1};
  walk.edges = {{0, 1}, {0, 1}, {0, 1}};
  CHECK_FALSE(fam.witness_valid(walk, discprobe::gen::path(2)));
}

TEST_CASE("degree violations need d+1 distinct incident edges") {
  auto fam = ForbiddenFamily::d_bounded(2);
  CHECK(fam.holds_exactly(discprobe::gen::cycle(6)));
  CHECK_FALSE(fam.holds_exactly(discprobe::gen::star(4)));  // center degree 3

  auto m = fam.find(whole(discprobe::gen::star(4)));
  REQUIRE(m.has_value());
  CHECK(m->witness.vertices[0] == 0);
  CHECK(m->witness.edges.size() == 3);
  CHECK(fam.witness_valid(m->witness, discprobe::gen::star(4)));
  CHECK_FALSE(fam.witness_valid(m->witness, discprobe::gen::path(4)));

  // d = 0 forbids any edge at all.
  auto none = ForbiddenFamily::d_bounded(0);
  CHECK(none.holds_exactly(discprobe::gen::empty_graph(5)));
  CHECK_FALSE(none.holds_exactly(discprobe::gen::path(2)));
}

TEST_CASE("pattern embeddings respect roots") {
  // Pattern: a rooted triangle — root must land on a collected root.
  RootedGraph tri;
  tri.n = 3;
  tri.edges = {{0, 1}, {0, 2}, {1, 2}};
  tri.roots = {0};
  auto fam = ForbiddenFamily::explicit_patterns({tri});

  Graph g(4, {{1, 2}, {1, 3}, {2, 3}});  // triangle on {1,2,3}, vertex 0 free
  Subgraph all = whole(g);
  auto m = fam.find(all);
  REQUIRE(m.has_value());
  CHECK(fam.witness_valid(m->witness, g));

  // Restrict the roots to vertex 0 only: no embedding places the pattern
  // root on a collected root anymore.
  Subgraph restricted = all;
  restricted.roots = {0};
  CHECK_FALSE(fam.find(restricted).has_value());
}

TEST_CASE("pattern embeddings are non-induced and injective") {
  // P_2 pattern (two edges) embeds into a triangle: non-induced matching.
  RootedGraph p2;
  p2.n = 3;
  p2.edges = {{0, 1}, {1, 2}};
  auto fam = ForbiddenFamily::explicit_patterns({p2});
  CHECK_FALSE(fam.holds_exactly(discprobe::gen::clique(3)));

  // But it cannot embed into a single edge (injectivity needs 3 vertices).
  CHECK(fam.holds_exactly(discprobe::gen::path(2)));
}

TEST_CASE("colored pattern vertices match only their exact ambient color") {
  RootedGraph edge;
  edge.n = 2;
  edge.edges = {{0, 1}};
  edge.colors = {7, RootedGraph::kUncolored};
  auto fam = ForbiddenFamily::explicit_patterns({edge});

  Graph g = discprobe::gen::path(2);
  std::map<int, int> right{{0, 7}};
  std::map<int, int> wrong{{0, 3}, {1, 3}};
  CHECK_FALSE(fam.holds_exactly(g, &right));
  CHECK(fam.holds_exactly(g, &wrong));
  CHECK(fam.holds_exactly(g));  // no ambient coloring: colored vertex matches nothing

  auto m = fam.find(whole(g), &right);
  REQUIRE(m.has_value());
  CHECK(fam.witness_valid(m->witness, g, &right));
  CHECK_FALSE(fam.witness_valid(m->witness, g, &wrong));
  CHECK_FALSE(fam.witness_valid(m->witness, g, nullptr));
}

TEST_CASE("family constructors validate their parameters") {
  CHECK_THROWS_AS(ForbiddenFamily::st_disconnectivity(2, 2, 5),
                  discprobe::InvalidParameter);
  CHECK_THROWS_AS(ForbiddenFamily::st_disconnectivity(0, 1, 0),
                  discprobe::InvalidParameter);
  CHECK_THROWS_AS(ForbiddenFamily::pk_free(0), discprobe::InvalidParameter);
  CHECK_THROWS_AS(ForbiddenFamily::d_bounded(-1), discprobe::InvalidParameter);
  CHECK_THROWS_AS(ForbiddenFamily::explicit_patterns({}),
                  discprobe::InvalidParameter);
  RootedGraph big;
  big.n = 13;
  CHECK_THROWS_AS(ForbiddenFamily::explicit_patterns({big}),
                  discprobe::PatternTooLarge);
}

TEST_CASE("pattern files parse roots, colors, and comments") {
  std::istringstream in(
      "# triangle with one root and one colored vertex\n"
      "3 3\n"
      "0 1\n"
      "1 2 # third corner\n"
      "0 2\n"
      "root 1\n"
      "color 2 4\n");
  RootedGraph p = discprobe::load_pattern(in);
  CHECK(p.n == 3);
  CHECK(p.edges.size() == 3);
  CHECK(p.roots == std::vector<int>{1});
  REQUIRE(p.colors.size() == 3);
  CHECK(p.colors[2] == 4);
  CHECK(p.colors[0] == RootedGraph::kUncolored);
}

TEST_CASE("malformed pattern files raise io errors") {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return discprobe::load_pattern(in);
  };
  CHECK_THROWS_AS(parse(""), discprobe::IoError);
  CHECK_THROWS_AS(parse("2 1\n"), discprobe::IoError);          // missing edge
  CHECK_THROWS_AS(parse("2 1\n0 1\nroot\n"), discprobe::IoError);
  CHECK_THROWS_AS(parse("2 1\n0 1\ncolor 0\n"), discprobe::IoError);
  CHECK_THROWS_AS(parse("2 1\n0 1\ncolor 0 -3\n"), discprobe::IoError);
  CHECK_THROWS_AS(parse("2 1\n0 1\nroot 9\n"), discprobe::VertexOutOfRange);
  CHECK_THROWS_AS(parse("2 1\n0 0\n"), discprobe::SelfLoop);
}
