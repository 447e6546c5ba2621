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

#include "discprobe/generators.hpp"
#include "discprobe/testers.hpp"

using discprobe::canonical_test;
using discprobe::ForbiddenFamily;
using discprobe::Graph;
using discprobe::OracleMode;
using discprobe::stream_test;
using discprobe::TesterParams;
using discprobe::Verdict;

TEST_CASE("effective radius derives from amplification or the override") {
  TesterParams p;
  p.q0 = 2;
  p.amplification = 3;
  CHECK(p.effective_q() == 6);
  p.q_override = 4;
  CHECK(p.effective_q() == 4);
  p.q_override = 0;
  p.amplification = 0;
  CHECK_THROWS_AS(p.effective_q(), discprobe::InvalidParameter);
}

TEST_CASE("satisfying graphs are never rejected, in any mode") {
  // Cycles have maximum degree 2, so they satisfy the degree-2 bound.
  Graph g = discprobe::gen::cycle(24);
  auto fam = ForbiddenFamily::d_bounded(2);
  TesterParams p;
  p.q0 = 1;
  p.samples = 8;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    CHECK_FALSE(canonical_test(g, fam, p, seed).reject);
    TesterParams pe = p;
    pe.mode = OracleMode::kNeighborEdge;
    CHECK_FALSE(canonical_test(g, fam, pe, seed).reject);
    CHECK_FALSE(stream_test(g, fam, p, seed).reject);
  }
}

TEST_CASE("far graphs are rejected with certified witnesses") {
  // A star on 40 vertices is far from max-degree-2: its center must lose
  // almost every edge.
  Graph g = discprobe::gen::star(40);
  auto fam = ForbiddenFamily::d_bounded(2);
  TesterParams p;
  p.q0 = 1;
  p.amplification = 3;
  p.samples = 16;
  int query_rejects = 0, stream_rejects = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Verdict vq = canonical_test(g, fam, p, seed);
    if (vq.reject) {
      ++query_rejects;
      REQUIRE(vq.match.has_value());
      CHECK(vq.witness_checked);
      CHECK(fam.witness_valid(vq.match->witness, g));
    }
    Verdict vs = stream_test(g, fam, p, seed);
    if (vs.reject) {
      ++stream_rejects;
      CHECK(vs.witness_checked);
    }
  }
  CHECK(query_rejects > 50);
  CHECK(stream_rejects > 50);
}

TEST_CASE("query transcript counts every oracle call") {
  Graph g = discprobe::gen::er(60, 0.1, 2);
  auto fam = ForbiddenFamily::pk_free(5);
  TesterParams p;
  p.q0 = 1;
  p.amplification = 2;  // effective q = 2
  Verdict v = canonical_test(g, fam, p, 9);
  // Vertex-sample queries: q. Exploration queries: q per popped vertex.
  // The transcript's total must be at least q (the root draws) and exactly
  // match the oracle accounting, which decide() copied out.
  CHECK(v.transcript.queries >= 2);
  CHECK(v.transcript.roots.size() == 2);
  // Neighbor+edge mode adds q edge draws and 2q more roots.
  TesterParams pe = p;
  pe.mode = OracleMode::kNeighborEdge;
  Verdict ve = canonical_test(g, fam, pe, 9);
  CHECK(ve.transcript.roots.size() == 6);
  CHECK(ve.transcript.queries > v.transcript.queries);
}

TEST_CASE("edge mode degrades gracefully on edgeless graphs") {
  Graph g = discprobe::gen::empty_graph(10);
  auto fam = ForbiddenFamily::pk_free(2);
  TesterParams p;
  p.mode = OracleMode::kNeighborEdge;
  Verdict v = canonical_test(g, fam, p, 3);
  CHECK_FALSE(v.reject);
  CHECK(v.transcript.roots.size() == 3);  // only vertex samples, no edges
}

TEST_CASE("pinned endpoints always join the explored roots") {
  Graph g = discprobe::gen::path(30);
  auto fam = ForbiddenFamily::st_disconnectivity(4, 27, 40);
  TesterParams p;
  p.q0 = 1;
  Verdict v = canonical_test(g, fam, p, 21);
  bool has_s = false, has_t = false;
  for (int r : v.transcript.roots) {
    has_s = has_s || r == 4;
    has_t = has_t || r == 27;
  }
  CHECK(has_s);
  CHECK(has_t);

  Verdict vs = stream_test(g, fam, p, 21);
  has_s = has_t = false;
  for (int r : vs.transcript.roots) {
    has_s = has_s || r == 4;
    has_t = has_t || r == 27;
  }
  CHECK(has_s);
  CHECK(has_t);
}

TEST_CASE("small graphs take the exact streaming path") {
  Graph g = discprobe::gen::path(4);  // contains a 3-edge path
  auto fam = ForbiddenFamily::pk_free(3);
  TesterParams p;
  p.n0 = 10;
  Verdict v = stream_test(g, fam, p, 1);
  CHECK(v.transcript.exact_path);
  CHECK(v.reject);  // exact decision is deterministic
  CHECK(v.witness_checked);
  CHECK(v.transcript.reserved_words ==
        static_cast<std::size_t>(g.vertex_count() + g.edge_count()));

  // The satisfying side is deterministic too.
  Graph ok = discprobe::gen::path(3);
  Verdict vo = stream_test(ok, fam, p, 1);
  CHECK(vo.transcript.exact_path);
  CHECK_FALSE(vo.reject);
}

TEST_CASE("streaming space accounting is independent of graph size") {
  auto fam = ForbiddenFamily::d_bounded(3);
  TesterParams p;
  p.q0 = 1;
  p.samples = 8;
  std::size_t reserved = 0;
  for (int n : {50, 500, 5000}) {
    Graph g = discprobe::gen::er_nm(n, 2 * n, 42);
    Verdict v = stream_test(g, fam, p, 7);
    if (reserved == 0) reserved = v.transcript.reserved_words;
    CHECK(v.transcript.reserved_words == reserved);
    CHECK(v.transcript.growth_events == 0);
    CHECK(v.transcript.used_words <= reserved);
    CHECK(v.transcript.used_words > 0);
  }
}

TEST_CASE("a shared collector pool reproduces unpooled runs") {
  Graph g = discprobe::gen::er(80, 0.05, 14);
  auto fam = ForbiddenFamily::pk_free(4);
  TesterParams p;
  p.q0 = 1;
  p.samples = 6;
  discprobe::CollectorPool pool(p.effective_q(), 6);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Verdict with_pool = stream_test(g, fam, p, seed, &pool);
    Verdict without = stream_test(g, fam, p, seed);
    CHECK(with_pool.reject == without.reject);
    CHECK(with_pool.transcript.roots == without.transcript.roots);
  }
}

TEST_CASE("identical seeds give identical verdicts") {
  Graph g = discprobe::gen::er(100, 0.08, 3);
  auto fam = ForbiddenFamily::pk_free(6);
  TesterParams p;
  p.q0 = 2;
  Verdict a = canonical_test(g, fam, p, 77);
  Verdict b = canonical_test(g, fam, p, 77);
  CHECK(a.reject == b.reject);
  CHECK(a.transcript.roots == b.transcript.roots);
  CHECK(a.transcript.queries == b.transcript.queries);
  Verdict c = stream_test(g, fam, p, 77);
  Verdict d = stream_test(g, fam, p, 77);
  CHECK(c.reject == d.reject);
  CHECK(c.transcript.roots == d.transcript.roots);
}

TEST_CASE("colored pattern testing threads the ambient coloring through") {
  // Forbidden: an edge whose both endpoints carry color 1.
  discprobe::RootedGraph pat;
  pat.n = 2;
  pat.edges = {{0, 1}};
  pat.colors = {1, 1};
  auto fam = ForbiddenFamily::explicit_patterns({pat});

  Graph g = discprobe::gen::path(2);
  std::map<int, int> bad{{0, 1}, {1, 1}};
  std::map<int, int> good{{0, 1}, {1, 2}};
  TesterParams p;
  p.q0 = 1;
  p.n0 = 10;
  Verdict vb = stream_test(g, fam, p, 5, nullptr, &bad);
  CHECK(vb.reject);
  CHECK(vb.witness_checked);
  Verdict vg = stream_test(g, fam, p, 5, nullptr, &good);
  CHECK_FALSE(vg.reject);
}
