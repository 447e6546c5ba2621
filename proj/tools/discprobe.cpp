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

// Command-line interface. Exit codes: 0 = success / property accepted,
// 1 = property rejected or a verification check failed, 2 = error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "discprobe/analysis.hpp"
#include "discprobe/corpus.hpp"
#include "discprobe/exact.hpp"
#include "discprobe/generators.hpp"
#include "discprobe/graph.hpp"
#include "discprobe/report.hpp"
#include "discprobe/stitch.hpp"
#include "discprobe/testers.hpp"

namespace {

using discprobe::Graph;
using nlohmann::json;

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitError = 2;

struct GlobalOpts {
  std::uint64_t seed = 0;
  int threads = 1;
  std::string out;
  std::string format = "json";
};

Graph load_graph(const std::string& path) {
  if (path == "-") return Graph::load(std::cin);
  std::ifstream in(path);
  if (!in) throw discprobe::IoError("cannot open graph file: " + path);
  return Graph::load(in);
}

discprobe::RootedGraph load_pattern_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw discprobe::IoError("cannot open pattern file: " + path);
  return discprobe::load_pattern(in);
}

void emit(const GlobalOpts& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(g.out);
  if (!out) throw discprobe::IoError("cannot open output file: " + g.out);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

void emit_report(const GlobalOpts& g, const json& report) {
  emit(g, report.dump(2));
}

// Flattens a report into key,value CSV rows (arrays/objects as JSON text).
void emit_csv_kv(const GlobalOpts& g, const json& report) {
  std::vector<std::vector<std::string>> rows;
  for (auto it = report.begin(); it != report.end(); ++it) {
    const json& v = it.value();
    rows.push_back({it.key(), v.is_string() ? v.get<std::string>() : v.dump()});
  }
  std::ostringstream os;
  discprobe::write_csv(os, {"key", "value"}, rows);
  emit(g, os.str());
}

void emit_any(const GlobalOpts& g, const json& report) {
  if (g.format == "csv")
    emit_csv_kv(g, report);
  else
    emit_report(g, report);
}

// ---------------------------------------------------------------------------
// Subcommand state.

struct GenerateOpts {
  std::string family = "path";
  int n = 8;
  double p = 0.1;
  std::int64_t m = -1;
};

struct RbfsOpts {
  std::string graph;
  int root = 0;
  int q = 1;
  std::uint64_t trials = 1;
  std::string mode = "query";  // query | stream
};

struct TestOpts {
  std::string graph;
  std::string property = "pk-free";
  int s = 0, t = 1, max_len = 0;
  int k = 3;
  int d = 2;
  std::string pattern_file;
  std::string mode = "query-neighbor";  // query-neighbor | query-edge | stream
  int q0 = 1;
  int amplification = 3;
  int q_override = 0;
  int samples = 16;
  int n0 = 0;
  std::uint64_t trials = 1;
};

struct EstimateOpts {
  std::string graph;
  int q = 1;
  std::uint64_t trials = 10000;
  int vertex = -1;
  double alpha = -1.0;
};

struct OracleOpts {
  std::string graph;
  std::string kind = "rbfs";  // rbfs | stream | reach | cst
  int root = 0;
  int q = 1;
  std::uint64_t leaf_guard = 1000000;
  int edge_guard = 8;
};

struct VerifyOpts {
  std::string graph;
  int q = 1;
  double alpha = 0.1;
  std::uint64_t trials = 20000;
  std::uint64_t pairs = 200;
  std::uint64_t orders = 100;
  std::uint64_t leaf_guard = 1000000;
};

struct ParamsOpts {
  int q = 1;
  std::string family_size = "2";
  std::string cst = "1/100";
  int crude_palette = -1;
};

discprobe::ForbiddenFamily make_family(const TestOpts& o) {
  if (o.property == "st-disconnectivity") {
    int len = o.max_len > 0 ? o.max_len : 3 * o.q0;
    return discprobe::ForbiddenFamily::st_disconnectivity(o.s, o.t, len);
  }
  if (o.property == "pk-free") return discprobe::ForbiddenFamily::pk_free(o.k);
  if (o.property == "d-bounded") return discprobe::ForbiddenFamily::d_bounded(o.d);
  if (o.property == "pattern") {
    if (o.pattern_file.empty())
      throw discprobe::InvalidConfig("property 'pattern' needs --pattern-file");
    return discprobe::ForbiddenFamily::explicit_patterns(
        {load_pattern_file(o.pattern_file)});
  }
  throw discprobe::InvalidConfig("unknown property: " + o.property);
}

json family_config(const discprobe::ForbiddenFamily& fam) {
  json params = json::object();
  for (auto [k, v] : fam.params()) params[k] = v;
  return {{"name", fam.name()}, {"params", params}};
}

int run_generate(const GlobalOpts& g, const GenerateOpts& o) {
  Graph graph = [&] {
    if (o.family == "path") return discprobe::gen::path(o.n);
    if (o.family == "cycle") return discprobe::gen::cycle(o.n);
    if (o.family == "star") return discprobe::gen::star(o.n);
    if (o.family == "clique") return discprobe::gen::clique(o.n);
    if (o.family == "empty") return discprobe::gen::empty_graph(o.n);
    if (o.family == "er") return discprobe::gen::er(o.n, o.p, g.seed);
    if (o.family == "er-nm") {
      std::int64_t m = o.m >= 0 ? o.m : 3 * static_cast<std::int64_t>(o.n);
      return discprobe::gen::er_nm(o.n, m, g.seed);
    }
    throw discprobe::InvalidConfig("unknown family: " + o.family);
  }();
  std::ostringstream os;
  graph.save(os);
  emit(g, os.str());
  return kExitAccept;
}

int run_rbfs(const GlobalOpts& g, const RbfsOpts& o) {
  Graph graph = load_graph(o.graph);
  json config{{"graph", o.graph}, {"root", o.root},      {"q", o.q},
              {"trials", o.trials}, {"mode", o.mode},    {"seed", g.seed},
              {"threads", g.threads}};
  if (o.trials == 1 && o.mode == "query") {
    discprobe::QueryOracle oracle(graph, discprobe::derive_seed(g.seed, 0));
    discprobe::Disc d = discprobe::random_bfs(oracle, o.root, o.q);
    json result{{"disc", discprobe::to_json(d)},
                {"type", discprobe::code_hex(discprobe::type_code(d))},
                {"queries", oracle.query_count()}};
    emit_any(g, discprobe::make_report("rbfs", config, result));
    return kExitAccept;
  }
  if (o.trials == 1 && o.mode == "stream") {
    auto order = discprobe::StreamOrder::uniform(graph,
                                                 discprobe::derive_seed(g.seed, 1));
    discprobe::Disc d = discprobe::stream_collect(order, o.root, o.q);
    json result{{"disc", discprobe::to_json(d)},
                {"type", discprobe::code_hex(discprobe::type_code(d))}};
    emit_any(g, discprobe::make_report("collect", config, result));
    return kExitAccept;
  }
  discprobe::TypeFrequencies freq =
      o.mode == "stream"
          ? discprobe::sample_stream_types(graph, o.root, o.q, o.trials, g.seed,
                                           nullptr, discprobe::ColorMode::kPartition,
                                           g.threads)
          : discprobe::sample_rbfs_types(graph, o.root, o.q, o.trials, g.seed,
                                         nullptr, discprobe::ColorMode::kPartition,
                                         g.threads);
  if (g.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [code, count] : freq.counts)
      rows.push_back({discprobe::code_hex(code), std::to_string(count)});
    std::ostringstream os;
    discprobe::write_csv(os, {"type", "count"}, rows);
    emit(g, os.str());
    return kExitAccept;
  }
  emit_report(g, discprobe::make_report(
                     o.mode == "stream" ? "collect" : "rbfs", config,
                     {{"types", discprobe::to_json(freq)}}));
  return kExitAccept;
}

int run_test(const GlobalOpts& g, const TestOpts& o) {
  Graph graph = load_graph(o.graph);
  discprobe::ForbiddenFamily fam = make_family(o);
  discprobe::TesterParams params;
  params.q0 = o.q0;
  params.amplification = o.amplification;
  params.q_override = o.q_override;
  params.samples = o.samples;
  params.n0 = o.n0;
  params.mode = o.mode == "query-edge" ? discprobe::OracleMode::kNeighborEdge
                                       : discprobe::OracleMode::kNeighbor;
  json config{{"graph", o.graph},
              {"family", family_config(fam)},
              {"mode", o.mode},
              {"q0", o.q0},
              {"amplification", o.amplification},
              {"q_override", o.q_override},
              {"effective_q", params.effective_q()},
              {"samples", o.samples},
              {"n0", o.n0},
              {"trials", o.trials},
              {"seed", g.seed},
              {"threads", g.threads}};
  auto run_once = [&](std::uint64_t seed,
                      discprobe::CollectorPool* pool) -> discprobe::Verdict {
    if (o.mode == "stream")
      return discprobe::stream_test(graph, fam, params, seed, pool);
    return discprobe::canonical_test(graph, fam, params, seed);
  };
  if (o.trials == 1) {
    discprobe::Verdict v = run_once(g.seed, nullptr);
    emit_any(g, discprobe::make_report("test", config,
                                       {{"verdict", discprobe::to_json(v)}}));
    return v.reject ? kExitReject : kExitAccept;
  }
  std::optional<discprobe::CollectorPool> pool;
  if (o.mode == "stream" && !(params.n0 > 0 && graph.vertex_count() <= params.n0))
    pool.emplace(params.effective_q(),
                 static_cast<std::size_t>(params.samples) +
                     fam.pinned_roots().size());
  std::uint64_t rejections = 0, invalid_witness = 0;
  for (std::uint64_t i = 0; i < o.trials; ++i) {
    discprobe::Verdict v =
        run_once(discprobe::derive_seed(g.seed, i), pool ? &*pool : nullptr);
    if (v.reject) {
      ++rejections;
      if (!v.witness_checked) ++invalid_witness;
    }
  }
  double rate = static_cast<double>(rejections) / static_cast<double>(o.trials);
  json result{{"trials", o.trials},
              {"rejections", rejections},
              {"rejection_rate", rate},
              {"invalid_witnesses", invalid_witness}};
  emit_any(g, discprobe::make_report("test", config, result));
  return kExitAccept;
}

int run_estimate(const GlobalOpts& g, const EstimateOpts& o) {
  Graph graph = load_graph(o.graph);
  json config{{"graph", o.graph},   {"q", o.q},
              {"trials", o.trials}, {"vertex", o.vertex},
              {"alpha", o.alpha},   {"seed", g.seed},
              {"threads", g.threads}};
  json result;
  if (o.vertex >= 0) {
    discprobe::Estimate e = discprobe::estimate_reach_vertex(
        graph, o.vertex, o.q, o.trials, g.seed, g.threads);
    result["reach"] = discprobe::to_json(e);
  } else {
    auto all = discprobe::estimate_reach_all(graph, o.q, o.trials, g.seed,
                                             g.threads);
    json arr = json::array();
    for (const auto& e : all) arr.push_back(discprobe::to_json(e));
    result["reach"] = arr;
    if (o.alpha >= 0.0) {
      auto rep = discprobe::extract_v_alpha(graph, o.q, o.alpha, o.trials,
                                            g.seed, g.threads);
      result["v_alpha"] = {{"alpha", rep.alpha},
                           {"members", rep.members},
                           {"borderline", rep.borderline}};
    }
  }
  if (g.format == "csv" && o.vertex < 0) {
    std::vector<std::vector<std::string>> rows;
    const json& arr = result["reach"];
    for (std::size_t v = 0; v < arr.size(); ++v) {
      std::ostringstream val, se;
      val << arr[v]["value"].get<double>();
      se << arr[v]["std_error"].get<double>();
      rows.push_back({std::to_string(v), val.str(), se.str()});
    }
    std::ostringstream os;
    discprobe::write_csv(os, {"vertex", "reach", "std_error"}, rows);
    emit(g, os.str());
    return kExitAccept;
  }
  emit_any(g, discprobe::make_report("estimate", config, result));
  return kExitAccept;
}

int run_oracle(const GlobalOpts& g, const OracleOpts& o) {
  Graph graph = load_graph(o.graph);
  json config{{"graph", o.graph}, {"kind", o.kind},
              {"root", o.root},   {"q", o.q},
              {"leaf_guard", o.leaf_guard}, {"edge_guard", o.edge_guard}};
  json result;
  if (o.kind == "rbfs" || o.kind == "stream") {
    auto dist = o.kind == "rbfs"
                    ? discprobe::exact_rbfs_distribution(graph, o.root, o.q,
                                                         o.leaf_guard)
                    : discprobe::exact_stream_distribution(graph, o.root, o.q,
                                                           o.edge_guard);
    json discs = json::array();
    for (const auto& [key, p] : dist) {
      json edges = json::array();
      for (auto [u, v] : key.second) edges.push_back({u, v});
      discs.push_back({{"vertices", key.first},
                       {"edges", edges},
                       {"prob", discprobe::rational_str(p)}});
    }
    result["discs"] = discs;
    result["types"] = discprobe::to_json(
        discprobe::group_by_type(dist, o.root));
  } else if (o.kind == "reach") {
    auto reach = discprobe::exact_reach_all(graph, o.q, o.leaf_guard);
    json arr = json::array();
    for (const auto& r : reach) arr.push_back(discprobe::rational_str(r));
    result["reach"] = arr;
  } else if (o.kind == "cst") {
    auto rep = discprobe::verify_stream_lower_bound_exact(
        graph, o.q, o.leaf_guard, o.edge_guard);
    result["entries"] = rep.entries.size();
    result["support_ok"] = rep.support_ok;
    result["min_ratio"] = discprobe::rational_str(rep.min_ratio);
  } else {
    throw discprobe::InvalidConfig("unknown oracle kind: " + o.kind);
  }
  emit_any(g, discprobe::make_report("oracle", config, result));
  return kExitAccept;
}

int run_verify(const GlobalOpts& g, const VerifyOpts& o) {
  Graph graph = load_graph(o.graph);
  json config{{"graph", o.graph},   {"q", o.q},
              {"alpha", o.alpha},   {"trials", o.trials},
              {"pairs", o.pairs},   {"orders", o.orders},
              {"seed", g.seed},     {"threads", g.threads}};
  std::vector<discprobe::LemmaCheck> checks;
  bool have_exact = false;
  std::vector<mpq_class> reach;
  try {
    reach = discprobe::exact_reach_all(graph, o.q, o.leaf_guard);
    have_exact = true;
  } catch (const discprobe::StateSpaceTooLarge&) {
    have_exact = false;
  }
  mpq_class alpha_q(o.alpha);
  alpha_q.canonicalize();
  if (have_exact) {
    checks.push_back(discprobe::check_v_alpha_size(reach, o.q, alpha_q));
    checks.push_back(
        discprobe::check_degree_lower_bound(graph, reach, o.q, alpha_q));
    checks.push_back(discprobe::check_mean_explored_exact(reach, o.q));
  } else {
    discprobe::LemmaCheck skipped{"exact-reach", false, false,
                                  "state space too large; exact checks skipped"};
    checks.push_back(skipped);
  }
  checks.push_back(discprobe::check_mean_explored_mc(graph, o.q, o.trials,
                                                     g.seed, g.threads));
  checks.push_back(discprobe::check_rbfs_edge_sharing(
      graph, o.q, o.alpha, o.pairs, discprobe::derive_seed(g.seed, 10),
      g.threads));
  checks.push_back(discprobe::check_stream_edge_sharing(
      graph, o.q, o.alpha, o.pairs, o.orders,
      discprobe::derive_seed(g.seed, 11), g.threads));
  json arr = json::array();
  bool all_ok = true;
  for (const auto& c : checks) {
    arr.push_back(discprobe::to_json(c));
    if (c.applicable && !c.passed) all_ok = false;
  }
  emit_any(g, discprobe::make_report("verify", config, {{"checks", arr}}));
  return all_ok ? kExitAccept : kExitReject;
}

int run_params(const GlobalOpts& g, const ParamsOpts& o) {
  mpz_class family(o.family_size);
  mpq_class cst(o.cst);
  cst.canonicalize();
  auto p = discprobe::theoretical_params(o.q, family, cst);
  json result = discprobe::to_json(p);
  if (o.crude_palette >= 0)
    result["family_size_crude_bound"] =
        discprobe::family_size_crude_bound(o.q, o.crude_palette).get_str();
  json config{{"q", o.q},
              {"family_size", o.family_size},
              {"cst", o.cst},
              {"crude_palette", o.crude_palette}};
  emit_any(g, discprobe::make_report("params", config, result));
  return kExitAccept;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant-query property testers for general graphs and their"
               " single-pass random-order stream emulation"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "Master seed; all randomness derives from it");
  app.add_option("--threads", g.threads, "Worker threads for Monte Carlo runs");
  app.add_option("--out", g.out, "Output file (default: stdout)");
  app.add_option("--format", g.format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  GenerateOpts gen;
  auto* sc_gen = app.add_subcommand("generate", "Emit a graph as an edge list");
  sc_gen->add_option("--family", gen.family,
                     "path|cycle|star|clique|empty|er|er-nm");
  sc_gen->add_option("--n", gen.n, "Vertex count");
  sc_gen->add_option("--p", gen.p, "Edge probability (er)");
  sc_gen->add_option("--m", gen.m, "Edge count (er-nm; default 3n)");

  RbfsOpts rb;
  auto* sc_rbfs = app.add_subcommand(
      "rbfs", "Run bounded explorations against the query oracle");
  sc_rbfs->add_option("--graph", rb.graph, "Edge-list file, or - for stdin")
      ->required();
  sc_rbfs->add_option("--root", rb.root, "Start vertex");
  sc_rbfs->add_option("--q", rb.q, "Exploration radius / draws per vertex");
  sc_rbfs->add_option("--trials", rb.trials, "Independent runs");

  RbfsOpts col;
  col.mode = "stream";
  auto* sc_col = app.add_subcommand(
      "collect", "Collect bounded neighborhoods from random-order streams");
  sc_col->add_option("--graph", col.graph, "Edge-list file, or - for stdin")
      ->required();
  sc_col->add_option("--root", col.root, "Start vertex");
  sc_col->add_option("--q", col.q, "Collection radius parameter");
  sc_col->add_option("--trials", col.trials, "Independent stream orders");

  TestOpts te;
  auto* sc_test = app.add_subcommand("test", "Run a property tester");
  sc_test->add_option("--graph", te.graph, "Edge-list file, or - for stdin")
      ->required();
  sc_test->add_option("--property", te.property,
                      "st-disconnectivity|pk-free|d-bounded|pattern");
  sc_test->add_option("--s", te.s, "Source vertex (st-disconnectivity)");
  sc_test->add_option("--t", te.t, "Target vertex (st-disconnectivity)");
  sc_test->add_option("--max-len", te.max_len,
                      "Path length bound (st-disconnectivity; default 3*q0)");
  sc_test->add_option("--k", te.k, "Forbidden path edge count (pk-free)");
  sc_test->add_option("--d", te.d, "Degree bound (d-bounded)");
  sc_test->add_option("--pattern-file", te.pattern_file,
                      "Rooted pattern file (pattern)");
  sc_test->add_option("--mode", te.mode, "query-neighbor|query-edge|stream")
      ->check(CLI::IsMember({"query-neighbor", "query-edge", "stream"}));
  sc_test->add_option("--q0", te.q0, "Family's base radius");
  sc_test->add_option("--c", te.amplification, "Radius amplification");
  sc_test->add_option("--q", te.q_override, "Explicit effective radius");
  sc_test->add_option("--samples", te.samples, "Stream root samples");
  sc_test->add_option("--n0", te.n0, "Store graphs of at most this size");
  sc_test->add_option("--trials", te.trials,
                      "Repetitions (>1 reports the rejection rate)");

  EstimateOpts es;
  auto* sc_est = app.add_subcommand("estimate",
                                    "Monte Carlo reach-probability estimates");
  sc_est->add_option("--graph", es.graph, "Edge-list file, or - for stdin")
      ->required();
  sc_est->add_option("--q", es.q, "Exploration radius");
  sc_est->add_option("--trials", es.trials, "Monte Carlo trials");
  sc_est->add_option("--vertex", es.vertex, "Single target vertex (default all)");
  sc_est->add_option("--alpha", es.alpha, "Also report the reach >= alpha set");

  OracleOpts orc;
  auto* sc_orc = app.add_subcommand("oracle", "Exact brute-force baselines");
  sc_orc->add_option("--graph", orc.graph, "Edge-list file, or - for stdin")
      ->required();
  sc_orc->add_option("--kind", orc.kind, "rbfs|stream|reach|cst");
  sc_orc->add_option("--root", orc.root, "Start vertex (rbfs/stream)");
  sc_orc->add_option("--q", orc.q, "Radius parameter");
  sc_orc->add_option("--leaf-guard", orc.leaf_guard,
                     "Abort exact exploration beyond this many outcomes");
  sc_orc->add_option("--edge-guard", orc.edge_guard,
                     "Refuse stream enumeration beyond this many edges");

  VerifyOpts ve;
  auto* sc_ver = app.add_subcommand(
      "verify", "Check the probabilistic guarantees empirically");
  sc_ver->add_option("--graph", ve.graph, "Edge-list file, or - for stdin")
      ->required();
  sc_ver->add_option("--q", ve.q, "Radius parameter");
  sc_ver->add_option("--alpha", ve.alpha, "Reach threshold");
  sc_ver->add_option("--trials", ve.trials, "Monte Carlo trials");
  sc_ver->add_option("--pairs", ve.pairs, "Sampled vertex pairs");
  sc_ver->add_option("--orders", ve.orders, "Stream orders per pair");
  sc_ver->add_option("--leaf-guard", ve.leaf_guard,
                     "Exact-reach state-space guard");

  ParamsOpts pa;
  auto* sc_par = app.add_subcommand("params",
                                    "Exact theoretical parameter calculator");
  sc_par->add_option("--q", pa.q, "Radius parameter");
  sc_par->add_option("--family-size", pa.family_size,
                     "Size of the forbidden-structure type family");
  sc_par->add_option("--cst", pa.cst, "Stream collection constant, as p/q");
  sc_par->add_option("--crude-palette", pa.crude_palette,
                     "Also print the crude family-size bound for this palette");

  // Global flags may appear before or after the subcommand name.
  for (auto* sub : {sc_gen, sc_rbfs, sc_col, sc_test, sc_est, sc_orc, sc_ver,
                    sc_par})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
    if (*sc_gen) return run_generate(g, gen);
    if (*sc_rbfs) return run_rbfs(g, rb);
    if (*sc_col) return run_rbfs(g, col);
    if (*sc_test) return run_test(g, te);
    if (*sc_est) return run_estimate(g, es);
    if (*sc_orc) return run_oracle(g, orc);
    if (*sc_ver) return run_verify(g, ve);
    if (*sc_par) return run_params(g, pa);
    std::cerr << "no subcommand selected\n";
    return kExitError;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  } catch (const discprobe::Error& e) {
    std::cerr << json{{"error", {{"code", e.code()}, {"message", e.what()}}}}.dump()
              << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", {{"code", "Internal"}, {"message", e.what()}}}}.dump()
              << "\n";
    return kExitError;
  }
}
