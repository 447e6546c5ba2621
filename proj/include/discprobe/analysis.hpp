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

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "discprobe/disc.hpp"
#include "discprobe/errors.hpp"
#include "discprobe/exact.hpp"
#include "discprobe/graph.hpp"
#include "discprobe/oracle.hpp"
#include "discprobe/rbfs.hpp"
#include "discprobe/rng.hpp"
#include "discprobe/stream.hpp"

namespace discprobe {

// A Monte Carlo point estimate with its binomial standard error.
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;
};

namespace detail {

inline int clamp_threads(int threads, std::uint64_t trials) {
  if (threads < 1) threads = 1;
  if (static_cast<std::uint64_t>(threads) > trials && trials > 0)
    threads = static_cast<int>(trials);
  return threads;
}

// Splits `trials` across workers; fn(worker, first_trial, count) must write
// only to its own slot so the merged result is deterministic.
template <typename Fn>
inline void parallel_trials(std::uint64_t trials, int threads, Fn fn) {
  if (threads <= 1) {
    fn(0, static_cast<std::uint64_t>(0), trials);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(threads));
  std::uint64_t base = trials / static_cast<std::uint64_t>(threads);
  std::uint64_t rem = trials % static_cast<std::uint64_t>(threads);
  std::uint64_t start = 0;
  for (int t = 0; t < threads; ++t) {
    std::uint64_t count = base + (static_cast<std::uint64_t>(t) < rem ? 1 : 0);
    workers.emplace_back(fn, t, start, count);
    start += count;
  }
  for (auto& w : workers) w.join();
}

inline double binomial_se(double p, std::uint64_t trials) {
  if (trials == 0) return 0.0;
  return std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(trials));
}

}  // namespace detail

// Estimates, for every vertex, the probability that a radius-q exploration
// from a uniformly random start visits it. Deterministic for fixed
// (seed, trials, threads).
inline std::vector<Estimate> estimate_reach_all(const Graph& g, int q,
                                                std::uint64_t trials,
                                                std::uint64_t seed,
                                                int threads = 1) {
  const int n = g.vertex_count();
  if (n == 0) throw EmptyGraph();
  if (trials == 0) throw InsufficientTrials("reach estimation needs trials > 0");
  threads = detail::clamp_threads(threads, trials);
  std::vector<std::vector<std::uint64_t>> counts(
      static_cast<std::size_t>(threads),
      std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
  detail::parallel_trials(trials, threads,
                          [&](int t, std::uint64_t, std::uint64_t count) {
    QueryOracle oracle(g, derive_seed(seed, 1000 + static_cast<std::uint64_t>(t)));
    auto& mine = counts[static_cast<std::size_t>(t)];
    for (std::uint64_t i = 0; i < count; ++i) {
      int v = oracle.random_vertex();
      Disc d = random_bfs(oracle, v, q);
      for (int w : d.vertices) ++mine[static_cast<std::size_t>(w)];
    }
  });
  std::vector<Estimate> out(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::uint64_t hits = 0;
    for (int t = 0; t < threads; ++t)
      hits += counts[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)];
    double p = static_cast<double>(hits) / static_cast<double>(trials);
    out[static_cast<std::size_t>(v)] = {p, detail::binomial_se(p, trials), trials};
  }
  return out;
}

inline Estimate estimate_reach_vertex(const Graph& g, int target, int q,
                                      std::uint64_t trials, std::uint64_t seed,
                                      int threads = 1) {
  g.check_vertex(target);
  return estimate_reach_all(g, q, trials, seed, threads)[
      static_cast<std::size_t>(target)];
}

// The estimated set of vertices whose reach probability is at least alpha,
// with a flag for members/non-members whose estimate sits within three
// standard errors of the threshold (the call cannot distinguish those).
struct VAlphaReport {
  double alpha = 0.0;
  std::vector<Estimate> reach;   // per vertex
  std::vector<int> members;      // estimate >= alpha
  std::vector<int> borderline;   // |estimate - alpha| <= 3 * std_error
};

inline VAlphaReport extract_v_alpha(const Graph& g, int q, double alpha,
                                    std::uint64_t trials, std::uint64_t seed,
                                    int threads = 1) {
  VAlphaReport rep;
  rep.alpha = alpha;
  rep.reach = estimate_reach_all(g, q, trials, seed, threads);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const Estimate& e = rep.reach[static_cast<std::size_t>(v)];
    if (e.value >= alpha) rep.members.push_back(v);
    if (std::abs(e.value - alpha) <= 3.0 * e.std_error)
      rep.borderline.push_back(v);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Disc-type frequency sampling (query and stream), with per-thread
// memoization of canonical codes keyed by the concrete disc.
//
// Discs larger than the canonicalization cap (possible for stream
// collections, whose vertex budget is a constant far above it) are binned by
// exact (vertex, edge) count under a reserved marker code instead of being
// typed up to isomorphism. Marker codes start with byte 0xff; genuine codes
// start with the vertex count, which the cap keeps at most 16.

struct TypeFrequencies {
  std::map<CanonicalCode, std::uint64_t> counts;
  std::uint64_t trials = 0;
};

// Canonical type of a disc, or its size bin when it is too large to
// canonicalize (see above).
inline CanonicalCode type_code(const Disc& d,
                               ColorMode mode = ColorMode::kPartition) {
  if (static_cast<int>(d.vertices.size()) <= kCanonicalCap)
    return canonical_code(d, mode);
  CanonicalCode bin;
  bin.push_back(0xff);
  detail::put_u32(bin, static_cast<std::uint32_t>(d.vertices.size()));
  detail::put_u32(bin, static_cast<std::uint32_t>(d.edges.size()));
  return bin;
}

inline TypeFrequencies sample_rbfs_types(const Graph& g, int root, int q,
                                         std::uint64_t trials, std::uint64_t seed,
                                         const std::map<int, int>* colors = nullptr,
                                         ColorMode mode = ColorMode::kPartition,
                                         int threads = 1) {
  g.check_vertex(root);
  if (trials == 0) throw InsufficientTrials("type sampling needs trials > 0");
  threads = detail::clamp_threads(threads, trials);
  std::vector<std::map<CanonicalCode, std::uint64_t>> parts(
      static_cast<std::size_t>(threads));
  detail::parallel_trials(trials, threads,
                          [&](int t, std::uint64_t, std::uint64_t count) {
    QueryOracle oracle(g, derive_seed(seed, 2000 + static_cast<std::uint64_t>(t)));
    std::map<DiscKey, CanonicalCode> cache;
    auto& mine = parts[static_cast<std::size_t>(t)];
    for (std::uint64_t i = 0; i < count; ++i) {
      Disc d = random_bfs(oracle, root, q);
      DiscKey key = d.key();
      auto it = cache.find(key);
      if (it == cache.end()) {
        if (colors) d.apply_coloring(*colors);
        it = cache.emplace(std::move(key),
                           type_code(d, mode)).first;
      }
      ++mine[it->second];
    }
  });
  TypeFrequencies out;
  out.trials = trials;
  for (const auto& part : parts)
    for (const auto& [code, c] : part) out.counts[code] += c;
  return out;
}

inline TypeFrequencies sample_stream_types(const Graph& g, int root, int q,
                                           std::uint64_t trials, std::uint64_t seed,
                                           const std::map<int, int>* colors = nullptr,
                                           ColorMode mode = ColorMode::kPartition,
                                           int threads = 1) {
  g.check_vertex(root);
  if (trials == 0) throw InsufficientTrials("type sampling needs trials > 0");
  threads = detail::clamp_threads(threads, trials);
  std::vector<std::map<CanonicalCode, std::uint64_t>> parts(
      static_cast<std::size_t>(threads));
  detail::parallel_trials(trials, threads,
                          [&](int t, std::uint64_t first, std::uint64_t count) {
    CollectorState collector(q);
    std::map<DiscKey, CanonicalCode> cache;
    auto& mine = parts[static_cast<std::size_t>(t)];
    const auto& edges = g.edges();
    std::vector<int> order(edges.size());
    for (std::uint64_t i = 0; i < count; ++i) {
      std::iota(order.begin(), order.end(), 0);
      Rng rng(derive_seed(seed, 3000000 + first + i));
      rng.shuffle(order);
      collector.reset(root);
      for (int idx : order) {
        auto [a, b] = edges[static_cast<std::size_t>(idx)];
        collector.offer(a, b);
      }
      Disc d = collector.disc();
      DiscKey key = d.key();
      auto it = cache.find(key);
      if (it == cache.end()) {
        if (colors) d.apply_coloring(*colors);
        it = cache.emplace(std::move(key),
                           type_code(d, mode)).first;
      }
      ++mine[it->second];
    }
  });
  TypeFrequencies out;
  out.trials = trials;
  for (const auto& part : parts)
    for (const auto& [code, c] : part) out.counts[code] += c;
  return out;
}

// Total variation distance between an empirical distribution and an exact
// one (missing keys count as zero on either side).
inline double tv_distance(const TypeFrequencies& empirical,
                          const std::map<CanonicalCode, mpq_class>& exact) {
  std::set<CanonicalCode> keys;
  for (const auto& [k, c] : empirical.counts) keys.insert(k);
  for (const auto& [k, p] : exact) keys.insert(k);
  double total = 0.0;
  for (const auto& k : keys) {
    double e = 0.0;
    if (auto it = empirical.counts.find(k); it != empirical.counts.end())
      e = static_cast<double>(it->second) /
          static_cast<double>(empirical.trials);
    double x = 0.0;
    if (auto it = exact.find(k); it != exact.end()) x = it->second.get_d();
    total += std::abs(e - x);
  }
  return 0.5 * total;
}

// ---------------------------------------------------------------------------
// Probabilistic guarantees, checked empirically.

struct LemmaCheck {
  std::string name;
  bool applicable = true;  // whether the statement's preconditions held
  bool passed = false;
  std::string detail;
};

// c_q / alpha bounds the number of vertices with reach >= alpha.
// Exact-rational check, no tolerance.
inline LemmaCheck check_v_alpha_size(const std::vector<mpq_class>& reach, int q,
                                     const mpq_class& alpha) {
  LemmaCheck c{"v-alpha-size", true, false, ""};
  if (alpha <= 0 || alpha >= 1) {
    c.applicable = false;
    c.detail = "requires 0 < alpha < 1";
    return c;
  }
  std::size_t members = 0;
  for (const auto& r : reach)
    if (r >= alpha) ++members;
  mpq_class bound = mpq_class(static_cast<unsigned long>(breadth_bound(q, q))) / alpha;
  c.passed = mpq_class(static_cast<unsigned long>(members)) <= bound;
  c.detail = "|V_alpha| = " + std::to_string(members) +
             ", bound = " + rational_str(bound);
  return c;
}

// Every non-isolated vertex with reach >= alpha has degree >= n*alpha/c_q.
// Exact-rational check on non-isolated vertices.
inline LemmaCheck check_degree_lower_bound(const Graph& g,
                                           const std::vector<mpq_class>& reach,
                                           int q, const mpq_class& alpha) {
  LemmaCheck c{"v-alpha-degree", true, true, ""};
  if (alpha <= 0 || alpha > 1) {
    c.applicable = false;
    c.passed = false;
    c.detail = "requires 0 < alpha <= 1";
    return c;
  }
  mpq_class threshold = mpq_class(g.vertex_count()) * alpha /
                        mpq_class(static_cast<unsigned long>(breadth_bound(q, q)));
  int checked = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) continue;  // guarantee covers non-isolated vertices
    if (reach[static_cast<std::size_t>(v)] < alpha) continue;
    ++checked;
    if (mpq_class(g.degree(v)) < threshold) {
      c.passed = false;
      c.detail = "vertex " + std::to_string(v) + " has degree " +
                 std::to_string(g.degree(v)) + " < " + rational_str(threshold);
      return c;
    }
  }
  c.detail = "checked " + std::to_string(checked) +
             " members against degree bound " + rational_str(threshold);
  return c;
}

// The expected number of vertices a radius-q exploration visits is at most
// c_q. Exact form: sum_v r(v) <= c_q.
inline LemmaCheck check_mean_explored_exact(const std::vector<mpq_class>& reach,
                                            int q) {
  LemmaCheck c{"mean-explored-exact", true, false, ""};
  mpq_class total(0);
  for (const auto& r : reach) total += r;
  mpq_class bound(static_cast<unsigned long>(breadth_bound(q, q)));
  c.passed = total <= bound;
  c.detail = "sum of reach = " + rational_str(total) +
             ", bound = " + rational_str(bound);
  return c;
}

// Monte Carlo form of the same bound, with a three-standard-error margin.
inline LemmaCheck check_mean_explored_mc(const Graph& g, int q,
                                         std::uint64_t trials,
                                         std::uint64_t seed, int threads = 1) {
  LemmaCheck c{"mean-explored-mc", true, false, ""};
  if (trials < 2) throw InsufficientTrials("need at least 2 trials");
  threads = detail::clamp_threads(threads, trials);
  std::vector<double> sums(static_cast<std::size_t>(threads), 0.0);
  std::vector<double> sqsums(static_cast<std::size_t>(threads), 0.0);
  detail::parallel_trials(trials, threads,
                          [&](int t, std::uint64_t, std::uint64_t count) {
    QueryOracle oracle(g, derive_seed(seed, 4000 + static_cast<std::uint64_t>(t)));
    for (std::uint64_t i = 0; i < count; ++i) {
      int v = oracle.random_vertex();
      Disc d = random_bfs(oracle, v, q);
      double x = static_cast<double>(d.vertices.size());
      sums[static_cast<std::size_t>(t)] += x;
      sqsums[static_cast<std::size_t>(t)] += x * x;
    }
  });
  double sum = 0.0, sq = 0.0;
  for (int t = 0; t < threads; ++t) {
    sum += sums[static_cast<std::size_t>(t)];
    sq += sqsums[static_cast<std::size_t>(t)];
  }
  double tn = static_cast<double>(trials);
  double mean = sum / tn;
  double var = std::max(0.0, (sq - tn * mean * mean) / (tn - 1.0));
  double se = std::sqrt(var / tn);
  double bound = static_cast<double>(breadth_bound(q, q));
  c.passed = mean <= bound + 3.0 * se;
  std::ostringstream os;
  os << "mean = " << mean << " (se " << se << "), bound = " << bound;
  c.detail = os.str();
  return c;
}

// Two explorations from independent uniform starts share an edge with
// probability at most q * c_q * 2 * alpha, provided n >= q * c_q / alpha^2.
inline LemmaCheck check_rbfs_edge_sharing(const Graph& g, int q, double alpha,
                                          std::uint64_t pair_trials,
                                          std::uint64_t seed, int threads = 1) {
  LemmaCheck c{"rbfs-edge-sharing", true, false, ""};
  double cq = static_cast<double>(breadth_bound(q, q));
  double gate = static_cast<double>(q) * cq / (alpha * alpha);
  if (static_cast<double>(g.vertex_count()) < gate) {
    c.applicable = false;
    c.detail = "requires n >= q*c_q/alpha^2 = " + std::to_string(gate);
    return c;
  }
  if (pair_trials == 0) throw InsufficientTrials("need pair trials > 0");
  threads = detail::clamp_threads(threads, pair_trials);
  std::vector<std::uint64_t> shared(static_cast<std::size_t>(threads), 0);
  detail::parallel_trials(pair_trials, threads,
                          [&](int t, std::uint64_t, std::uint64_t count) {
    QueryOracle oracle(g, derive_seed(seed, 5000 + static_cast<std::uint64_t>(t)));
    for (std::uint64_t i = 0; i < count; ++i) {
      int u = oracle.random_vertex();
      int v = oracle.random_vertex();
      Disc du = random_bfs(oracle, u, q);
      Disc dv = random_bfs(oracle, v, q);
      std::vector<VertexPair> common;
      std::set_intersection(du.edges.begin(), du.edges.end(), dv.edges.begin(),
                            dv.edges.end(), std::back_inserter(common));
      if (!common.empty()) ++shared[static_cast<std::size_t>(t)];
    }
  });
  std::uint64_t hits = 0;
  for (auto s : shared) hits += s;
  double p = static_cast<double>(hits) / static_cast<double>(pair_trials);
  double se = detail::binomial_se(p, pair_trials);
  double bound = static_cast<double>(q) * cq * 2.0 * alpha;
  c.passed = p <= bound + 3.0 * se;
  std::ostringstream os;
  os << "share rate = " << p << " (se " << se << "), bound = " << bound;
  c.detail = os.str();
  return c;
}

// Stream analogue: for a uniformly random pair (u, v), the probability
// (over the order) that their collectors share an edge exceeds
// sqrt(alpha_0) for at most a 2*sqrt(alpha_0) fraction of pairs, where
// alpha_0 = alpha * q^{2q} * c'_q, provided n >= q^{2q} * c'_q / alpha^2.
inline LemmaCheck check_stream_edge_sharing(const Graph& g, int q, double alpha,
                                            std::uint64_t pairs,
                                            std::uint64_t orders_per_pair,
                                            std::uint64_t seed,
                                            int threads = 1) {
  LemmaCheck c{"stream-edge-sharing", true, false, ""};
  double budget = static_cast<double>(degree_budget(q));
  double cpq = static_cast<double>(collector_vertex_bound(q));
  double gate = budget * cpq / (alpha * alpha);
  if (static_cast<double>(g.vertex_count()) < gate) {
    c.applicable = false;
    c.detail = "requires n >= q^(2q)*c'_q/alpha^2 = " + std::to_string(gate);
    return c;
  }
  if (pairs == 0 || orders_per_pair == 0)
    throw InsufficientTrials("need pairs > 0 and orders_per_pair > 0");
  double alpha0 = alpha * budget * cpq;
  double y_cap = std::sqrt(alpha0);
  threads = detail::clamp_threads(threads, pairs);
  std::vector<std::uint64_t> bad(static_cast<std::size_t>(threads), 0);
  detail::parallel_trials(pairs, threads,
                          [&](int t, std::uint64_t first, std::uint64_t count) {
    Rng rng(derive_seed(seed, 6000 + static_cast<std::uint64_t>(t)));
    CollectorState cu(q), cv(q);
    const auto& edges = g.edges();
    std::vector<int> order(edges.size());
    const int n = g.vertex_count();
    for (std::uint64_t i = 0; i < count; ++i) {
      int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      std::uint64_t share = 0;
      for (std::uint64_t r = 0; r < orders_per_pair; ++r) {
        std::iota(order.begin(), order.end(), 0);
        Rng order_rng(derive_seed(seed, 7000000 + (first + i) * orders_per_pair + r));
        order_rng.shuffle(order);
        cu.reset(u);
        cv.reset(v);
        for (int idx : order) {
          auto [a, b] = edges[static_cast<std::size_t>(idx)];
          cu.offer(a, b);
          cv.offer(a, b);
        }
        Disc du = cu.disc();
        Disc dv = cv.disc();
        std::vector<VertexPair> common;
        std::set_intersection(du.edges.begin(), du.edges.end(),
                              dv.edges.begin(), dv.edges.end(),
                              std::back_inserter(common));
        if (!common.empty()) ++share;
      }
      double y = static_cast<double>(share) / static_cast<double>(orders_per_pair);
      if (y > y_cap) ++bad[static_cast<std::size_t>(t)];
    }
  });
  std::uint64_t total_bad = 0;
  for (auto b : bad) total_bad += b;
  double frac = static_cast<double>(total_bad) / static_cast<double>(pairs);
  double se = detail::binomial_se(frac, pairs);
  double bound = 2.0 * std::sqrt(alpha0);
  c.passed = frac <= bound + 3.0 * se;
  std::ostringstream os;
  os << "bad-pair rate = " << frac << " (se " << se << "), bound = " << bound
     << ", per-pair cap = " << y_cap;
  c.detail = os.str();
  return c;
}

// ---------------------------------------------------------------------------
// Exact parameter calculator.

struct TheoreticalParams {
  int q = 1;
  mpz_class family_size;  // |H_q|, supplied (see family_size_crude_bound)
  mpq_class cst;          // stream collection constant, supplied
  mpz_class c_q;          // sum_{i<=q} q^i
  mpz_class q_pow_2q;     // q^{2q}
  mpz_class c_prime_q;    // sum_{i<=q+1} q^{2qi}
  mpq_class delta;        // 1 / (200 |H_q|)
  mpq_class alpha;        // delta^6 / (6400 |H_q|^2 q^{2q} c'_q)
  mpq_class alpha0;       // alpha * q^{2q} * c'_q
  mpz_class s_min;        // max(ceil for 1/(20 sqrt(alpha0)), ceil(5000|H_q|/(cst delta^3)))
  mpq_class n0;           // q * c_q / alpha^2
  mpz_class n0_ceil;
};

namespace detail {

inline mpz_class ceil_mpq(const mpq_class& r) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return out;
}

inline mpq_class pow_mpq(const mpq_class& base, unsigned exp) {
  mpq_class r(1);
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

// Smallest integer k >= 1 with 400 * k^2 * alpha0 >= 1.
inline mpz_class min_sqrt_samples(const mpq_class& alpha0) {
  if (alpha0 <= 0) throw InvalidParameter("alpha0 must be positive");
  // k ~ sqrt(den / (400 num)); start below and walk up.
  mpz_class target = alpha0.get_den() / (400 * alpha0.get_num());
  mpz_class k = sqrt(target);
  while (k > 1 && 400 * (k - 1) * (k - 1) * alpha0 >= 1) --k;
  while (400 * k * k * alpha0 < 1 || k < 1) ++k;
  return k;
}

}  // namespace detail

inline TheoreticalParams theoretical_params(int q, const mpz_class& family_size,
                                            const mpq_class& cst) {
  if (q < 1) throw InvalidParameter("q must be >= 1");
  if (family_size < 1) throw InvalidParameter("family size must be >= 1");
  if (cst <= 0 || cst > 1) throw InvalidParameter("cst must be in (0, 1]");
  TheoreticalParams p;
  p.q = q;
  p.family_size = family_size;
  p.cst = cst;
  p.c_q = 0;
  mpz_class pw = 1;
  for (int i = 0; i <= q; ++i) {
    p.c_q += pw;
    pw *= q;
  }
  mpz_ui_pow_ui(p.q_pow_2q.get_mpz_t(), static_cast<unsigned long>(q),
                static_cast<unsigned long>(2 * q));
  p.c_prime_q = 0;
  pw = 1;
  for (int i = 0; i <= q + 1; ++i) {
    p.c_prime_q += pw;
    pw *= p.q_pow_2q;
  }
  p.delta = mpq_class(1) / (mpq_class(200) * mpq_class(family_size));
  p.alpha = detail::pow_mpq(p.delta, 6) /
            (mpq_class(6400) * mpq_class(family_size) * mpq_class(family_size) *
             mpq_class(p.q_pow_2q) * mpq_class(p.c_prime_q));
  p.alpha0 = p.alpha * mpq_class(p.q_pow_2q) * mpq_class(p.c_prime_q);
  mpz_class s1 = detail::min_sqrt_samples(p.alpha0);
  mpq_class s2q = mpq_class(5000) * mpq_class(family_size) /
                  (cst * detail::pow_mpq(p.delta, 3));
  mpz_class s2 = detail::ceil_mpq(s2q);
  p.s_min = s1 > s2 ? s1 : s2;
  p.n0 = mpq_class(q) * mpq_class(p.c_q) / detail::pow_mpq(p.alpha, 2);
  p.n0_ceil = detail::ceil_mpq(p.n0);
  return p;
}

// A deliberately crude upper bound on the number of colored bounded disc
// types with at most c_q vertices and at most `palette` colors: every
// labeled graph on c_q vertices, times colorings, times root choices. Meant
// only to show how fast the exact parameters explode.
inline mpz_class family_size_crude_bound(int q, int palette) {
  if (q < 1 || palette < 0) throw InvalidParameter("bad family bound inputs");
  mpz_class cq(static_cast<unsigned long>(breadth_bound(q, q)));
  mpz_class pairs = cq * (cq - 1) / 2;
  mpz_class graphs;
  mpz_ui_pow_ui(graphs.get_mpz_t(), 2, static_cast<unsigned long>(pairs.get_ui()));
  mpz_class colorings;
  mpz_ui_pow_ui(colorings.get_mpz_t(), static_cast<unsigned long>(palette + 1),
                static_cast<unsigned long>(cq.get_ui()));
  return graphs * colorings * cq;
}

// Chi-square goodness-of-fit statistic against a uniform distribution, plus
// the 0.99-quantile critical values for small degrees of freedom.
inline double chi_square_uniform(const std::vector<std::uint64_t>& counts) {
  if (counts.size() < 2) throw InvalidParameter("need at least two buckets");
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  if (total == 0) throw InsufficientTrials("empty sample");
  double expect = static_cast<double>(total) / static_cast<double>(counts.size());
  double stat = 0.0;
  for (auto c : counts) {
    double d = static_cast<double>(c) - expect;
    stat += d * d / expect;
  }
  return stat;
}

inline double chi_square_critical_99(int df) {
  static const double table[] = {6.635, 9.210, 11.345, 13.277,
                                 15.086, 16.812, 18.475};
  if (df < 1 || df > 7)
    throw InvalidParameter("critical value table covers df 1..7");
  return table[df - 1];
}

}  // namespace discprobe
