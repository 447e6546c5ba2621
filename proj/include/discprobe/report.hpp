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

#include <ctime>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "discprobe/analysis.hpp"
#include "discprobe/disc.hpp"
#include "discprobe/exact.hpp"
#include "discprobe/forbidden.hpp"
#include "discprobe/testers.hpp"

namespace discprobe {

// Reports are JSON objects whose keys nlohmann::json stores sorted, so the
// serialized bytes depend only on the content: identical (config, seed)
// inputs produce identical report bodies. Anything time-dependent goes into
// the separate "meta" object, never into "config" or "result".

inline nlohmann::json to_json(const Estimate& e) {
  return {{"value", e.value}, {"std_error", e.std_error}, {"trials", e.trials}};
}

inline nlohmann::json to_json(const Witness& w) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : w.edges) edges.push_back({u, v});
  return {{"kind", w.kind}, {"vertices", w.vertices}, {"edges", edges}};
}

inline nlohmann::json to_json(const Match& m) {
  return {{"pattern", m.pattern}, {"witness", to_json(m.witness)}};
}

inline nlohmann::json to_json(const Transcript& t) {
  return {{"queries", t.queries},
          {"roots", t.roots},
          {"reserved_words", t.reserved_words},
          {"used_words", t.used_words},
          {"growth_events", t.growth_events},
          {"exact_path", t.exact_path}};
}

inline nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j{{"reject", v.reject},
                   {"witness_checked", v.witness_checked},
                   {"transcript", to_json(v.transcript)}};
  if (v.match) j["match"] = to_json(*v.match);
  return j;
}

inline nlohmann::json to_json(const Disc& d) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : d.edges) edges.push_back({u, v});
  nlohmann::json depth = nlohmann::json::object();
  for (auto [v, dist] : d.depth) depth[std::to_string(v)] = dist;
  nlohmann::json j{{"root", d.root},
                   {"vertices", d.vertices},
                   {"edges", edges},
                   {"depth", depth}};
  if (!d.colors.empty()) {
    nlohmann::json colors = nlohmann::json::object();
    for (auto [v, c] : d.colors) colors[std::to_string(v)] = c;
    j["colors"] = colors;
  }
  return j;
}

inline nlohmann::json to_json(const LemmaCheck& c) {
  return {{"name", c.name},
          {"applicable", c.applicable},
          {"passed", c.passed},
          {"detail", c.detail}};
}

inline nlohmann::json to_json(const TheoreticalParams& p) {
  return {{"q", p.q},
          {"family_size", p.family_size.get_str()},
          {"cst", rational_str(p.cst)},
          {"c_q", p.c_q.get_str()},
          {"q_pow_2q", p.q_pow_2q.get_str()},
          {"c_prime_q", p.c_prime_q.get_str()},
          {"delta", rational_str(p.delta)},
          {"alpha", rational_str(p.alpha)},
          {"alpha0", rational_str(p.alpha0)},
          {"s_min", p.s_min.get_str()},
          {"n0", rational_str(p.n0)},
          {"n0_ceil", p.n0_ceil.get_str()}};
}

// Disc-type distribution as {canonical code hex: probability}.
inline nlohmann::json to_json(const std::map<CanonicalCode, mpq_class>& dist) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [code, p] : dist) j[code_hex(code)] = rational_str(p);
  return j;
}

inline nlohmann::json to_json(const TypeFrequencies& f) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [code, c] : f.counts) counts[code_hex(code)] = c;
  return {{"trials", f.trials}, {"counts", counts}};
}

inline std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

// Assembles the report envelope. The deterministic body holds the command,
// the fully resolved configuration, and the result; wall-clock data lives
// only under "meta".
inline nlohmann::json make_report(const std::string& command,
                                  nlohmann::json config, nlohmann::json result,
                                  bool with_meta = true) {
  nlohmann::json j{{"command", command},
                   {"config", std::move(config)},
                   {"result", std::move(result)}};
  if (with_meta) j["meta"] = {{"timestamp", utc_timestamp()}};
  return j;
}

// Minimal CSV writer: quotes only fields that need it.
inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

inline void write_csv(std::ostream& out, const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out << ',';
    out << csv_escape(header[i]);
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << csv_escape(row[i]);
    }
    out << '\n';
  }
}

}  // namespace discprobe
