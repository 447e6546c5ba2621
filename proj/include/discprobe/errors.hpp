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

#include <stdexcept>
#include <string>

namespace discprobe {

// Base class for all library errors. Every error carries a stable
// machine-readable code (returned by code()) plus a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

struct SelfLoop : Error {
  explicit SelfLoop(int u)
      : Error("SelfLoop", "edge (" + std::to_string(u) + "," +
                              std::to_string(u) + ") is a self-loop") {}
};

struct VertexOutOfRange : Error {
  VertexOutOfRange(int u, int n)
      : Error("VertexOutOfRange", "vertex " + std::to_string(u) +
                                      " not in [0, " + std::to_string(n) +
                                      ")") {}
};

struct EmptyGraph : Error {
  EmptyGraph() : Error("EmptyGraph", "graph has no vertices") {}
};

struct NoEdges : Error {
  NoEdges() : Error("NoEdges", "graph has no edges") {}
};

struct DiscTooLarge : Error {
  DiscTooLarge(int n, int cap)
      : Error("DiscTooLarge", "rooted graph has " + std::to_string(n) +
                                  " vertices, canonicalization cap is " +
                                  std::to_string(cap)) {}
};

struct PatternTooLarge : Error {
  PatternTooLarge(int n, int cap)
      : Error("PatternTooLarge", "pattern has " + std::to_string(n) +
                                     " vertices, search cap is " +
                                     std::to_string(cap)) {}
};

struct ColorRepeatedWithinDisc : Error {
  ColorRepeatedWithinDisc(int color)
      : Error("ColorRepeatedWithinDisc",
              "color " + std::to_string(color) +
                  " is used more than once within a single disc") {}
};

struct NotDecomposable : Error {
  explicit NotDecomposable(const std::string& why)
      : Error("NotDecomposable", why) {}
};

struct StateSpaceTooLarge : Error {
  StateSpaceTooLarge(long long size, long long cap)
      : Error("StateSpaceTooLarge",
              "enumeration would visit " + std::to_string(size) +
                  " states, cap is " + std::to_string(cap)) {}
};

struct TooManyEdges : Error {
  TooManyEdges(int m, int cap)
      : Error("TooManyEdges", "graph has " + std::to_string(m) +
                                  " edges, exact enumeration cap is " +
                                  std::to_string(cap)) {}
};

struct InvalidParameter : Error {
  explicit InvalidParameter(const std::string& why)
      : Error("InvalidParameter", why) {}
};

struct InsufficientTrials : Error {
  explicit InsufficientTrials(const std::string& why)
      : Error("InsufficientTrials", why) {}
};

struct IoError : Error {
  explicit IoError(const std::string& why) : Error("Io", why) {}
};

struct InvalidConfig : Error {
  explicit InvalidConfig(const std::string& why)
      : Error("InvalidConfig", why) {}
};

}  // namespace discprobe
