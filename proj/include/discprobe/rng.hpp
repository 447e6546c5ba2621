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

#include <cstdint>
#include <vector>

namespace discprobe {

// Stateless 64-bit finalizer (the splitmix64 output mix). Used both as the
// per-step scrambler of Rng and as the documented seed-derivation hash.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Documented scheme for deriving independent worker/trial seeds from one
// master seed:
//
//   derived = mix64(master + 0x9e3779b97f4a7c15 * (index + 1))
//
// The constant is the golden-ratio increment of splitmix64; index + 1 keeps
// derive_seed(master, 0) distinct from the master itself. The scheme is a
// pure function, so any trial can be reproduced in isolation.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master + 0x9e3779b97f4a7c15ULL * (index + 1));
}

// Deterministic pseudorandom generator (splitmix64). We deliberately avoid
// std::uniform_int_distribution, whose mapping from raw bits to a range is
// implementation-defined; all range reduction here is explicit rejection
// sampling, so transcripts are identical across platforms and compilers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Next raw 64-bit value.
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    return mix64(z);
  }

  // Uniform value in [0, bound). bound must be >= 1. Unbiased via rejection.
  std::uint64_t below(std::uint64_t bound) {
    // Largest multiple of bound that fits in 64 bits; values at or above it
    // are rejected so every residue class is equally likely.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  bool coin() { return (next() & 1) != 0; }

  // In-place Fisher-Yates shuffle; uniform over all permutations.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace discprobe
