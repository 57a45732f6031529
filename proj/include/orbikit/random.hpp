// Copyright 2026 The Orbikit Authors
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

#ifndef ORBIKIT_RANDOM_HPP_
#define ORBIKIT_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace orbikit {

/// Reproducible generator: std::mt19937_64 (its output sequence is fixed by
/// the C++ standard) with rejection sampling for bounded integers, so draws
/// are identical across standard libraries. std::uniform_int_distribution
/// is deliberately not used since its algorithm is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  /// Uniform integer in [lo, hi]. Requires lo <= hi.
  std::int64_t Uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == UINT64_MAX) return static_cast<std::int64_t>(Next());
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t draw;
    do {
      draw = Next();
    } while (draw >= limit);
    return lo + static_cast<std::int64_t>(draw % range);
  }

  /// Derives an independent stream for sub-task k.
  Rng Fork(std::uint64_t k) {
    return Rng(Next() ^ (0x9e3779b97f4a7c15ULL * (k + 1)));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace orbikit

#endif  // ORBIKIT_RANDOM_HPP_
