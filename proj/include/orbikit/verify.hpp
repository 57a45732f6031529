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

// Exact cross-checks of the library against the brute-force oracles. Each
// Check* function examines one (p, q) and reports instead of throwing; the
// suites bundle them for `orbikit verify`.

#ifndef ORBIKIT_VERIFY_HPP_
#define ORBIKIT_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "orbikit/core.hpp"
#include "orbikit/json_io.hpp"
#include "orbikit/random.hpp"

namespace orbikit {

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::size_t instances = 0;
  /// Human-readable summary, e.g. "1 SCIs checked against 5 vertices".
  std::string detail;
  /// First failure, empty if passed.
  std::string failure;

  void Fail(const std::string& what) {
    if (passed) failure = what;
    passed = false;
  }
};

Json CheckToJson(const CheckResult& c);

// Random inputs. All integers come from Rng::Uniform.

/// Integer objective with entries in [lo, hi].
OrbiMatrix RandomObjective(const Params& params, Rng& rng, int lo = -9, int hi = 9);
/// Convex combination of 1 to 4 of the given vertices with weights in 1..9.
OrbiMatrix RandomConvexCombination(const std::vector<OrbiMatrix>& vertices, Rng& rng);
/// Each row gets nonnegative weights in 0..3 for its cells and for a slack;
/// the cells receive their share of the row total, so rows sum to <= 1.
OrbiMatrix RandomSubstochastic(const Params& params, Rng& rng);

/// Packing and partitioning optimizers (rational and int64 paths) against
/// the brute-force vertex maximum.
CheckResult CheckOptimizer(const Params& params, Rng& rng, int objectives);
/// Simplex over the extended system equals the optimizer's value, and some
/// integral extended point attains it.
CheckResult CheckExtendedLp(const Params& params, Kind kind, Rng& rng, int objectives);
/// Simplex over the compact system with the objective moved to z-space.
CheckResult CheckCompactLp(const Params& params, Kind kind, Rng& rng, int objectives);
/// x-parts of the integral extended points are exactly the vertices, and
/// every vertex lifts to an integral point.
CheckResult CheckProjection(const Params& params, Kind kind);
/// Simplex over the SCI system equals the optimizer's value. Integrality of
/// the simplex point is reported in the detail, not required.
CheckResult CheckSciLp(const Params& params, Kind kind, Rng& rng, int objectives);
/// Every SCI holds at every packing vertex.
CheckResult CheckSciValidity(const Params& params);
/// Lift of random points of the packing orbitope: unit flow, capacities,
/// saturated diagonals before verticals, and the bar constraints.
CheckResult CheckLifting(const Params& params, Rng& rng, int points);
/// Cut identities for every s-t path flow and every path G from a diagonal
/// node or from column 0 to a cell (i,j):
///   [G starts in column 0] + y(diag_in(S)) - y(vert_out(T)) = y(bar(i,j)),
///   diag_in(N(G)) = diag_in(S) and vert_out(N(G) - (i,j)) = vert_out(T) up
///   to a final vertical arc of G, and the column identity.
CheckResult CheckCutIdentities(const Params& params);
/// ToCompact and FromCompact are inverse bijections between the integral
/// points of the extended and compact systems.
CheckResult CheckCompactBijection(const Params& params, Kind kind);
/// Compact system: fewer than 2pq variables, 4pq rows with two or more
/// nonzeros, and 10pq nonzeros.
CheckResult CheckSizeBounds(const Params& params);
/// Separation on random substochastic points against the exhaustive scan.
CheckResult CheckSeparation(const Params& params, Rng& rng, int points);

enum class Suite { kAll, kCuts, kIntegrality, kProjection, kSci, kTransform };

Suite ParseSuite(const std::string& name);
const char* SuiteName(Suite suite);

struct VerifyReport {
  Params params;
  Suite suite;
  std::uint64_t seed;
  std::vector<CheckResult> checks;

  bool passed() const;
  Json ToJson() const;
};

/// Runs the suite with fixed instance counts (100 objectives, 500 points).
/// Throws Error(kSizeCap) if p exceeds an enumeration limit.
VerifyReport RunSuite(const Params& params, Suite suite, std::uint64_t seed);

}  // namespace orbikit

#endif  // ORBIKIT_VERIFY_HPP_
