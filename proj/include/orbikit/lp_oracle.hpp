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

// Ground truth for small instances: brute-force enumerators and an exact
// rational simplex. Nothing here is fast; everything here is exact.

#ifndef ORBIKIT_LP_ORACLE_HPP_
#define ORBIKIT_LP_ORACLE_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "orbikit/core.hpp"
#include "orbikit/digraph.hpp"
#include "orbikit/lifting.hpp"
#include "orbikit/linear_system.hpp"

namespace orbikit {

// Default limits on p; exceeding them throws Error(kSizeCap).
inline constexpr int kMaxEnumerationP = 8;
inline constexpr int kMaxExtendedPointsP = 5;

/// All vertices of the orbitope, in lexicographic order of the row choices
/// (row i picks column c_i, 0 meaning an empty row).
std::vector<OrbiMatrix> EnumerateVertices(const Params& params, Kind kind,
                                          int max_p = kMaxEnumerationP);

/// All s-t paths of D(p,q) by depth-first search (vertical before diagonal).
std::vector<DirectedPath> EnumeratePaths(const Params& params,
                                         int max_p = kMaxEnumerationP);

/// Number of s-t paths by a topological sweep; no size limit.
mpz_class CountPaths(const Params& params);

/// Every (x, y) in the extended system with x, y both 0/1. Rows are
/// independent once y is fixed, so each row's feasible patterns are listed
/// and combined.
std::vector<ExtendedPoint> EnumerateIntegralExtendedPoints(
    const Params& params, Kind kind, int max_p = kMaxExtendedPointsP);

/// max <d, v> over the given vertices.
Rational BruteForceMax(const std::vector<OrbiMatrix>& vertices,
                       const OrbiMatrix& d);

struct SimplexResult {
  Rational value;
  /// One value per system variable.
  std::vector<Rational> point;
  /// Labels of the basic columns at optimality, e.g. "x_1_1+", "slack:row_2".
  std::vector<std::string> basis;
  /// Some basic variable sits at zero.
  bool degenerate = false;
  std::size_t pivots = 0;
};

/// Dense rational tableau simplex with Bland's rule.
///
/// Columns are the system variables shifted to their lower bounds (or
/// mirrored at their upper bound, or split into two halves when free), plus
/// one slack per inequality row. Phase I runs once in the constructor; each
/// Maximize call then runs Phase II from the last optimal basis, which stays
/// primal feasible because only the objective changes.
class SimplexSolver {
 public:
  /// Throws Error(kInfeasible).
  explicit SimplexSolver(const LinearSystem& system);
  ~SimplexSolver();
  SimplexSolver(const SimplexSolver&) = delete;
  SimplexSolver& operator=(const SimplexSolver&) = delete;

  /// Optimizes the given objective (minimization is handled by negation).
  /// Throws Error(kUnbounded).
  SimplexResult Optimize(const Objective& objective);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Optimizes system.objective() (zero objective if none).
SimplexResult SimplexMax(const LinearSystem& system);

}  // namespace orbikit

#endif  // ORBIKIT_LP_ORACLE_HPP_
