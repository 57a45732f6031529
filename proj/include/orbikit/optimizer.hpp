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

// Linear optimization over the packing and partitioning orbitopes in O(pq).
//
// An objective d on the cells is turned into arc lengths on D(p,q):
//   Diagonal(i-1, j-1)  gets  d(i,j)
//   Vertical(i-1, j)    gets  max{0, d(i,1), ..., d(i,j)}   (j >= 1)
// and every other arc gets 0. A longest s-t path under these lengths,
// decoded row by row, is an optimal orbitope vertex with the same value.

#ifndef ORBIKIT_OPTIMIZER_HPP_
#define ORBIKIT_OPTIMIZER_HPP_

#include <cstdint>
#include <vector>

#include "orbikit/core.hpp"
#include "orbikit/digraph.hpp"

namespace orbikit {

using ArcCosts = ArcArray<Rational>;

ArcCosts ComputeArcCosts(const OrbiMatrix& d);

struct LongestPathResult {
  Rational value;
  DirectedPath path;
};

/// Maximum-cost s-t path in one topological sweep. Ties prefer the vertical
/// arc into a node and, at the sink, the lowest column.
LongestPathResult ComputeLongestPath(const ArcCosts& costs);

/// Decodes an s-t path into a 0/1 matrix: a diagonal arc into (i, j) sets
/// x(i,j) = 1; a vertical arc Vertical(i-1, j) with j >= 1 sets x(i,l) = 1
/// for the smallest l in 1..j maximizing d(i,l), provided that maximum is
/// nonnegative.
OrbiMatrix Reconstruct(const DirectedPath& path, const OrbiMatrix& d);

struct OptResult {
  Rational value;
  /// Cells with x = 1, row-major.
  std::vector<Cell> ones;
  DirectedPath path;

  OrbiMatrix Matrix() const {
    return MatrixFromOnes(path.graph().params(), ones);
  }
  Flow PathFlow() const { return PathIncidence(path.graph(), path); }
};

/// max{<d, x> : x in the packing orbitope}. Integer objectives whose path
/// values fit in 62 bits take an int64 fast path with identical results.
OptResult OptimizePacking(const OrbiMatrix& d);
OptResult OptimizePacking(const CellArray<std::int64_t>& d);

/// max{<d, x> : x in the partitioning orbitope}: shifts row i by
/// 1 - min_j d(i,j) so all coefficients are positive, optimizes over the
/// packing orbitope, and reports the unshifted value.
OptResult OptimizePartitioning(const OrbiMatrix& d);
OptResult OptimizePartitioning(const CellArray<std::int64_t>& d);

OptResult Optimize(const OrbiMatrix& d, Kind kind);

}  // namespace orbikit

#endif  // ORBIKIT_OPTIMIZER_HPP_
