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

// Constraint systems for the orbitopes and the change of variables between
// the flow-based extended formulation and the compact (z, w) formulation.
//
// Variable names:
//   x_i_j        cell (i, j)
//   y_s          source arc          y_t_j     sink arc (p, j) -> t
//   y_v_i_j      Vertical(i, j)      y_d_i_j   Diagonal(i, j)
//   z_i_j        x(B(i,j))           w_i_j     flow entering Vbar(i,j) along
//                                              diagonal arcs

#ifndef ORBIKIT_FORMULATIONS_HPP_
#define ORBIKIT_FORMULATIONS_HPP_

#include <string>
#include <vector>

#include "orbikit/core.hpp"
#include "orbikit/digraph.hpp"
#include "orbikit/lifting.hpp"
#include "orbikit/linear_system.hpp"

namespace orbikit {

std::string CellVarName(char prefix, int i, int j);  // e.g. "x_3_2"
std::string ArcVarName(const Arc& a);

/// Variables: x (cells, free) then y (arcs, >= 0). Rows: conservation at
/// every grid node, unit source flow, y_d(i-1,j-1) <= x_ij and
/// x(B(i,j)) <= y(diag_in(Vbar(i,j))) for every cell; partitioning adds
/// x(row(i)) = 1.
LinearSystem ExtendedSystem(const Params& params, Kind kind);

/// Variables z then w (cells, free) and the rows
///   diag_i_j   w(i+1,j+1) - w(i,j+1)            >= 0
///   vert_i_j   w(i,j) - w(i+1,j+1)              >= 0   (i < p)
///   top        w(p,1)                           <= 1
///   cap_i_j    w(i,j) - w(i-1,j) - z(i,j) + z(i,j+1) <= 0
///   bar_i_j    z(i,j) - w(i,j)                  <= 0
///   last_i     w(i,q(i))                        >= 0
/// where terms indexed outside the index set are dropped. Partitioning adds
/// w(1,1) = 1 and the row sums z(i,1) = 1.
LinearSystem CompactSystem(const Params& params, Kind kind);

struct CompactPoint {
  CellArray<Rational> z;
  CellArray<Rational> w;

  friend bool operator==(const CompactPoint&, const CompactPoint&) = default;
};

/// z(i,j) = x(B(i,j)), w(i,j) = y(diag_in(Vbar(i,j))).
CompactPoint ToCompact(const ExtendedPoint& point);
/// Inverse of ToCompact on the extended polytope (arc flows other than
/// diagonals are recovered from the flow identities).
ExtendedPoint FromCompact(const CompactPoint& point);

/// Empty iff point is feasible for ExtendedSystem(kind); otherwise names the
/// first violated condition. Checks the constraints directly on (x, y).
std::string ExtendedViolation(const ExtendedPoint& point, Kind kind);
inline bool IsExtendedFeasible(const ExtendedPoint& point, Kind kind) {
  return ExtendedViolation(point, kind).empty();
}

/// Point vectors in the variable order of the systems above.
std::vector<Rational> ToVector(const ExtendedPoint& point);
std::vector<Rational> ToVector(const CompactPoint& point);
ExtendedPoint ExtendedFromVector(const Params& params,
                                 const std::vector<Rational>& v);
CompactPoint CompactFromVector(const Params& params,
                               const std::vector<Rational>& v);

/// The objective <d, x> rewritten over z: sum of (d(i,j) - d(i,j-1)) z(i,j)
/// with d(i,0) = 0.
Objective CompactObjective(const LinearSystem& compact, const OrbiMatrix& d);
/// <d, x> over the x variables of an extended or SCI system.
Objective CellObjective(const LinearSystem& system, const OrbiMatrix& d);

}  // namespace orbikit

#endif  // ORBIKIT_FORMULATIONS_HPP_
