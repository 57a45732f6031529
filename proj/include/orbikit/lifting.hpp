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

#ifndef ORBIKIT_LIFTING_HPP_
#define ORBIKIT_LIFTING_HPP_

#include <optional>
#include <string>

#include "orbikit/core.hpp"
#include "orbikit/digraph.hpp"

namespace orbikit {

/// A point (x, y) of the cell space times the arc space of D(p,q).
struct ExtendedPoint {
  OrbiMatrix x;
  Flow y;

  friend bool operator==(const ExtendedPoint&, const ExtendedPoint&) = default;
};

/// Capacities for the lifting network: Diagonal(i-1, j-1) is capped at
/// x(i,j); every other arc is uncapacitated (nullopt).
class CapacitatedNetwork {
 public:
  explicit CapacitatedNetwork(const OrbiMatrix& x) : x_(x) {}

  const OrbiMatrix& x() const { return x_; }
  std::optional<Rational> Capacity(const Arc& a) const {
    if (a.kind != Arc::Kind::kDiagonal) return std::nullopt;
    return x_(a.i + 1, a.j + 1);
  }
  /// Arc in the residual network of y: not saturated.
  bool IsResidual(const Flow& y, const Arc& a) const {
    const auto cap = Capacity(a);
    return !cap || y[a] < *cap;
  }

 private:
  const OrbiMatrix& x_;
};

/// Empty if y >= 0, y(source arc) = 1 and flow is conserved at every grid
/// node; otherwise a description of the first failure.
std::string UnitFlowViolation(const Flow& y);
inline bool IsUnitFlow(const Flow& y) { return UnitFlowViolation(y).empty(); }

/// y(Vertical(i-1, j-1)) > 0 implies y(Diagonal(i-1, j-1)) = x(i,j), for
/// every cell (i, j).
bool HasSaturatedDiagonals(const OrbiMatrix& x, const Flow& y);

/// Requires x >= 0 and row sums <= 1; throws Error(kInvalidInput)
/// otherwise.
void CheckLiftable(const OrbiMatrix& x);

/// Builds a unit flow that respects the diagonal capacities x and never
/// uses a vertical arc while its sibling diagonal has residual capacity.
/// Starts from the column-0 path and reroutes flow cell by cell in
/// column-major order. If x satisfies every shifted-column inequality then
/// (x, Lift(x)) lies in the extended polytope; if not, the returned flow may
/// violate the bar constraints, which is what separation exploits.
Flow Lift(const OrbiMatrix& x);

/// The 0/1 path flow of a packing vertex: the path enters column j along a
/// diagonal exactly at the row holding the first one of column j.
/// Throws Error(kInvalidInput) if x is not a packing vertex.
Flow LiftVertex(const OrbiMatrix& x);

inline OrbiMatrix Project(const ExtendedPoint& point) { return point.x; }

}  // namespace orbikit

#endif  // ORBIKIT_LIFTING_HPP_
