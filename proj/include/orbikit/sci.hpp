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

// Shifted columns and shifted-column inequalities (SCIs).
//
// For an anchor (i, j) with i, j >= 2 and a path G in D(p,q) from a diagonal
// node (l, l), l >= 1, to (i-1, j-1), the shifted column S(G) is the start
// node of G plus every node G enters along a vertical arc. The SCI reads
//
//   x(B(i,j)) <= x(S(G)).
//
// Together with x >= 0 and the row-sum rows, the SCIs describe the packing
// orbitope; the partitioning orbitope is the face where every row sums to 1.

#ifndef ORBIKIT_SCI_HPP_
#define ORBIKIT_SCI_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbikit/core.hpp"
#include "orbikit/digraph.hpp"
#include "orbikit/linear_system.hpp"

namespace orbikit {

struct ShiftedColumn {
  /// S(witness_path), row-major.
  std::vector<Cell> cells;
  /// The (i, j) whose bar forms the other side of the inequality.
  Cell anchor_bar;
  /// (l, l) -> (i-1, j-1).
  DirectedPath witness_path;
};

struct SCInequality {
  Cell anchor;
  /// B(anchor), row-major.
  std::vector<Cell> bar;
  ShiftedColumn shifted_column;

  const std::vector<Cell>& s() const { return shifted_column.cells; }

  /// x(bar) - x(S); the inequality is violated iff this is positive.
  Rational Violation(const OrbiMatrix& x) const;

  /// e.g. "x(B(3,2)) <= x{(1,1),(2,1)}".
  std::string ToString() const;

  /// Equality of the inequality itself, i.e. of (anchor, S).
  friend bool operator==(const SCInequality& a, const SCInequality& b) {
    return a.anchor == b.anchor && a.s() == b.s();
  }
};

/// Builds the SCI for a path from (l, l) to (i-1, j-1); the anchor is
/// (i, j). Throws Error(kInvalidInput) if the path does not qualify.
SCInequality MakeSci(const DirectedPath& witness);

/// Rebuilds the SCI with the given anchor and shifted column S (which fixes
/// the witness path). Throws Error(kInvalidInput) if S is not the shifted
/// column of any path to (anchor.i-1, anchor.j-1).
SCInequality SciFromCells(const Params& params, const Cell& anchor,
                          std::vector<Cell> s);

/// Number of SCIs of D(p,q), saturated at limit + 1.
std::uint64_t CountScis(const Params& params, std::uint64_t limit);

/// Every SCI exactly once, ordered by anchor (row-major), then by l, then by
/// path (vertical steps before diagonal ones). Throws Error(kSizeCap) before
/// doing any work if there are more than cap of them.
std::vector<SCInequality> EnumerateScis(const Params& params,
                                        std::uint64_t cap = DefaultSizeCap());

/// x free; rows nonneg_i_j (x >= 0), row_i (x(row i) <= 1, or = 1 for
/// partitioning), then sci_1, sci_2, ... in EnumerateScis order written as
/// x(bar) - x(S) <= 0. Throws Error(kSizeCap).
LinearSystem SciSystem(const Params& params, Kind kind,
                       std::uint64_t cap = DefaultSizeCap());

/// Left-hand side of the inequality y(diag_in(Vbar(i,j))) - x(B(i,j)) >= 0
/// per cell, i.e. how much the flow covers each bar. Negative entries are
/// the violated cells.
CellArray<Rational> BarSlack(const OrbiMatrix& x, const Flow& y);

/// Separation over the SCI polytope. Lifts x; if the lifted flow covers
/// every bar, returns nullopt (and then x lies in the packing orbitope).
/// Otherwise walks backwards from the first uncovered cell through the
/// residual network and returns a strictly violated SCI.
/// Requires x >= 0 and row sums <= 1; throws Error(kInvalidInput).
std::optional<SCInequality> Separate(const OrbiMatrix& x);

/// Exhaustive scan: index of the most violated SCI in scis (lowest index on
/// ties), or nullopt if none is violated.
std::optional<std::size_t> MostViolated(const std::vector<SCInequality>& scis,
                                        const OrbiMatrix& x);

}  // namespace orbikit

#endif  // ORBIKIT_SCI_HPP_
