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

// Index sets and matrices of the packing/partitioning orbitopes.
//
// All user-facing indices are 1-based: a cell (i, j) of the p x q orbitope
// matrix lives in the lower-triangular set {(i, j) : 1 <= j <= min(i, q)}.
// Entries above the diagonal are identically zero and are not stored.

#ifndef ORBIKIT_CORE_HPP_
#define ORBIKIT_CORE_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "orbikit/error.hpp"
#include "orbikit/rational.hpp"

namespace orbikit {

enum class Kind { kPacking, kPartitioning };

const char* KindName(Kind kind);
/// Accepts "packing" and "partitioning".
Kind ParseKind(const std::string& name);

class Params {
 public:
  /// Throws Error(kInvalidParams) unless p >= q >= 1.
  Params(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }

  /// q(i) = min(i, q): number of cells in row i (also the largest column of
  /// grid row i in the digraph).
  int RowWidth(int i) const { return std::min(i, q_); }

  /// |I_{p,q}| = p*q - q*(q-1)/2.
  std::size_t NumCells() const;

  /// Row-major position of cell (i, j). Requires Contains(i, j).
  std::size_t CellIndex(int i, int j) const {
    return RowOffset(i) + static_cast<std::size_t>(j - 1);
  }
  /// Number of cells in rows 1..i-1.
  std::size_t RowOffset(int i) const;

  bool Contains(int i, int j) const {
    return i >= 1 && i <= p_ && j >= 1 && j <= RowWidth(i);
  }

  friend bool operator==(const Params&, const Params&) = default;

 private:
  int p_;
  int q_;
};

struct Cell {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string ToString(const Cell& c);

/// All cells in row-major order.
std::vector<Cell> IndexSet(const Params& params);

/// Dense row-major storage over the index set. Used both for rational
/// matrices (OrbiMatrix) and for integer objectives on the fast path.
template <typename T>
class CellArray {
 public:
  explicit CellArray(Params params)
      : params_(params), values_(params.NumCells(), T{}) {}
  CellArray(Params params, std::vector<T> values)
      : params_(params), values_(std::move(values)) {
    if (values_.size() != params_.NumCells()) {
      throw Error(ErrorCode::kInvalidInput, "cell array size mismatch");
    }
  }

  const Params& params() const { return params_; }

  const T& operator()(int i, int j) const {
    return values_[params_.CellIndex(i, j)];
  }
  T& operator()(int i, int j) { return values_[params_.CellIndex(i, j)]; }
  const T& operator[](const Cell& c) const { return (*this)(c.i, c.j); }
  T& operator[](const Cell& c) { return (*this)(c.i, c.j); }

  /// Zero for cells outside the index set (above the diagonal or j > q).
  T At(int i, int j) const {
    return params_.Contains(i, j) ? (*this)(i, j) : T{};
  }

  const std::vector<T>& values() const { return values_; }
  std::vector<T>& values() { return values_; }

  friend bool operator==(const CellArray&, const CellArray&) = default;

 private:
  Params params_;
  std::vector<T> values_;
};

using OrbiMatrix = CellArray<Rational>;

/// Sum of row i.
Rational RowSum(const OrbiMatrix& m, int i);

/// True iff m is 0/1, each row sum obeys kind (<= 1 or == 1), and the
/// columns, read as length-p vectors padded with zeros above the diagonal,
/// are lexicographically non-increasing from left to right.
bool IsVertex(const OrbiMatrix& m, Kind kind);

/// 0/1 matrix with ones exactly at the given cells.
OrbiMatrix MatrixFromOnes(const Params& params, const std::vector<Cell>& ones);

/// Default limit on the size of exhaustive enumerations: the value of the
/// ORBIKIT_CAP environment variable if set to a positive integer, else 10^6.
std::uint64_t DefaultSizeCap();

}  // namespace orbikit

#endif  // ORBIKIT_CORE_HPP_
