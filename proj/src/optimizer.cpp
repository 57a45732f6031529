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

#include "orbikit/optimizer.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <utility>

namespace orbikit {
namespace {

// Path values on the int64 path are bounded by (p + 2) * max|d| (every s-t
// path has p + 2 arcs and every arc cost is 0, d(i,j) or a prefix max of a
// row); keep two bits of headroom.
constexpr std::int64_t kFastPathLimit = std::int64_t{1} << 61;

bool FitsFastPath(const Params& params, std::int64_t max_abs) {
  return max_abs <= kFastPathLimit / (params.p() + 2);
}

// Arc costs read from an explicit ArcCosts array.
class ArrayCosts {
 public:
  explicit ArrayCosts(const ArcCosts& costs) : costs_(costs) {}

  Rational Source() const { return costs_[Arc::Source()]; }
  Rational Sink(int j) const { return costs_[Arc::SinkArc(j)]; }

  // vert[j] = cost of Vertical(r-1, j) for j <= q(r-1);
  // diag[j] = cost of Diagonal(r-1, j-1) for 1 <= j <= q(r).
  void Row(int r, std::vector<Rational>& vert, std::vector<Rational>& diag) const {
    const Params& params = costs_.graph().params();
    for (int j = 0; j <= params.RowWidth(r - 1); ++j) {
      vert[j] = costs_[Arc::Vertical(r - 1, j)];
    }
    for (int j = 1; j <= params.RowWidth(r); ++j) {
      diag[j] = costs_[Arc::Diagonal(r - 1, j - 1)];
    }
  }

 private:
  const ArcCosts& costs_;
};

// Arc costs derived on the fly from a cell objective, one row at a time.
template <typename T>
class ObjectiveCosts {
 public:
  explicit ObjectiveCosts(const CellArray<T>& d) : d_(d) {}

  T Source() const { return T{}; }
  T Sink(int) const { return T{}; }

  void Row(int r, std::vector<T>& vert, std::vector<T>& diag) const {
    const Params& params = d_.params();
    const int prev_width = params.RowWidth(r - 1);
    T running{};  // max{0, d(r,1), ..., d(r,j)}
    vert[0] = T{};
    for (int j = 1; j <= params.RowWidth(r); ++j) {
      const T& c = d_(r, j);
      if (running < c) running = c;
      if (j <= prev_width) vert[j] = running;
      diag[j] = c;
    }
  }

 private:
  const CellArray<T>& d_;
};

template <typename T, typename Costs>
std::pair<T, DirectedPath> Sweep(const Params& params, const Costs& costs) {
  const int p = params.p();
  const int q = params.q();
  std::vector<T> prev(q + 1), cur(q + 1), vert(q + 1), diag(q + 1);
  // took_diagonal[row_start[r] + j] for grid node (r, j), r >= 1; one bit
  // per node keeps the sweep's memory traffic close to reading d once.
  std::vector<bool> took_diagonal;
  std::vector<std::size_t> row_start(p + 1, 0);
  took_diagonal.reserve(params.NumCells() + static_cast<std::size_t>(p));

  prev[0] = costs.Source();
  for (int r = 1; r <= p; ++r) {
    costs.Row(r, vert, diag);
    row_start[r] = took_diagonal.size();
    const int prev_width = params.RowWidth(r - 1);
    for (int j = 0; j <= params.RowWidth(r); ++j) {
      const bool has_vertical = j <= prev_width;
      if (has_vertical) {
        cur[j] = prev[j] + vert[j];
        if (j >= 1) {
          T via_diagonal = prev[j - 1] + diag[j];
          if (cur[j] < via_diagonal) {
            cur[j] = std::move(via_diagonal);
            took_diagonal.push_back(true);
            continue;
          }
        }
        took_diagonal.push_back(false);
      } else {
        cur[j] = prev[j - 1] + diag[j];
        took_diagonal.push_back(true);
      }
    }
    std::swap(prev, cur);
  }

  int best_col = 0;
  T best = prev[0] + costs.Sink(0);
  for (int j = 1; j <= params.RowWidth(p); ++j) {
    T value = prev[j] + costs.Sink(j);
    if (best < value) {
      best = std::move(value);
      best_col = j;
    }
  }

  std::vector<Node> nodes(static_cast<std::size_t>(p) + 3);
  nodes.front() = Node::Source();
  nodes.back() = Node::Sink();
  int col = best_col;
  for (int r = p; r >= 1; --r) {
    nodes[static_cast<std::size_t>(r) + 1] = Node::Grid(r, col);
    if (took_diagonal[row_start[r] + static_cast<std::size_t>(col)]) --col;
  }
  nodes[1] = Node::Grid(0, 0);
  return {std::move(best), DirectedPath(Digraph(params), std::move(nodes))};
}

template <typename T>
std::vector<Cell> DecodeOnes(const DirectedPath& path, const CellArray<T>& d) {
  std::vector<Cell> ones;
  for (const Arc& a : path.Arcs()) {
    if (a.kind == Arc::Kind::kDiagonal) {
      ones.push_back({a.i + 1, a.j + 1});
    } else if (a.kind == Arc::Kind::kVertical && a.j >= 1) {
      const int row = a.i + 1;
      int arg = 1;
      for (int l = 2; l <= a.j; ++l) {
        if (d(row, arg) < d(row, l)) arg = l;
      }
      if (!(d(row, arg) < T{})) ones.push_back({row, arg});
    }
  }
  return ones;
}

template <typename T>
OptResult SolvePacking(const CellArray<T>& d) {
  auto [path_value, path] = Sweep<T>(d.params(), ObjectiveCosts<T>(d));
  std::vector<Cell> ones = DecodeOnes(path, d);
  T value{};
  for (const Cell& c : ones) value += d[c];
  if (!(value == path_value)) {
    throw std::logic_error("decoded vertex value differs from path length");
  }
  return {Rational(value), std::move(ones), std::move(path)};
}

std::int64_t MaxAbs(const CellArray<std::int64_t>& d) {
  std::int64_t m = 0;
  for (std::int64_t v : d.values()) {
    if (v == std::numeric_limits<std::int64_t>::min()) {
      return std::numeric_limits<std::int64_t>::max();
    }
    m = std::max(m, v < 0 ? -v : v);
  }
  return m;
}

// Integer view of d if every entry is an integer small enough for the fast
// path.
std::optional<CellArray<std::int64_t>> AsFastInts(const OrbiMatrix& d) {
  const Rational limit(kFastPathLimit / (d.params().p() + 2));
  const Rational neg_limit = -limit;
  std::vector<std::int64_t> ints;
  ints.reserve(d.values().size());
  for (const Rational& v : d.values()) {
    if (!v.IsInteger() || v > limit || v < neg_limit) return std::nullopt;
    ints.push_back(v.ToInt64());
  }
  return CellArray<std::int64_t>(d.params(), std::move(ints));
}

OrbiMatrix ToRational(const CellArray<std::int64_t>& d) {
  OrbiMatrix m(d.params());
  for (std::size_t k = 0; k < d.values().size(); ++k) {
    m.values()[k] = Rational(d.values()[k]);
  }
  return m;
}

template <typename T>
CellArray<T> ShiftRowsPositive(const CellArray<T>& d) {
  const Params& params = d.params();
  CellArray<T> shifted = d;
  for (int i = 1; i <= params.p(); ++i) {
    T lowest = d(i, 1);
    for (int j = 2; j <= params.RowWidth(i); ++j) {
      if (d(i, j) < lowest) lowest = d(i, j);
    }
    const T shift = T(1) - lowest;
    for (int j = 1; j <= params.RowWidth(i); ++j) shifted(i, j) += shift;
  }
  return shifted;
}

template <typename T>
OptResult FinishPartitioning(OptResult result, const CellArray<T>& d) {
  const Params& params = d.params();
  std::vector<int> per_row(static_cast<std::size_t>(params.p()) + 1, 0);
  T value{};
  for (const Cell& c : result.ones) {
    ++per_row[static_cast<std::size_t>(c.i)];
    value += d[c];
  }
  for (int i = 1; i <= params.p(); ++i) {
    if (per_row[static_cast<std::size_t>(i)] != 1) {
      throw std::logic_error("partitioning optimum misses row " +
                             std::to_string(i));
    }
  }
  result.value = Rational(value);
  return result;
}

}  // namespace

ArcCosts ComputeArcCosts(const OrbiMatrix& d) {
  const Params& params = d.params();
  ArcCosts costs{Digraph(params)};
  for (int i = 1; i <= params.p(); ++i) {
    Rational running;  // max{0, d(i,1), ..., d(i,j)}
    for (int j = 1; j <= params.RowWidth(i); ++j) {
      costs[Arc::Diagonal(i - 1, j - 1)] = d(i, j);
      running = Max(running, d(i, j));
      if (j <= params.RowWidth(i - 1)) costs[Arc::Vertical(i - 1, j)] = running;
    }
  }
  return costs;
}

LongestPathResult ComputeLongestPath(const ArcCosts& costs) {
  auto [value, path] =
      Sweep<Rational>(costs.graph().params(), ArrayCosts(costs));
  return {std::move(value), std::move(path)};
}

OrbiMatrix Reconstruct(const DirectedPath& path, const OrbiMatrix& d) {
  if (path.front() != Node::Source() || path.back() != Node::Sink()) {
    throw Error(ErrorCode::kInvalidInput, "reconstruct needs an s-t path");
  }
  return MatrixFromOnes(d.params(), DecodeOnes(path, d));
}

OptResult OptimizePacking(const OrbiMatrix& d) {
  if (auto ints = AsFastInts(d)) return SolvePacking(*ints);
  return SolvePacking(d);
}

OptResult OptimizePacking(const CellArray<std::int64_t>& d) {
  if (FitsFastPath(d.params(), MaxAbs(d))) return SolvePacking(d);
  return SolvePacking(ToRational(d));
}

OptResult OptimizePartitioning(const OrbiMatrix& d) {
  return FinishPartitioning(OptimizePacking(ShiftRowsPositive(d)), d);
}

OptResult OptimizePartitioning(const CellArray<std::int64_t>& d) {
  // Shifted entries stay within 2 max|d| + 1.
  const std::int64_t m = MaxAbs(d);
  if (m <= kFastPathLimit / 4 && FitsFastPath(d.params(), 2 * m + 1)) {
    return FinishPartitioning(SolvePacking(ShiftRowsPositive(d)), d);
  }
  return OptimizePartitioning(ToRational(d));
}

OptResult Optimize(const OrbiMatrix& d, Kind kind) {
  return kind == Kind::kPacking ? OptimizePacking(d) : OptimizePartitioning(d);
}

}  // namespace orbikit
