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

#include "orbikit/sci.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "orbikit/error.hpp"
#include "orbikit/formulations.hpp"
#include "orbikit/lifting.hpp"

namespace orbikit {
namespace {

// C(n, k) saturated at limit + 1. C(n-k+t, t) grows with t, so stopping at
// the first overshoot is safe.
std::uint64_t SaturatingBinomial(int n, int k, std::uint64_t limit) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 value = 1;
  for (int t = 1; t <= k; ++t) {
    value = value * static_cast<unsigned>(n - k + t) / static_cast<unsigned>(t);
    if (value > limit) return limit + 1;
  }
  return static_cast<std::uint64_t>(value);
}

Rational SumCells(const OrbiMatrix& x, const std::vector<Cell>& cells) {
  Rational sum;
  for (const Cell& c : cells) sum += x[c];
  return sum;
}

// All paths from (l, l) to (i-1, j-1), in the order verticals first.
void ExtendPaths(const Digraph& g, std::vector<Node>& prefix, const Node& target,
                 std::vector<DirectedPath>& out) {
  const Node w = prefix.back();
  if (w == target) {
    out.emplace_back(g, prefix);
    return;
  }
  const int rows_left = target.i - w.i;
  const int cols_left = target.j - w.j;
  if (cols_left < rows_left) {
    prefix.push_back(Node::Grid(w.i + 1, w.j));
    ExtendPaths(g, prefix, target, out);
    prefix.pop_back();
  }
  if (cols_left > 0) {
    prefix.push_back(Node::Grid(w.i + 1, w.j + 1));
    ExtendPaths(g, prefix, target, out);
    prefix.pop_back();
  }
}

}  // namespace

Rational SCInequality::Violation(const OrbiMatrix& x) const {
  return SumCells(x, bar) - SumCells(x, s());
}

std::string SCInequality::ToString() const {
  std::string out = "x(B" + orbikit::ToString(anchor) + ") <= x{";
  for (std::size_t k = 0; k < s().size(); ++k) {
    if (k > 0) out += ",";
    out += orbikit::ToString(s()[k]);
  }
  return out + "}";
}

SCInequality MakeSci(const DirectedPath& witness) {
  const Params& params = witness.graph().params();
  const Node& start = witness.front();
  const Node& end = witness.back();
  if (!start.is_cell() || start.i != start.j || !end.is_grid()) {
    throw Error(ErrorCode::kInvalidInput,
                "a shifted column starts at a diagonal node (l,l), l >= 1");
  }
  const Cell anchor{end.i + 1, end.j + 1};
  if (anchor.i < 2 || anchor.j < 2 || !params.Contains(anchor.i, anchor.j)) {
    throw Error(ErrorCode::kInvalidInput,
                "path end " + ToString(end) + " has no SCI anchor");
  }
  std::vector<Cell> s;
  const auto& nodes = witness.nodes();
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (k == 0 || nodes[k].j == nodes[k - 1].j) s.push_back({nodes[k].i, nodes[k].j});
  }
  return {anchor, Bar(params, anchor.i, anchor.j), {std::move(s), anchor, witness}};
}

SCInequality SciFromCells(const Params& params, const Cell& anchor,
                          std::vector<Cell> s) {
  std::sort(s.begin(), s.end());
  auto reject = [&]() {
    return Error(ErrorCode::kInvalidInput,
                 "cells do not form a shifted column for anchor " + ToString(anchor));
  };
  if (s.empty() || s.front().i != s.front().j || anchor.i < 2 || anchor.j < 2 ||
      !params.Contains(anchor.i, anchor.j)) {
    throw reject();
  }
  // Walk rows downwards: a row holding the next cell of S is entered
  // vertically, every other row diagonally.
  std::vector<Node> nodes = {Node::Grid(s.front().i, s.front().j)};
  std::size_t next = 1;
  for (int r = s.front().i + 1; r <= anchor.i - 1; ++r) {
    const Node w = nodes.back();
    if (next < s.size() && s[next].i == r) {
      if (s[next].j != w.j) throw reject();
      nodes.push_back(Node::Grid(r, w.j));
      ++next;
    } else {
      nodes.push_back(Node::Grid(r, w.j + 1));
    }
  }
  if (next != s.size() || nodes.back() != Node::Grid(anchor.i - 1, anchor.j - 1)) {
    throw reject();
  }
  const Digraph g(params);
  for (const Node& n : nodes) {
    if (!g.Contains(n)) throw reject();
  }
  return MakeSci(DirectedPath(g, std::move(nodes)));
}

std::uint64_t CountScis(const Params& params, std::uint64_t limit) {
  std::uint64_t total = 0;
  for (int i = 2; i <= params.p(); ++i) {
    for (int j = 2; j <= params.RowWidth(i); ++j) {
      for (int l = 1; l <= j - 1; ++l) {
        total += SaturatingBinomial(i - 1 - l, j - 1 - l, limit);
        if (total > limit) return limit + 1;
      }
    }
  }
  return total;
}

std::vector<SCInequality> EnumerateScis(const Params& params, std::uint64_t cap) {
  const std::uint64_t count = CountScis(params, cap);
  if (count > cap) {
    throw Error(ErrorCode::kSizeCap,
                "D(" + std::to_string(params.p()) + "," +
                    std::to_string(params.q()) + ") has more than " +
                    std::to_string(cap) + " shifted-column inequalities");
  }
  const Digraph g(params);
  std::vector<SCInequality> out;
  out.reserve(count);
  std::set<std::pair<Cell, std::vector<Cell>>> seen;
  std::vector<DirectedPath> paths;
  for (int i = 2; i <= params.p(); ++i) {
    for (int j = 2; j <= params.RowWidth(i); ++j) {
      for (int l = 1; l <= j - 1; ++l) {
        paths.clear();
        std::vector<Node> prefix = {Node::Grid(l, l)};
        ExtendPaths(g, prefix, Node::Grid(i - 1, j - 1), paths);
        for (const DirectedPath& path : paths) {
          SCInequality sci = MakeSci(path);
          if (seen.emplace(sci.anchor, sci.s()).second) out.push_back(std::move(sci));
        }
      }
    }
  }
  return out;
}

LinearSystem SciSystem(const Params& params, Kind kind, std::uint64_t cap) {
  const std::vector<SCInequality> scis = EnumerateScis(params, cap);
  LinearSystem sys;
  for (const Cell& c : IndexSet(params)) sys.AddVariable(CellVarName('x', c.i, c.j));
  auto x = [&](const Cell& c) { return static_cast<int>(params.CellIndex(c.i, c.j)); };
  for (const Cell& c : IndexSet(params)) {
    sys.AddConstraint("nonneg_" + std::to_string(c.i) + "_" + std::to_string(c.j),
                      {{x(c), Rational(1)}}, Sense::kGreaterEqual, Rational(0));
  }
  for (int i = 1; i <= params.p(); ++i) {
    Terms terms;
    for (int j = 1; j <= params.RowWidth(i); ++j) terms.emplace_back(x({i, j}), Rational(1));
    sys.AddConstraint("row_" + std::to_string(i), std::move(terms),
                      kind == Kind::kPacking ? Sense::kLessEqual : Sense::kEqual,
                      Rational(1));
  }
  for (std::size_t k = 0; k < scis.size(); ++k) {
    Terms terms;
    for (const Cell& c : scis[k].bar) terms.emplace_back(x(c), Rational(1));
    for (const Cell& c : scis[k].s()) terms.emplace_back(x(c), Rational(-1));
    sys.AddConstraint("sci_" + std::to_string(k + 1), std::move(terms),
                      Sense::kLessEqual, Rational(0));
  }
  return sys;
}

CellArray<Rational> BarSlack(const OrbiMatrix& x, const Flow& y) {
  const Params& params = x.params();
  // covered(i, j) = y(diag_in(Vbar(i,j))), accumulated down each column.
  CellArray<Rational> slack(params);
  for (int j = 1; j <= params.q(); ++j) {
    Rational covered;
    for (int i = j; i <= params.p(); ++i) {
      covered += y[Arc::Diagonal(i - 1, j - 1)];
      slack(i, j) = covered;
    }
  }
  for (int i = 1; i <= params.p(); ++i) {
    Rational bar;
    for (int j = params.RowWidth(i); j >= 1; --j) {
      bar += x(i, j);
      slack(i, j) -= bar;
    }
  }
  return slack;
}

std::optional<SCInequality> Separate(const OrbiMatrix& x) {
  const Flow y = Lift(x);  // validates x
  const CellArray<Rational> slack = BarSlack(x, y);
  const Params& params = x.params();
  std::optional<Cell> violated;
  for (const Cell& c : IndexSet(params)) {
    if (slack[c].Sign() < 0) {
      violated = c;
      break;
    }
  }
  if (!violated) return std::nullopt;

  // Backwards through the residual network: take the diagonal arc into the
  // current start node while it has residual capacity, else the vertical
  // one. Stop at column 0, or at a diagonal node whose diagonal in-arc is
  // saturated. Unlike a stop at the first diagonal node, this keeps every
  // node of S(G) saturated even when x lies outside the SCI polytope.
  const CapacitatedNetwork net(x);
  std::vector<Node> reversed = {Node::Grid(violated->i, violated->j)};
  while (true) {
    const Node w = reversed.back();
    if (w.j == 0) break;
    const Arc diagonal = Arc::Diagonal(w.i - 1, w.j - 1);
    if (net.IsResidual(y, diagonal)) {
      reversed.push_back(Node::Grid(w.i - 1, w.j - 1));
    } else if (w.i == w.j) {
      break;
    } else {
      reversed.push_back(Node::Grid(w.i - 1, w.j));
    }
  }
  const Node start = reversed.back();
  if (start.j == 0 || reversed.size() < 2) {
    // Then the flow through B(i,j) would be 1 (resp. x_ii), so the cell could
    // not have been uncovered.
    throw std::logic_error("backward path from uncovered cell " +
                           ToString(*violated) + " ended at " + ToString(start));
  }
  // Drop the arc into the violated cell: the remaining path ends at
  // (i-1, j-1) after a diagonal arc, giving anchor (i, j), or at (i-1, j)
  // after a vertical one, giving anchor (i, j+1).
  std::vector<Node> witness(reversed.rbegin(), reversed.rend() - 1);
  SCInequality sci = MakeSci(DirectedPath(Digraph(params), std::move(witness)));
  if (sci.Violation(x).Sign() <= 0) {
    throw std::logic_error("separation produced a non-violated SCI " + sci.ToString());
  }
  return sci;
}

std::optional<std::size_t> MostViolated(const std::vector<SCInequality>& scis,
                                        const OrbiMatrix& x) {
  std::optional<std::size_t> best;
  Rational best_violation;
  for (std::size_t k = 0; k < scis.size(); ++k) {
    const Rational v = scis[k].Violation(x);
    if (v.Sign() > 0 && (!best || v > best_violation)) {
      best = k;
      best_violation = v;
    }
  }
  return best;
}

}  // namespace orbikit
