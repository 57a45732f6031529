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

#include "orbikit/lifting.hpp"

namespace orbikit {

std::string UnitFlowViolation(const Flow& y) {
  const Digraph& g = y.graph();
  for (const Arc& a : g.Arcs()) {
    if (y[a].Sign() < 0) return "negative flow on " + ToString(a);
  }
  if (y[Arc::Source()] != Rational(1)) {
    return "source outflow " + y[Arc::Source()].ToString() + " != 1";
  }
  for (const Node& n : g.Nodes()) {
    if (!n.is_grid()) continue;
    if (SumOver(y, g.InArcs(n)) != SumOver(y, g.OutArcs(n))) {
      return "conservation fails at " + ToString(n);
    }
  }
  return {};
}

bool HasSaturatedDiagonals(const OrbiMatrix& x, const Flow& y) {
  for (const Cell& c : IndexSet(x.params())) {
    const Arc vertical = Arc::Vertical(c.i - 1, c.j - 1);
    if (y[vertical].Sign() > 0 && y[Arc::Diagonal(c.i - 1, c.j - 1)] != x[c]) {
      return false;
    }
  }
  return true;
}

void CheckLiftable(const OrbiMatrix& x) {
  const Params& params = x.params();
  for (const Cell& c : IndexSet(params)) {
    if (x[c].Sign() < 0) {
      throw Error(ErrorCode::kInvalidInput,
                  "negative entry at " + ToString(c));
    }
  }
  for (int i = 1; i <= params.p(); ++i) {
    if (RowSum(x, i) > Rational(1)) {
      throw Error(ErrorCode::kInvalidInput,
                  "row " + std::to_string(i) + " sums to more than 1");
    }
  }
}

Flow Lift(const OrbiMatrix& x) {
  CheckLiftable(x);
  const Params& params = x.params();
  const int p = params.p();
  Flow y{Digraph(params)};
  y[Arc::Source()] = Rational(1);
  for (int i = 0; i < p; ++i) y[Arc::Vertical(i, 0)] = Rational(1);
  y[Arc::SinkArc(0)] = Rational(1);

  // Column-major scan. When cell (i, j) is visited, no diagonal below row i
  // has left column j-1 yet, so whatever enters Vertical(i-1, j-1) runs
  // straight down column j-1 into the sink; rerouting theta of it moves that
  // stream onto Diagonal(i-1, j-1) and down column j instead.
  for (int j = 1; j <= params.q(); ++j) {
    for (int i = j; i <= p; ++i) {
      const Arc vertical = Arc::Vertical(i - 1, j - 1);
      const Arc diagonal = Arc::Diagonal(i - 1, j - 1);
      if (y[vertical].Sign() <= 0 || y[diagonal] >= x(i, j)) continue;
      const Rational theta = Min(y[vertical], x(i, j) - y[diagonal]);
      y[diagonal] += theta;
      for (int k = i - 1; k < p; ++k) y[Arc::Vertical(k, j - 1)] -= theta;
      y[Arc::SinkArc(j - 1)] -= theta;
      for (int k = i; k < p; ++k) y[Arc::Vertical(k, j)] += theta;
      y[Arc::SinkArc(j)] += theta;
    }
  }
  return y;
}

Flow LiftVertex(const OrbiMatrix& x) {
  if (!IsVertex(x, Kind::kPacking)) {
    throw Error(ErrorCode::kInvalidInput, "not a packing-orbitope vertex");
  }
  const Params& params = x.params();
  const Digraph g(params);
  std::vector<Node> nodes = {Node::Source(), Node::Grid(0, 0)};
  int col = 0;
  for (int i = 1; i <= params.p(); ++i) {
    if (col + 1 <= params.RowWidth(i) && x(i, col + 1) == Rational(1)) ++col;
    nodes.push_back(Node::Grid(i, col));
  }
  nodes.push_back(Node::Sink());
  return PathIncidence(g, DirectedPath(g, std::move(nodes)));
}

}  // namespace orbikit
