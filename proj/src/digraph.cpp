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

#include "orbikit/digraph.hpp"

#include <algorithm>
#include <sstream>

namespace orbikit {

std::string ToString(const Node& n) {
  switch (n.kind) {
    case Node::Kind::kSource:
      return "s";
    case Node::Kind::kSink:
      return "t";
    case Node::Kind::kGrid:
      break;
  }
  return std::to_string(n.i) + "," + std::to_string(n.j);
}

Node ParseNode(const std::string& label) {
  if (label == "s") return Node::Source();
  if (label == "t") return Node::Sink();
  const auto comma = label.find(',');
  if (comma == std::string::npos) {
    throw Error(ErrorCode::kInvalidInput, "bad node label '" + label + "'");
  }
  try {
    std::size_t used_i = 0;
    std::size_t used_j = 0;
    const int i = std::stoi(label.substr(0, comma), &used_i);
    const int j = std::stoi(label.substr(comma + 1), &used_j);
    if (used_i != comma || used_j != label.size() - comma - 1) {
      throw std::invalid_argument(label);
    }
    return Node::Grid(i, j);
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kInvalidInput, "bad node label '" + label + "'");
  }
}

std::string ToString(const Arc& a) {
  switch (a.kind) {
    case Arc::Kind::kSource:
      return "s->(0,0)";
    case Arc::Kind::kVertical:
      return "v(" + std::to_string(a.i) + "," + std::to_string(a.j) + ")";
    case Arc::Kind::kDiagonal:
      return "d(" + std::to_string(a.i) + "," + std::to_string(a.j) + ")";
    case Arc::Kind::kSink:
      return "(p," + std::to_string(a.j) + ")->t";
  }
  return "?";
}

bool Digraph::Contains(const Node& n) const {
  if (!n.is_grid()) return true;
  return n.i >= 0 && n.i <= params_.p() && n.j >= 0 &&
         n.j <= params_.RowWidth(n.i);
}

bool Digraph::Contains(const Arc& a) const {
  const int p = params_.p();
  switch (a.kind) {
    case Arc::Kind::kSource:
      return a.i == 0 && a.j == 0;
    case Arc::Kind::kVertical:
      return a.i >= 0 && a.i < p && a.j >= 0 && a.j <= params_.RowWidth(a.i);
    case Arc::Kind::kDiagonal:
      return a.i >= 0 && a.i < p && a.j >= 0 &&
             a.j < params_.RowWidth(a.i + 1);
    case Arc::Kind::kSink:
      return a.i == 0 && a.j >= 0 && a.j <= params_.q();
  }
  return false;
}

std::size_t Digraph::NodeIndex(const Node& n) const {
  if (!Contains(n)) {
    throw Error(ErrorCode::kInvalidInput, "node " + ToString(n) + " not in D");
  }
  switch (n.kind) {
    case Node::Kind::kSource:
      return 0;
    case Node::Kind::kSink:
      return num_nodes() - 1;
    case Node::Kind::kGrid:
      break;
  }
  return 1 + GridOffset(n.i) + static_cast<std::size_t>(n.j);
}

Node Digraph::NodeAt(std::size_t index) const {
  if (index == 0) return Node::Source();
  if (index + 1 == num_nodes()) return Node::Sink();
  if (index >= num_nodes()) {
    throw Error(ErrorCode::kInvalidInput, "node index out of range");
  }
  const std::size_t k = index - 1;
  // Largest row i with GridOffset(i) <= k.
  int lo = 0;
  int hi = params_.p();
  while (lo < hi) {
    const int mid = lo + (hi - lo + 1) / 2;
    if (GridOffset(mid) <= k) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return Node::Grid(lo, static_cast<int>(k - GridOffset(lo)));
}

std::size_t Digraph::ArcIndex(const Arc& a) const {
  if (!Contains(a)) {
    throw Error(ErrorCode::kInvalidInput, "arc " + ToString(a) + " not in D");
  }
  switch (a.kind) {
    case Arc::Kind::kSource:
      return 0;
    case Arc::Kind::kVertical:
      return VerticalIndex(a.i, a.j);
    case Arc::Kind::kDiagonal:
      return DiagonalIndex(a.i, a.j);
    case Arc::Kind::kSink:
      return SinkIndex(a.j);
  }
  return 0;
}

Arc Digraph::ArcAt(std::size_t index) const {
  if (index >= num_arcs()) {
    throw Error(ErrorCode::kInvalidInput, "arc index out of range");
  }
  if (index == 0) return Arc::Source();
  std::size_t k = index - 1;
  if (k < num_vertical_arcs()) {
    const Node n = NodeAt(k + 1);  // verticals share the grid numbering
    return Arc::Vertical(n.i, n.j);
  }
  k -= num_vertical_arcs();
  if (k < num_diagonal_arcs()) {
    // Cell row-major order: find the row r with RowOffset(r) <= k.
    int lo = 1;
    int hi = params_.p();
    while (lo < hi) {
      const int mid = lo + (hi - lo + 1) / 2;
      if (params_.RowOffset(mid) <= k) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    const int j = static_cast<int>(k - params_.RowOffset(lo)) + 1;
    return Arc::Diagonal(lo - 1, j - 1);
  }
  k -= num_diagonal_arcs();
  return Arc::SinkArc(static_cast<int>(k));
}

Node Digraph::Tail(const Arc& a) const {
  switch (a.kind) {
    case Arc::Kind::kSource:
      return Node::Source();
    case Arc::Kind::kVertical:
    case Arc::Kind::kDiagonal:
      return Node::Grid(a.i, a.j);
    case Arc::Kind::kSink:
      return Node::Grid(params_.p(), a.j);
  }
  return {};
}

Node Digraph::Head(const Arc& a) const {
  switch (a.kind) {
    case Arc::Kind::kSource:
      return Node::Grid(0, 0);
    case Arc::Kind::kVertical:
      return Node::Grid(a.i + 1, a.j);
    case Arc::Kind::kDiagonal:
      return Node::Grid(a.i + 1, a.j + 1);
    case Arc::Kind::kSink:
      return Node::Sink();
  }
  return {};
}

std::vector<Arc> Digraph::OutArcs(const Node& n) const {
  switch (n.kind) {
    case Node::Kind::kSource:
      return {Arc::Source()};
    case Node::Kind::kSink:
      return {};
    case Node::Kind::kGrid:
      break;
  }
  if (n.i == params_.p()) return {Arc::SinkArc(n.j)};
  std::vector<Arc> out = {Arc::Vertical(n.i, n.j)};
  if (n.j < params_.RowWidth(n.i + 1)) out.push_back(Arc::Diagonal(n.i, n.j));
  return out;
}

std::vector<Arc> Digraph::InArcs(const Node& n) const {
  switch (n.kind) {
    case Node::Kind::kSource:
      return {};
    case Node::Kind::kSink: {
      std::vector<Arc> in;
      for (int j = 0; j <= params_.q(); ++j) in.push_back(Arc::SinkArc(j));
      return in;
    }
    case Node::Kind::kGrid:
      break;
  }
  if (n.i == 0) return {Arc::Source()};
  std::vector<Arc> in;
  if (n.j <= params_.RowWidth(n.i - 1)) in.push_back(Arc::Vertical(n.i - 1, n.j));
  if (n.j >= 1) in.push_back(Arc::Diagonal(n.i - 1, n.j - 1));
  return in;
}

std::optional<Arc> Digraph::ArcBetween(const Node& u, const Node& v) const {
  if (!Contains(u) || !Contains(v)) return std::nullopt;
  for (const Arc& a : OutArcs(u)) {
    if (Head(a) == v) return a;
  }
  return std::nullopt;
}

std::vector<Node> Digraph::Nodes() const {
  std::vector<Node> nodes;
  nodes.reserve(num_nodes());
  nodes.push_back(Node::Source());
  for (int i = 0; i <= params_.p(); ++i) {
    for (int j = 0; j <= params_.RowWidth(i); ++j) nodes.push_back(Node::Grid(i, j));
  }
  nodes.push_back(Node::Sink());
  return nodes;
}

std::vector<Arc> Digraph::Arcs() const {
  std::vector<Arc> arcs;
  arcs.reserve(num_arcs());
  arcs.push_back(Arc::Source());
  for (int i = 0; i < params_.p(); ++i) {
    for (int j = 0; j <= params_.RowWidth(i); ++j) arcs.push_back(Arc::Vertical(i, j));
  }
  for (int i = 0; i < params_.p(); ++i) {
    for (int j = 0; j < params_.RowWidth(i + 1); ++j) {
      arcs.push_back(Arc::Diagonal(i, j));
    }
  }
  for (int j = 0; j <= params_.q(); ++j) arcs.push_back(Arc::SinkArc(j));
  return arcs;
}

void Digraph::WriteDot(std::ostream& os) const {
  os << "digraph D_" << params_.p() << "_" << params_.q() << " {\n";
  for (const Node& n : Nodes()) {
    os << "  n" << NodeIndex(n) << " [label=\"" << ToString(n) << "\"];\n";
  }
  for (const Arc& a : Arcs()) {
    os << "  n" << NodeIndex(Tail(a)) << " -> n" << NodeIndex(Head(a));
    if (a.kind == Arc::Kind::kDiagonal) os << " [style=dashed]";
    os << ";\n";
  }
  os << "}\n";
}

Rational SumOver(const Flow& y, const std::vector<Arc>& arcs) {
  Rational sum;
  for (const Arc& a : arcs) sum += y[a];
  return sum;
}

Rational FlowThrough(const Flow& y, const Node& n) {
  return SumOver(y, y.graph().InArcs(n));
}

Rational FlowThrough(const Flow& y, const std::vector<Cell>& cells) {
  Rational sum;
  for (const Cell& c : cells) sum += FlowThrough(y, Node::Grid(c.i, c.j));
  return sum;
}

std::vector<Cell> Bar(const Params& params, int i, int j) {
  std::vector<Cell> cells;
  for (int l = std::max(j, 1); l <= params.RowWidth(i); ++l) cells.push_back({i, l});
  return cells;
}

std::vector<Cell> ColumnSegment(const Params& params, int i, int j) {
  std::vector<Cell> cells;
  if (j < 1 || j > params.RowWidth(i)) return cells;
  for (int k = j; k <= i; ++k) cells.push_back({k, j});
  return cells;
}

std::vector<Node> CellNodes(const std::vector<Cell>& cells) {
  std::vector<Node> nodes;
  nodes.reserve(cells.size());
  for (const Cell& c : cells) nodes.push_back(Node::Grid(c.i, c.j));
  return nodes;
}

CutSets ComputeCutSets(const Digraph& g, const std::vector<Node>& w) {
  std::vector<char> member(g.num_nodes(), 0);
  for (const Node& n : w) member[g.NodeIndex(n)] = 1;
  CutSets cuts;
  for (const Arc& a : g.Arcs()) {
    const bool tail_in = member[g.NodeIndex(g.Tail(a))] != 0;
    const bool head_in = member[g.NodeIndex(g.Head(a))] != 0;
    if (tail_in && !head_in) {
      cuts.out.push_back(a);
      if (a.kind == Arc::Kind::kVertical) cuts.vert_out.push_back(a);
    } else if (!tail_in && head_in) {
      cuts.in.push_back(a);
      if (a.kind == Arc::Kind::kVertical) cuts.vert_in.push_back(a);
      if (a.kind == Arc::Kind::kDiagonal) cuts.diag_in.push_back(a);
    }
  }
  return cuts;
}

DirectedPath::DirectedPath(const Digraph& g, std::vector<Node> nodes)
    : graph_(g), nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw Error(ErrorCode::kInvalidInput, "empty path");
  if (!graph_.Contains(nodes_.front())) {
    throw Error(ErrorCode::kInvalidInput,
                "node " + ToString(nodes_.front()) + " not in D");
  }
  for (std::size_t k = 0; k + 1 < nodes_.size(); ++k) {
    if (!graph_.ArcBetween(nodes_[k], nodes_[k + 1])) {
      throw Error(ErrorCode::kInvalidInput,
                  "no arc " + ToString(nodes_[k]) + " -> " +
                      ToString(nodes_[k + 1]));
    }
  }
}

std::vector<Arc> DirectedPath::Arcs() const {
  std::vector<Arc> arcs;
  arcs.reserve(nodes_.size());
  for (std::size_t k = 0; k + 1 < nodes_.size(); ++k) {
    arcs.push_back(*graph_.ArcBetween(nodes_[k], nodes_[k + 1]));
  }
  return arcs;
}

PathNodeSets ComputePathNodeSets(const DirectedPath& path) {
  PathNodeSets sets;
  const auto& nodes = path.nodes();
  const std::vector<Arc> arcs = path.Arcs();
  sets.s.push_back(nodes.front());
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    if (arcs[k].kind == Arc::Kind::kDiagonal) {
      sets.t.push_back(nodes[k]);
    } else {
      sets.s.push_back(nodes[k + 1]);
    }
  }
  return sets;
}

Flow PathIncidence(const Digraph& g, const DirectedPath& path) {
  Flow y(g);
  for (const Arc& a : path.Arcs()) y[a] = Rational(1);
  return y;
}

}  // namespace orbikit
