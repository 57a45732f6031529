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

// The acyclic network D(p,q) whose s-t paths encode orbitope vertices.
//
// Grid nodes (i, j) cover rows 0..p and columns 0..min(i, q); column 0 and
// row 0 are auxiliary. Each grid node (i, j) with i < p has a vertical arc to
// (i+1, j) and, when (i+1, j+1) is a grid node, a diagonal arc to it. The
// source feeds (0, 0) and every node of row p drains into the sink.
//
// The graph is never materialized: nodes and arcs are addressed by closed-form
// indices, so D(10^6, 10) costs nothing to "build".

#ifndef ORBIKIT_DIGRAPH_HPP_
#define ORBIKIT_DIGRAPH_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "orbikit/core.hpp"

namespace orbikit {

struct Node {
  enum class Kind { kSource, kGrid, kSink };
  Kind kind = Kind::kGrid;
  int i = 0;
  int j = 0;

  static Node Source() { return {Kind::kSource, 0, 0}; }
  static Node Sink() { return {Kind::kSink, 0, 0}; }
  static Node Grid(int i, int j) { return {Kind::kGrid, i, j}; }

  bool is_grid() const { return kind == Kind::kGrid; }
  /// Grid node with i, j >= 1, i.e. one that stands for a matrix cell.
  bool is_cell() const { return is_grid() && i >= 1 && j >= 1; }

  friend auto operator<=>(const Node&, const Node&) = default;
};

/// "s", "t" or "i,j".
std::string ToString(const Node& n);
/// Inverse of ToString; throws Error(kInvalidInput).
Node ParseNode(const std::string& label);

// Enumerator order is the canonical arc order.
struct Arc {
  enum class Kind { kSource, kVertical, kDiagonal, kSink };
  Kind kind = Kind::kVertical;
  int i = 0;
  int j = 0;

  static Arc Source() { return {Kind::kSource, 0, 0}; }
  static Arc Vertical(int i, int j) { return {Kind::kVertical, i, j}; }
  static Arc Diagonal(int i, int j) { return {Kind::kDiagonal, i, j}; }
  /// (p, j) -> t.
  static Arc SinkArc(int j) { return {Kind::kSink, 0, j}; }

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

std::string ToString(const Arc& a);

class Digraph {
 public:
  explicit Digraph(Params params) : params_(params) {}

  const Params& params() const { return params_; }

  std::size_t num_nodes() const { return num_grid_nodes() + 2; }
  std::size_t num_grid_nodes() const { return GridOffset(params_.p() + 1); }
  std::size_t num_vertical_arcs() const { return GridOffset(params_.p()); }
  std::size_t num_diagonal_arcs() const { return params_.NumCells(); }
  std::size_t num_arcs() const {
    return 1 + num_vertical_arcs() + num_diagonal_arcs() +
           static_cast<std::size_t>(params_.q()) + 1;
  }

  bool Contains(const Node& n) const;
  bool Contains(const Arc& a) const;

  /// Canonical indices: nodes are s, grid row-major, t; arcs are source arc,
  /// verticals row-major, diagonals row-major, sink arcs by column.
  std::size_t NodeIndex(const Node& n) const;
  Node NodeAt(std::size_t index) const;
  std::size_t ArcIndex(const Arc& a) const;
  Arc ArcAt(std::size_t index) const;

  /// Diagonal(i, j) enters cell (i+1, j+1) and is numbered like that cell.
  std::size_t DiagonalIndex(int i, int j) const {
    return 1 + num_vertical_arcs() + params_.CellIndex(i + 1, j + 1);
  }
  std::size_t VerticalIndex(int i, int j) const {
    return 1 + GridOffset(i) + static_cast<std::size_t>(j);
  }
  std::size_t SinkIndex(int j) const {
    return 1 + num_vertical_arcs() + num_diagonal_arcs() +
           static_cast<std::size_t>(j);
  }

  Node Tail(const Arc& a) const;
  Node Head(const Arc& a) const;
  std::vector<Arc> OutArcs(const Node& n) const;
  std::vector<Arc> InArcs(const Node& n) const;
  /// The arc u -> v if it exists.
  std::optional<Arc> ArcBetween(const Node& u, const Node& v) const;

  std::vector<Node> Nodes() const;
  std::vector<Arc> Arcs() const;

  /// Graphviz rendering with node labels "i,j", "s", "t".
  void WriteDot(std::ostream& os) const;

 private:
  /// Number of grid nodes in rows 0..i-1.
  std::size_t GridOffset(int i) const {
    if (i <= 0) return 0;
    return static_cast<std::size_t>(i) + params_.RowOffset(i);
  }

  Params params_;
};

/// Values attached to the arcs of D(p,q), indexed canonically.
template <typename T>
class ArcArray {
 public:
  explicit ArcArray(const Digraph& g) : graph_(g), values_(g.num_arcs(), T{}) {}

  const Digraph& graph() const { return graph_; }
  const T& operator[](const Arc& a) const {
    return values_[graph_.ArcIndex(a)];
  }
  T& operator[](const Arc& a) { return values_[graph_.ArcIndex(a)]; }
  const std::vector<T>& values() const { return values_; }
  std::vector<T>& values() { return values_; }

  friend bool operator==(const ArcArray& a, const ArcArray& b) {
    return a.graph_.params() == b.graph_.params() && a.values_ == b.values_;
  }

 private:
  Digraph graph_;
  std::vector<T> values_;
};

using Flow = ArcArray<Rational>;

/// Sum of values over an arc set.
Rational SumOver(const Flow& y, const std::vector<Arc>& arcs);
/// y(delta_in(n)): the amount of flow passing grid node n.
Rational FlowThrough(const Flow& y, const Node& n);
/// Flow passing the nodes of a cell set, e.g. y(B(i,j)).
Rational FlowThrough(const Flow& y, const std::vector<Cell>& cells);

/// B(i,j) = {(i, l) : j <= l <= min(i, q)}. Empty when j > q(i).
std::vector<Cell> Bar(const Params& params, int i, int j);
/// Vbar(i,j) = {(k, j) : j <= k <= i}. Empty when j > q(i).
std::vector<Cell> ColumnSegment(const Params& params, int i, int j);
std::vector<Node> CellNodes(const std::vector<Cell>& cells);

struct CutSets {
  std::vector<Arc> out;
  std::vector<Arc> vert_out;
  std::vector<Arc> in;
  std::vector<Arc> vert_in;
  std::vector<Arc> diag_in;
};

/// The five delta-sets of a node subset W, each in canonical arc order.
CutSets ComputeCutSets(const Digraph& g, const std::vector<Node>& w);

/// A directed path stored as its node sequence.
class DirectedPath {
 public:
  /// Throws Error(kInvalidInput) if consecutive nodes are not joined by an
  /// arc of g or the list is empty.
  DirectedPath(const Digraph& g, std::vector<Node> nodes);

  const Digraph& graph() const { return graph_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& front() const { return nodes_.front(); }
  const Node& back() const { return nodes_.back(); }
  std::vector<Arc> Arcs() const;

  friend bool operator==(const DirectedPath& a, const DirectedPath& b) {
    return a.nodes_ == b.nodes_;
  }

 private:
  Digraph graph_;
  std::vector<Node> nodes_;
};

struct PathNodeSets {
  /// S(path): the start node and every node entered by a non-diagonal arc.
  std::vector<Node> s;
  /// T(path): nodes left along a diagonal arc.
  std::vector<Node> t;
};

PathNodeSets ComputePathNodeSets(const DirectedPath& path);

/// 0/1 flow along an s-t path.
Flow PathIncidence(const Digraph& g, const DirectedPath& path);

}  // namespace orbikit

#endif  // ORBIKIT_DIGRAPH_HPP_
