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

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "orbikit/core.hpp"
#include "orbikit/digraph.hpp"
#include "orbikit/error.hpp"
#include "orbikit/lp_oracle.hpp"

namespace orbikit {
namespace {

std::set<Arc> AsSet(const std::vector<Arc>& arcs) { return {arcs.begin(), arcs.end()}; }
std::set<Node> AsSet(const std::vector<Node>& nodes) { return {nodes.begin(), nodes.end()}; }

TEST(ParamsTest, RejectsBadShapes) {
  EXPECT_THROW(Params(1, 2), Error);
  EXPECT_THROW(Params(0, 0), Error);
  EXPECT_THROW(Params(3, 0), Error);
  try {
    Params(2, 3);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidParams);
  }
}

TEST(IndexSetTest, Examples) {
  EXPECT_EQ(IndexSet(Params(1, 1)), (std::vector<Cell>{{1, 1}}));
  EXPECT_EQ(IndexSet(Params(8, 6)).size(), 33u);
  EXPECT_EQ(IndexSet(Params(3, 2)),
            (std::vector<Cell>{{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}}));
}

TEST(IndexSetTest, CellIndexIsPositionInIndexSet) {
  for (int p = 1; p <= 7; ++p) {
    for (int q = 1; q <= p; ++q) {
      const Params params(p, q);
      const auto cells = IndexSet(params);
      ASSERT_EQ(cells.size(), params.NumCells());
      for (std::size_t k = 0; k < cells.size(); ++k) {
        EXPECT_EQ(params.CellIndex(cells[k].i, cells[k].j), k);
      }
    }
  }
}

TEST(IsVertexTest, Examples) {
  const Params params(2, 2);
  const OrbiMatrix diag = MatrixFromOnes(params, {{1, 1}, {2, 2}});
  EXPECT_TRUE(IsVertex(diag, Kind::kPacking));
  EXPECT_TRUE(IsVertex(diag, Kind::kPartitioning));
  EXPECT_FALSE(IsVertex(MatrixFromOnes(params, {{2, 2}}), Kind::kPacking));
  EXPECT_TRUE(IsVertex(OrbiMatrix(params), Kind::kPacking));
  EXPECT_FALSE(IsVertex(OrbiMatrix(params), Kind::kPartitioning));
  OrbiMatrix half(params);
  half(1, 1) = Rational(1, 2);
  EXPECT_FALSE(IsVertex(half, Kind::kPacking));
}

TEST(DefaultSizeCapTest, ReadsEnvironment) {
  unsetenv("ORBIKIT_CAP");
  EXPECT_EQ(DefaultSizeCap(), 1000000u);
  setenv("ORBIKIT_CAP", "123", 1);
  EXPECT_EQ(DefaultSizeCap(), 123u);
  for (const char* bad : {"-1", "0", "abc", "12x"}) {
    setenv("ORBIKIT_CAP", bad, 1);
    EXPECT_THROW(DefaultSizeCap(), Error) << bad;
  }
  unsetenv("ORBIKIT_CAP");
}

TEST(DigraphTest, CountsForEightBySix) {
  const Digraph g(Params(8, 6));
  EXPECT_EQ(g.num_nodes(), 44u);
  EXPECT_EQ(g.num_arcs(), 76u);
  EXPECT_EQ(g.num_vertical_arcs(), 35u);
  EXPECT_EQ(g.num_diagonal_arcs(), 33u);
}

TEST(DigraphTest, SmallestInstance) {
  const Digraph g(Params(1, 1));
  EXPECT_EQ(AsSet(g.Nodes()), (std::set<Node>{Node::Source(), Node::Sink(), Node::Grid(0, 0),
                                             Node::Grid(1, 0), Node::Grid(1, 1)}));
  EXPECT_EQ(g.Arcs(), (std::vector<Arc>{Arc::Source(), Arc::Vertical(0, 0), Arc::Diagonal(0, 0),
                                         Arc::SinkArc(0), Arc::SinkArc(1)}));
}

TEST(DigraphTest, IndicesRoundTripAndDegrees) {
  for (int p = 1; p <= 7; ++p) {
    for (int q = 1; q <= p; ++q) {
      const Digraph g(Params(p, q));
      const auto arcs = g.Arcs();
      ASSERT_EQ(arcs.size(), g.num_arcs());
      for (std::size_t k = 0; k < arcs.size(); ++k) {
        EXPECT_EQ(g.ArcIndex(arcs[k]), k);
        EXPECT_EQ(g.ArcAt(k), arcs[k]);
        EXPECT_TRUE(g.Contains(g.Tail(arcs[k])));
        EXPECT_TRUE(g.Contains(g.Head(arcs[k])));
      }
      const auto nodes = g.Nodes();
      ASSERT_EQ(nodes.size(), g.num_nodes());
      for (std::size_t k = 0; k < nodes.size(); ++k) {
        EXPECT_EQ(g.NodeIndex(nodes[k]), k);
        EXPECT_EQ(g.NodeAt(k), nodes[k]);
        EXPECT_TRUE(nodes[k] == Node::Sink() || !g.OutArcs(nodes[k]).empty());
        EXPECT_TRUE(nodes[k] == Node::Source() || !g.InArcs(nodes[k]).empty());
        EXPECT_EQ(ParseNode(ToString(nodes[k])), nodes[k]);
      }
    }
  }
}

// Every arc goes one row down (or leaves s / enters t), so the row index is a
// topological order: the graph is acyclic.
TEST(DigraphTest, AcyclicByRowOrder) {
  for (int p = 1; p <= 12; ++p) {
    for (int q = 1; q <= p; ++q) {
      const Digraph g(Params(p, q));
      auto rank = [&](const Node& n) {
        if (n == Node::Source()) return -1;
        if (n == Node::Sink()) return p + 1;
        return n.i;
      };
      for (const Arc& a : g.Arcs()) EXPECT_LT(rank(g.Tail(a)), rank(g.Head(a)));
    }
  }
}

TEST(DigraphTest, RejectsForeignArcsAndNodes) {
  const Digraph g(Params(3, 2));
  EXPECT_FALSE(g.Contains(Arc::Diagonal(2, 2)));
  EXPECT_FALSE(g.Contains(Arc::Vertical(3, 0)));
  EXPECT_FALSE(g.Contains(Node::Grid(1, 2)));
  EXPECT_THROW(ParseNode("x"), Error);
  EXPECT_THROW(DirectedPath(g, {Node::Grid(0, 0), Node::Grid(2, 1)}), Error);
}

TEST(DigraphTest, DotExportLabels) {
  std::ostringstream os;
  Digraph(Params(1, 1)).WriteDot(os);
  const std::string dot = os.str();
  EXPECT_NE(dot.find("\"s\""), std::string::npos);
  EXPECT_NE(dot.find("\"1,1\""), std::string::npos);
}

TEST(BarTest, Examples) {
  EXPECT_EQ(Bar(Params(8, 6), 8, 5), (std::vector<Cell>{{8, 5}, {8, 6}}));
  EXPECT_EQ(Bar(Params(7, 6), 7, 4), (std::vector<Cell>{{7, 4}, {7, 5}, {7, 6}}));
  EXPECT_EQ(Bar(Params(5, 3), 2, 2), (std::vector<Cell>{{2, 2}}));
  EXPECT_EQ(Bar(Params(5, 3), 5, 3), (std::vector<Cell>{{5, 3}}));
}

TEST(ColumnSegmentTest, Examples) {
  EXPECT_EQ(ColumnSegment(Params(3, 2), 3, 2), (std::vector<Cell>{{2, 2}, {3, 2}}));
  EXPECT_EQ(ColumnSegment(Params(6, 4), 4, 4), (std::vector<Cell>{{4, 4}}));
  EXPECT_EQ(ColumnSegment(Params(5, 3), 5, 1).size(), 5u);
}

TEST(CutSetsTest, Examples) {
  const Params params(6, 4);
  const Digraph g(params);
  for (int j = 1; j <= 4; ++j) {
    EXPECT_EQ(ComputeCutSets(g, {Node::Grid(j, j)}).diag_in,
              (std::vector<Arc>{Arc::Diagonal(j - 1, j - 1)}));
  }
  const CutSets seg = ComputeCutSets(g, CellNodes(ColumnSegment(params, 5, 2)));
  std::set<Arc> expected;
  for (int k = 2; k <= 5; ++k) expected.insert(Arc::Diagonal(k - 1, 1));
  EXPECT_EQ(AsSet(seg.diag_in), expected);
  const CutSets all = ComputeCutSets(g, g.Nodes());
  EXPECT_TRUE(all.out.empty() && all.vert_out.empty() && all.in.empty() &&
              all.vert_in.empty() && all.diag_in.empty());
}

TEST(PathNodeSetsTest, Examples) {
  const Digraph g(Params(5, 3));
  const auto vertical = ComputePathNodeSets(DirectedPath(g, {Node::Grid(2, 1), Node::Grid(3, 1)}));
  EXPECT_EQ(AsSet(vertical.s), AsSet(std::vector<Node>{Node::Grid(2, 1), Node::Grid(3, 1)}));
  EXPECT_TRUE(vertical.t.empty());
  const auto diagonal = ComputePathNodeSets(DirectedPath(g, {Node::Grid(2, 1), Node::Grid(3, 2)}));
  EXPECT_EQ(diagonal.s, std::vector<Node>{Node::Grid(2, 1)});
  EXPECT_EQ(diagonal.t, std::vector<Node>{Node::Grid(2, 1)});
  const auto column = ComputePathNodeSets(
      DirectedPath(g, {Node::Grid(2, 2), Node::Grid(3, 2), Node::Grid(4, 2), Node::Grid(5, 2)}));
  EXPECT_EQ(AsSet(column.s), AsSet(CellNodes(ColumnSegment(g.params(), 5, 2))));
  EXPECT_TRUE(column.t.empty());
}

// S always holds the start node, T never holds the end node, and the two
// arc-set identities hold (the second up to a final vertical arc).
TEST(PathNodeSetsTest, IdentitiesOnAllPathsToCells) {
  for (int p = 1; p <= 5; ++p) {
    for (int q = 1; q <= p; ++q) {
      const Digraph g(Params(p, q));
      for (const DirectedPath& st : EnumeratePaths(g.params())) {
        // Every sub-path of an s-t path between grid nodes, ending at a cell.
        const auto& nodes = st.nodes();
        for (std::size_t a = 1; a + 1 < nodes.size(); ++a) {
          for (std::size_t b = a; b + 1 < nodes.size(); ++b) {
            if (!nodes[b].is_cell()) continue;
            const DirectedPath gamma(g, {nodes.begin() + a, nodes.begin() + b + 1});
            const PathNodeSets sets = ComputePathNodeSets(gamma);
            EXPECT_TRUE(std::ranges::count(sets.s, gamma.front()) == 1);
            EXPECT_TRUE(std::ranges::count(sets.t, gamma.back()) == 0);
            EXPECT_EQ(ComputeCutSets(g, gamma.nodes()).diag_in, ComputeCutSets(g, sets.s).diag_in);
            std::vector<Node> inner(gamma.nodes().begin(), gamma.nodes().end() - 1);
            std::vector<Arc> vert_out = ComputeCutSets(g, inner).vert_out;
            if (b > a) std::erase(vert_out, gamma.Arcs().back());
            EXPECT_EQ(vert_out, ComputeCutSets(g, sets.t).vert_out);
          }
        }
      }
    }
  }
}

TEST(PathIncidenceTest, IsUnitFlowThroughPathNodes) {
  const Params params(4, 3);
  const Digraph g(params);
  for (const DirectedPath& path : EnumeratePaths(params)) {
    const Flow y = PathIncidence(g, path);
    Rational total;
    for (const Arc& a : g.Arcs()) total += y[a];
    EXPECT_EQ(total, Rational(static_cast<std::int64_t>(path.nodes().size()) - 1));
    for (const Node& n : path.nodes()) {
      if (n.is_grid()) {
        EXPECT_EQ(FlowThrough(y, n), Rational(1));
      }
    }
  }
}

}  // namespace
}  // namespace orbikit
