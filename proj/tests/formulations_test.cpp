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

#include "orbikit/formulations.hpp"

#include <gtest/gtest.h>

#include "orbikit/lifting.hpp"
#include "orbikit/lp_oracle.hpp"
#include "orbikit/optimizer.hpp"
#include "orbikit/random.hpp"
#include "orbikit/verify.hpp"

namespace orbikit {
namespace {

TEST(ExtendedSystemTest, OneByOne) {
  const LinearSystem s = ExtendedSystem(Params(1, 1), Kind::kPacking);
  EXPECT_EQ(s.num_vars(), 6u);
  EXPECT_EQ(s.num_constraints(), 6u);  // 3 conservation, source, diagonal cap, bar
  EXPECT_EQ(s.variables()[0].name, "x_1_1");
  for (std::size_t k = 1; k < s.num_vars(); ++k) EXPECT_EQ(s.variables()[k].lower, Rational(0));
}

TEST(ExtendedSystemTest, CountsFollowTheFormula) {
  for (int p = 1; p <= 9; ++p) {
    for (int q = 1; q <= p; ++q) {
      const Params params(p, q);
      const Digraph g(params);
      for (Kind kind : {Kind::kPacking, Kind::kPartitioning}) {
        const LinearSystem s = ExtendedSystem(params, kind);
        EXPECT_EQ(s.num_vars(), params.NumCells() + g.num_arcs());
        std::size_t rows = (g.num_nodes() - 2) + 1 + 2 * params.NumCells();
        if (kind == Kind::kPartitioning) rows += static_cast<std::size_t>(p);
        EXPECT_EQ(s.num_constraints(), rows);
      }
    }
  }
  const LinearSystem s86 = ExtendedSystem(Params(8, 6), Kind::kPacking);
  EXPECT_EQ(s86.num_vars(), 33u + 76u);
}

TEST(CompactSystemTest, EightBySix) {
  const SystemStats st = CompactSystem(Params(8, 6), Kind::kPacking).Stats();
  EXPECT_EQ(st.num_vars, 66u);
  EXPECT_LT(st.num_general_constraints, 192u);
  EXPECT_LT(st.num_nonzeros, 480u);
}

TEST(CompactSystemTest, SizeBoundsUpToFifty) {
  for (int p = 2; p <= 50; ++p) {
    for (int q = 2; q <= p; ++q) {
      const SystemStats st = CompactSystem(Params(p, q), Kind::kPacking).Stats();
      const std::size_t pq = static_cast<std::size_t>(p * q);
      ASSERT_LT(st.num_vars, 2 * pq);
      ASSERT_LT(st.num_general_constraints, 4 * pq);
      ASSERT_LT(st.num_nonzeros, 10 * pq);
    }
  }
}

TEST(CompactSystemTest, OneByOneRows) {
  const LinearSystem s = CompactSystem(Params(1, 1), Kind::kPacking);
  ASSERT_EQ(s.num_vars(), 2u);
  EXPECT_EQ(s.variables()[0].name, "z_1_1");
  EXPECT_EQ(s.variables()[1].name, "w_1_1");
  std::vector<std::string> names;
  for (const Constraint& c : s.constraints()) names.push_back(c.name);
  EXPECT_EQ(names, (std::vector<std::string>{"diag_0_0", "top", "cap_1_1", "bar_1_1", "last_1"}));
}

TEST(CompactSystemTest, ZeroIsFeasibleForPacking) {
  for (int p = 1; p <= 6; ++p) {
    for (int q = 1; q <= p; ++q) {
      const LinearSystem s = CompactSystem(Params(p, q), Kind::kPacking);
      EXPECT_TRUE(s.IsFeasible(std::vector<Rational>(s.num_vars())));
    }
  }
}

// w(1,1) = 1 by itself would leave row 2 free at p = 2, q = 1.
TEST(CompactSystemTest, PartitioningFixesEveryRow) {
  const Params params(2, 1);
  OrbiMatrix d(params);
  d(1, 1) = -3;
  d(2, 1) = -1;
  LinearSystem s = CompactSystem(params, Kind::kPartitioning);
  s.SetObjective(CompactObjective(s, d));
  EXPECT_EQ(SimplexMax(s).value, Rational(-4));
}

TEST(TransformTest, Examples) {
  const Params params(2, 2);
  const Digraph g(params);
  const OrbiMatrix zero(params);
  const ExtendedPoint origin{zero, LiftVertex(zero)};
  const CompactPoint c0 = ToCompact(origin);
  for (const Rational& v : ToVector(c0)) EXPECT_TRUE(v.IsZero());
  EXPECT_EQ(FromCompact(c0), origin);

  const OrbiMatrix x = MatrixFromOnes(params, {{1, 1}, {2, 2}});
  const CompactPoint c = ToCompact({x, LiftVertex(x)});
  for (const Cell& cell : IndexSet(params)) {
    EXPECT_EQ(c.z[cell], Rational(1)) << ToString(cell);
    EXPECT_EQ(c.w[cell], Rational(1)) << ToString(cell);
  }
}

TEST(TransformTest, VectorsRoundTrip) {
  Rng rng(31);
  const Params params(4, 3);
  const auto vertices = EnumerateVertices(params, Kind::kPacking);
  for (int k = 0; k < 20; ++k) {
    const OrbiMatrix x = RandomConvexCombination(vertices, rng);
    const ExtendedPoint pt{x, Lift(x)};
    EXPECT_EQ(ExtendedFromVector(params, ToVector(pt)), pt);
    const CompactPoint c = ToCompact(pt);
    EXPECT_EQ(CompactFromVector(params, ToVector(c)), c);
  }
}

// Convex combinations of transformed integral points stay in the compact
// polytope and map back and forth exactly.
TEST(TransformTest, ConvexCombinationsRoundTrip) {
  Rng rng(37);
  for (int p = 1; p <= 4; ++p) {
    for (int q = 1; q <= p; ++q) {
      const Params params(p, q);
      for (Kind kind : {Kind::kPacking, Kind::kPartitioning}) {
        const LinearSystem compact = CompactSystem(params, kind);
        const LinearSystem extended = ExtendedSystem(params, kind);
        const auto points = EnumerateIntegralExtendedPoints(params, kind);
        for (int k = 0; k < 25; ++k) {
          std::vector<Rational> mix(compact.num_vars());
          Rational total;
          const int parts = static_cast<int>(rng.Uniform(1, 3));
          for (int t = 0; t < parts; ++t) {
            const auto& pt = points[static_cast<std::size_t>(
                rng.Uniform(0, static_cast<std::int64_t>(points.size()) - 1))];
            const Rational weight(rng.Uniform(1, 5));
            const auto v = ToVector(ToCompact(pt));
            for (std::size_t m = 0; m < v.size(); ++m) mix[m] += weight * v[m];
            total += weight;
          }
          for (Rational& v : mix) v /= total;
          ASSERT_TRUE(compact.IsFeasible(mix)) << compact.FirstViolation(mix);
          const CompactPoint c = CompactFromVector(params, mix);
          const ExtendedPoint back = FromCompact(c);
          EXPECT_TRUE(extended.IsFeasible(ToVector(back)));
          EXPECT_EQ(ToCompact(back), c);
        }
      }
    }
  }
}

TEST(ExtendedViolationTest, NamesTheBrokenCondition) {
  const Params params(2, 2);
  const OrbiMatrix x = MatrixFromOnes(params, {{1, 1}, {2, 2}});
  Flow y = LiftVertex(x);
  EXPECT_TRUE(ExtendedViolation({x, y}, Kind::kPacking).empty());
  EXPECT_FALSE(ExtendedViolation({OrbiMatrix(params), y}, Kind::kPacking).empty());
  y[Arc::Source()] = 2;
  EXPECT_FALSE(IsExtendedFeasible({x, y}, Kind::kPacking));
  EXPECT_FALSE(ExtendedViolation({OrbiMatrix(params), LiftVertex(OrbiMatrix(params))},
                                 Kind::kPartitioning)
                   .empty());
}

TEST(CompactObjectiveTest, MatchesCellObjective) {
  Rng rng(41);
  const Params params(5, 3);
  const auto vertices = EnumerateVertices(params, Kind::kPacking);
  const LinearSystem compact = CompactSystem(params, Kind::kPacking);
  for (int k = 0; k < 20; ++k) {
    const OrbiMatrix d = RandomObjective(params, rng);
    const Objective obj = CompactObjective(compact, d);
    const OrbiMatrix x = RandomConvexCombination(vertices, rng);
    const auto v = ToVector(ToCompact({x, Lift(x)}));
    Rational lhs, rhs;
    for (const auto& [var, coef] : obj.terms) lhs += coef * v[static_cast<std::size_t>(var)];
    for (const Cell& c : IndexSet(params)) rhs += d[c] * x[c];
    EXPECT_EQ(lhs, rhs);
  }
}

}  // namespace
}  // namespace orbikit
