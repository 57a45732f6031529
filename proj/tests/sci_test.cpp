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

#include <gtest/gtest.h>

#include <set>

#include "orbikit/error.hpp"
#include "orbikit/lifting.hpp"
#include "orbikit/lp_oracle.hpp"
#include "orbikit/random.hpp"
#include "orbikit/verify.hpp"

namespace orbikit {
namespace {

std::uint64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int t = 1; t <= k; ++t) r = r * static_cast<std::uint64_t>(n - k + t) / t;
  return r;
}

std::uint64_t ClosedFormCount(const Params& params) {
  std::uint64_t total = 0;
  for (int i = 2; i <= params.p(); ++i) {
    for (int j = 2; j <= params.RowWidth(i); ++j) {
      for (int l = 1; l <= j - 1; ++l) total += Binomial(i - 1 - l, j - 1 - l);
    }
  }
  return total;
}

TEST(EnumerateScisTest, TwoByTwoHasOne) {
  const auto scis = EnumerateScis(Params(2, 2));
  ASSERT_EQ(scis.size(), 1u);
  EXPECT_EQ(scis[0].anchor, (Cell{2, 2}));
  EXPECT_EQ(scis[0].bar, (std::vector<Cell>{{2, 2}}));
  EXPECT_EQ(scis[0].s(), (std::vector<Cell>{{1, 1}}));
  EXPECT_EQ(scis[0].ToString(), "x(B(2,2)) <= x{(1,1)}");
}

TEST(EnumerateScisTest, OneByOneHasNone) { EXPECT_TRUE(EnumerateScis(Params(1, 1)).empty()); }

TEST(EnumerateScisTest, ThreeByTwoHasExactlyTwo) {
  const auto scis = EnumerateScis(Params(3, 2));
  ASSERT_EQ(scis.size(), 2u);
  EXPECT_EQ(scis[0].anchor, (Cell{2, 2}));
  EXPECT_EQ(scis[0].s(), (std::vector<Cell>{{1, 1}}));
  EXPECT_EQ(scis[1].anchor, (Cell{3, 2}));
  EXPECT_EQ(scis[1].s(), (std::vector<Cell>{{1, 1}, {2, 1}}));
  // x32 <= x22 is not among them: it fails at a packing vertex.
  const OrbiMatrix v = MatrixFromOnes(Params(3, 2), {{1, 1}, {2, 1}, {3, 2}});
  EXPECT_TRUE(IsVertex(v, Kind::kPacking));
  EXPECT_GT(v(3, 2), v(2, 2));
}

TEST(EnumerateScisTest, EightBySixHasTwoWithBarEightFive) {
  const auto scis = EnumerateScis(Params(8, 6));
  std::size_t with_bar = 0;
  for (const SCInequality& sci : scis) {
    if (sci.bar == std::vector<Cell>{{8, 5}, {8, 6}}) ++with_bar;
  }
  EXPECT_GE(with_bar, 2u);
}

TEST(EnumerateScisTest, CountMatchesClosedFormAndIsDuplicateFree) {
  for (int p = 1; p <= 9; ++p) {
    for (int q = 1; q <= p; ++q) {
      const Params params(p, q);
      const auto scis = EnumerateScis(params);
      EXPECT_EQ(scis.size(), ClosedFormCount(params));
      EXPECT_EQ(CountScis(params, 1u << 30), ClosedFormCount(params));
      std::set<std::pair<Cell, std::vector<Cell>>> seen;
      for (const SCInequality& sci : scis) {
        EXPECT_TRUE(seen.emplace(sci.anchor, sci.s()).second) << sci.ToString();
        // Consecutive cells of S go one row down and at most one column right.
        for (std::size_t k = 1; k < sci.s().size(); ++k) {
          EXPECT_GT(sci.s()[k].i, sci.s()[k - 1].i);
          EXPECT_GE(sci.s()[k].j, sci.s()[k - 1].j);
        }
        EXPECT_EQ(sci.s().front().i, sci.s().front().j);
        EXPECT_EQ(SciFromCells(params, sci.anchor, sci.s()), sci);
        EXPECT_EQ(MakeSci(sci.shifted_column.witness_path), sci);
      }
    }
  }
}

TEST(EnumerateScisTest, ValidAtEveryPackingVertex) {
  for (int p = 2; p <= 7; ++p) {
    for (int q = 2; q <= p; ++q) {
      const Params params(p, q);
      const auto scis = EnumerateScis(params);
      for (const OrbiMatrix& v : EnumerateVertices(params, Kind::kPacking)) {
        for (const SCInequality& sci : scis) ASSERT_LE(sci.Violation(v).Sign(), 0) << sci.ToString();
      }
    }
  }
}

TEST(EnumerateScisTest, SizeCapAbortsEarly) {
  try {
    EnumerateScis(Params(20, 10), 10000);
    FAIL() << "expected a size cap error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeCap);
  }
  EXPECT_GT(CountScis(Params(20, 10), 10000), 10000u);
  EXPECT_THROW(SciSystem(Params(20, 10), Kind::kPacking, 10000), Error);
}

TEST(SciFromCellsTest, RejectsNonColumns) {
  const Params params(4, 3);
  EXPECT_THROW(SciFromCells(params, {3, 3}, {{1, 1}, {2, 1}}), Error);  // ends off (2,2)
  EXPECT_THROW(SciFromCells(params, {1, 1}, {{1, 1}}), Error);          // anchor row 1
  EXPECT_THROW(SciFromCells(params, {3, 2}, {{2, 1}}), Error);          // start off diagonal
  EXPECT_THROW(SciFromCells(params, {3, 2}, {}), Error);
  EXPECT_NO_THROW(SciFromCells(params, {3, 3}, {{1, 1}}));
}

TEST(SciSystemTest, Sizes) {
  const LinearSystem s22 = SciSystem(Params(2, 2), Kind::kPacking);
  EXPECT_EQ(s22.num_vars(), 3u);
  EXPECT_EQ(s22.num_constraints(), 6u);
  const LinearSystem s11 = SciSystem(Params(1, 1), Kind::kPacking);
  EXPECT_EQ(s11.num_vars(), 1u);
  ASSERT_EQ(s11.num_constraints(), 2u);
  EXPECT_EQ(s11.constraints()[0].sense, Sense::kGreaterEqual);
  EXPECT_EQ(s11.constraints()[1].sense, Sense::kLessEqual);
  EXPECT_EQ(s11.constraints()[1].rhs, Rational(1));
  const LinearSystem part = SciSystem(Params(3, 2), Kind::kPartitioning);
  EXPECT_EQ(part.constraints()[5].sense, Sense::kEqual);
}

TEST(SeparateTest, VerticesGiveNone) {
  for (int p = 1; p <= 6; ++p) {
    for (int q = 1; q <= p; ++q) {
      for (const OrbiMatrix& v : EnumerateVertices(Params(p, q), Kind::kPacking)) {
        EXPECT_FALSE(Separate(v).has_value());
      }
    }
  }
}

TEST(SeparateTest, TwoByTwoExample) {
  const OrbiMatrix x = MatrixFromOnes(Params(2, 2), {{2, 2}});
  const auto sci = Separate(x);
  ASSERT_TRUE(sci.has_value());
  EXPECT_EQ(*sci, EnumerateScis(Params(2, 2))[0]);
  EXPECT_EQ(sci->Violation(x), Rational(1));
}

TEST(SeparateTest, ThreeByTwoExample) {
  const Params params(3, 2);
  OrbiMatrix x(params);
  x(1, 1) = Rational(1, 2);
  x(2, 2) = 1;
  const auto sci = Separate(x);
  ASSERT_TRUE(sci.has_value());
  EXPECT_GT(sci->Violation(x).Sign(), 0);
  EXPECT_NE(std::find(sci->bar.begin(), sci->bar.end(), Cell{2, 2}), sci->bar.end());
  const auto scis = EnumerateScis(params);
  EXPECT_NE(std::find(scis.begin(), scis.end(), *sci), scis.end());
  EXPECT_TRUE(MostViolated(scis, x).has_value());
}

TEST(SeparateTest, RejectsInvalidPoints) {
  OrbiMatrix x(Params(2, 2));
  x(2, 1) = Rational(2, 3);
  x(2, 2) = Rational(2, 3);
  EXPECT_THROW(Separate(x), Error);
  x(2, 2) = Rational(-1, 3);
  EXPECT_THROW(Separate(x), Error);
}

// Exactness: separate finds a cut iff the exhaustive scan does, and the cut
// is one of the enumerated inequalities.
TEST(SeparateTest, ExactAgainstExhaustiveScan) {
  Rng rng(29);
  for (int p = 2; p <= 6; ++p) {
    for (int q = 2; q <= p; ++q) {
      const Params params(p, q);
      const auto scis = EnumerateScis(params);
      for (int k = 0; k < 60; ++k) {
        const OrbiMatrix x = RandomSubstochastic(params, rng);
        const auto found = Separate(x);
        const auto scan = MostViolated(scis, x);
        ASSERT_EQ(found.has_value(), scan.has_value());
        if (found) {
          EXPECT_GT(found->Violation(x).Sign(), 0);
          EXPECT_NE(std::find(scis.begin(), scis.end(), *found), scis.end());
        } else {
          const CellArray<Rational> slack = BarSlack(x, Lift(x));
          for (const Rational& s : slack.values()) EXPECT_GE(s.Sign(), 0);
        }
      }
    }
  }
}

}  // namespace
}  // namespace orbikit
