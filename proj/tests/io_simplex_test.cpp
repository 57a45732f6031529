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

// LP/MPS writers against checked-in golden files, the LP reader, the exact
// simplex, and the JSON encodings.

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "orbikit/error.hpp"
#include "orbikit/formulations.hpp"
#include "orbikit/json_io.hpp"
#include "orbikit/lifting.hpp"
#include "orbikit/lp_io.hpp"
#include "orbikit/lp_oracle.hpp"
#include "orbikit/optimizer.hpp"
#include "orbikit/random.hpp"
#include "orbikit/sci.hpp"
#include "orbikit/verify.hpp"

namespace orbikit {
namespace {

std::string Golden(const std::string& name) {
  std::ifstream is(std::string(ORBIKIT_GOLDEN_DIR) + "/" + name, std::ios::binary);
  EXPECT_TRUE(is.good()) << name;
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

std::string Write(const LinearSystem& s, FileFormat format, const std::string& name) {
  std::ostringstream os;
  Emit(s, format, os, name);
  return os.str();
}

OrbiMatrix GoldenObjective() {
  return MatrixFromJson(ParseJson(Golden("objective_3_2.json")), Params(3, 2));
}

LinearSystem SciWithObjective() {
  LinearSystem s = SciSystem(Params(3, 2), Kind::kPacking);
  s.SetObjective(CellObjective(s, GoldenObjective()));
  return s;
}

TEST(GoldenTest, CompactOneByOneLp) {
  const std::string lp =
      Write(CompactSystem(Params(1, 1), Kind::kPacking), FileFormat::kLp, "compact_1_1");
  EXPECT_EQ(lp, Golden("compact_1_1.lp"));
  EXPECT_NE(lp.find("w_1_1 <= 1"), std::string::npos);
  EXPECT_NE(lp.find("z_1_1 - w_1_1 <= 0"), std::string::npos);
}

TEST(GoldenTest, CompactPartitioningLp) {
  EXPECT_EQ(Write(CompactSystem(Params(2, 2), Kind::kPartitioning), FileFormat::kLp,
                  "compact_2_2_partitioning"),
            Golden("compact_2_2_partitioning.lp"));
}

TEST(GoldenTest, ExtendedOneByOneMps) {
  EXPECT_EQ(Write(ExtendedSystem(Params(1, 1), Kind::kPacking), FileFormat::kMps, "extended_1_1"),
            Golden("extended_1_1.mps"));
}

TEST(GoldenTest, SciWithObjective) {
  const LinearSystem s = SciWithObjective();
  EXPECT_EQ(Write(s, FileFormat::kLp, "sci_3_2"), Golden("sci_3_2.lp"));
  EXPECT_EQ(Write(s, FileFormat::kMps, "sci_3_2"), Golden("sci_3_2.mps"));
}

TEST(LpIoTest, Deterministic) {
  const LinearSystem s = ExtendedSystem(Params(5, 3), Kind::kPartitioning);
  EXPECT_EQ(Write(s, FileFormat::kLp, "a"), Write(s, FileFormat::kLp, "a"));
  EXPECT_EQ(Write(s, FileFormat::kMps, "a"), Write(s, FileFormat::kMps, "a"));
}

TEST(LpIoTest, RoundTripsGeneratedSystems) {
  Rng rng(43);
  for (int p = 1; p <= 6; ++p) {
    for (int q = 1; q <= p; ++q) {
      const Params params(p, q);
      for (Kind kind : {Kind::kPacking, Kind::kPartitioning}) {
        const OrbiMatrix d = RandomObjective(params, rng);
        LinearSystem systems[] = {ExtendedSystem(params, kind), CompactSystem(params, kind),
                                  SciSystem(params, kind)};
        systems[0].SetObjective(CellObjective(systems[0], d));
        systems[1].SetObjective(CompactObjective(systems[1], d));
        for (LinearSystem& s : systems) {
          std::istringstream is(Write(s, FileFormat::kLp, "rt"));
          EXPECT_EQ(ReadLp(is), s);
        }
      }
    }
  }
}

// Rows with non-decimal coefficients are scaled on output and restored on
// input; bounds of every shape survive.
TEST(LpIoTest, RoundTripsFractionsAndBounds) {
  LinearSystem s;
  const int a = s.AddVariable("a", Rational(-2), Rational(1, 4));
  const int b = s.AddVariable("b", std::nullopt, Rational(4));
  const int c = s.AddVariable("c", std::nullopt, std::nullopt);
  const int e = s.AddVariable("e", Rational(1, 8), std::nullopt);
  s.AddConstraint("third", {{a, Rational(1, 3)}, {b, Rational(-2, 9)}}, Sense::kLessEqual,
                  Rational(5, 6));
  s.AddConstraint("eq", {{c, Rational(1)}, {e, Rational(3, 2)}}, Sense::kEqual, Rational(0));
  Terms wide;
  for (int k = 0; k < 20; ++k) {
    wide.emplace_back(s.AddVariable("v" + std::to_string(k), Rational(0), std::nullopt),
                      Rational(k + 1));
  }
  s.AddConstraint("wide", wide, Sense::kGreaterEqual, Rational(-1));
  s.SetObjective(Objective{false, {{a, Rational(1, 5)}, {c, Rational(-1)}}});
  std::istringstream is(Write(s, FileFormat::kLp, "fractions"));
  EXPECT_EQ(ReadLp(is), s);
}

TEST(LpIoTest, RejectsNonDecimalBounds) {
  LinearSystem s;
  s.AddVariable("a", Rational(0), Rational(1, 3));
  std::ostringstream os;
  EXPECT_THROW(Emit(s, FileFormat::kLp, os, "bad"), Error);
}

TEST(LpIoTest, ReaderRejectsMalformedInput) {
  for (const char* text : {"Maximize\n obj: x +\nEnd\n", "Subject To\n r: x <=\nEnd\n",
                           "Bounds\n 1 <= \nEnd\n", "garbage"}) {
    std::istringstream is(text);
    EXPECT_THROW(ReadLp(is), Error) << text;
  }
}

TEST(ExactDecimalTest, Examples) {
  std::string out;
  EXPECT_TRUE(ToExactDecimal(Rational(3, 4), out));
  EXPECT_EQ(out, "0.75");
  EXPECT_TRUE(ToExactDecimal(Rational(-5), out));
  EXPECT_EQ(out, "-5");
  EXPECT_TRUE(ToExactDecimal(Rational(1, 20), out));
  EXPECT_EQ(out, "0.05");
  EXPECT_FALSE(ToExactDecimal(Rational(1, 3), out));
}

TEST(SimplexTest, UnitSquare) {
  LinearSystem s;
  const int x1 = s.AddVariable("x1", Rational(0), std::nullopt);
  const int x2 = s.AddVariable("x2", Rational(0), std::nullopt);
  s.AddConstraint("c1", {{x1, Rational(1)}}, Sense::kLessEqual, Rational(1));
  s.AddConstraint("c2", {{x2, Rational(1)}}, Sense::kLessEqual, Rational(1));
  s.SetObjective(Objective{true, {{x1, Rational(1)}, {x2, Rational(1)}}});
  const SimplexResult r = SimplexMax(s);
  EXPECT_EQ(r.value, Rational(2));
  EXPECT_EQ(r.point, (std::vector<Rational>{Rational(1), Rational(1)}));
}

TEST(SimplexTest, SciSystemTwoByTwo) {
  LinearSystem s = SciSystem(Params(2, 2), Kind::kPacking);
  OrbiMatrix d(Params(2, 2));
  d(1, 1) = 1;
  d(2, 1) = -1;
  d(2, 2) = 3;
  s.SetObjective(CellObjective(s, d));
  const SimplexResult r = SimplexMax(s);
  EXPECT_EQ(r.value, Rational(4));
  EXPECT_EQ(r.point, (std::vector<Rational>{Rational(1), Rational(0), Rational(1)}));
}

TEST(SimplexTest, FractionalOptimumAndMinimization) {
  LinearSystem s;
  const int x = s.AddVariable("x", std::nullopt, std::nullopt);
  const int y = s.AddVariable("y", Rational(0), Rational(10));
  s.AddConstraint("a", {{x, Rational(2)}, {y, Rational(1)}}, Sense::kLessEqual, Rational(3));
  s.AddConstraint("b", {{x, Rational(1)}, {y, Rational(3)}}, Sense::kLessEqual, Rational(4));
  s.AddConstraint("c", {{x, Rational(1)}}, Sense::kGreaterEqual, Rational(-7));
  SimplexSolver solver(s);
  const SimplexResult best = solver.Optimize(Objective{true, {{x, Rational(1)}, {y, Rational(1)}}});
  EXPECT_EQ(best.value, Rational(2));  // x = 1, y = 1
  const SimplexResult low = solver.Optimize(Objective{false, {{x, Rational(1)}}});
  EXPECT_EQ(low.value, Rational(-7));
  const SimplexResult third = solver.Optimize(Objective{true, {{x, Rational(1, 3)}}});
  EXPECT_EQ(third.value, Rational(1, 2));
}

TEST(SimplexTest, InfeasibleAndUnbounded) {
  LinearSystem s;
  const int x = s.AddVariable("x", Rational(0), std::nullopt);
  s.AddConstraint("lo", {{x, Rational(1)}}, Sense::kGreaterEqual, Rational(2));
  s.SetObjective(Objective{true, {{x, Rational(1)}}});
  try {
    SimplexMax(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnbounded);
  }
  s.AddConstraint("hi", {{x, Rational(1)}}, Sense::kLessEqual, Rational(1));
  try {
    SimplexMax(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
  }
}

// Redundant equalities (the partitioning rows duplicate w(1,1) = 1 for row 1)
// must not break Phase I.
TEST(SimplexTest, RedundantEqualities) {
  LinearSystem s = CompactSystem(Params(3, 2), Kind::kPartitioning);
  OrbiMatrix d(Params(3, 2));
  d(3, 2) = 5;
  d(2, 1) = 2;
  s.SetObjective(CompactObjective(s, d));
  EXPECT_EQ(SimplexMax(s).value, OptimizePartitioning(d).value);
}

TEST(SimplexTest, CompactLpMatchesOptimizer) {
  Rng rng(47);
  for (int p = 1; p <= 5; ++p) {
    for (int q = 1; q <= p; ++q) {
      const Params params(p, q);
      for (Kind kind : {Kind::kPacking, Kind::kPartitioning}) {
        const LinearSystem compact = CompactSystem(params, kind);
        SimplexSolver solver(compact);
        for (int k = 0; k < 10; ++k) {
          const OrbiMatrix d = RandomObjective(params, rng);
          EXPECT_EQ(solver.Optimize(CompactObjective(compact, d)).value, Optimize(d, kind).value);
        }
      }
    }
  }
}

TEST(JsonTest, RationalsAndCells) {
  EXPECT_EQ(RationalToJson(Rational(-1, 2)), Json("-1/2"));
  EXPECT_EQ(RationalFromJson(Json(3)), Rational(3));
  EXPECT_EQ(RationalFromJson(Json("0.5")), Rational(1, 2));
  EXPECT_THROW(RationalFromJson(Json(0.5)), Error);
  EXPECT_EQ(CellFromJson(CellToJson({4, 2})), (Cell{4, 2}));
}

TEST(JsonTest, MatrixRoundTripAndErrors) {
  Rng rng(53);
  const Params params(4, 3);
  const OrbiMatrix x = RandomSubstochastic(params, rng);
  EXPECT_EQ(MatrixFromJson(MatrixToJson(x)), x);
  EXPECT_EQ(MatrixFromJson(ParseJson(R"({"entries":[]})"), params), OrbiMatrix(params));
  EXPECT_THROW(MatrixFromJson(ParseJson(R"({"p":2,"q":2,"entries":[]})"), params), Error);
  EXPECT_THROW(MatrixFromJson(ParseJson(R"({"entries":[{"i":1,"j":2,"v":1}]})"), params), Error);
  EXPECT_THROW(
      MatrixFromJson(ParseJson(R"({"entries":[{"i":1,"j":1,"v":1},{"i":1,"j":1,"v":2}]})"), params),
      Error);
  EXPECT_THROW(ParseJson("{"), Error);
}

TEST(JsonTest, FlowRoundTrip) {
  Rng rng(59);
  const Params params(5, 3);
  const auto vertices = EnumerateVertices(params, Kind::kPacking);
  for (int k = 0; k < 10; ++k) {
    const Flow y = Lift(RandomConvexCombination(vertices, rng));
    EXPECT_EQ(FlowFromJson(FlowToJson(y)), y);
  }
  EXPECT_THROW(FlowFromJson(ParseJson(R"({"p":2,"q":1,"arcs":[{"kind":"d","i":1,"j":1,"flow":1}]})")),
               Error);
  EXPECT_THROW(FlowFromJson(ParseJson(R"({"p":2,"q":1,"arcs":[{"kind":"t","i":1,"j":0,"flow":1}]})")),
               Error);
}

TEST(JsonTest, SciRoundTrip) {
  const Params params(6, 4);
  const OrbiMatrix x(params);
  for (const SCInequality& sci : EnumerateScis(params)) {
    const Json j = SciToJson(sci, x);
    EXPECT_EQ(SciFromJson(j, params), sci);
    EXPECT_EQ(j["violation"], Json("0"));
  }
}

TEST(JsonTest, OptResultRoundTrip) {
  Rng rng(61);
  const Params params(5, 4);
  for (Kind kind : {Kind::kPacking, Kind::kPartitioning}) {
    const OptResult r = Optimize(RandomObjective(params, rng), kind);
    const Json j = OptResultToJson(r, kind);
    EXPECT_EQ(j["kind"], Json(KindName(kind)));
    const OptResult back = OptResultFromJson(j);
    EXPECT_EQ(back.value, r.value);
    EXPECT_EQ(back.ones, r.ones);
    EXPECT_EQ(back.path, r.path);
  }
}

TEST(JsonTest, SystemAndStatsRoundTrip) {
  LinearSystem s = SciWithObjective();
  EXPECT_EQ(SystemFromJson(SystemToJson(s)), s);
  const LinearSystem e = ExtendedSystem(Params(3, 3), Kind::kPartitioning);
  EXPECT_EQ(SystemFromJson(ParseJson(SystemToJson(e).dump())), e);
  EXPECT_EQ(StatsFromJson(StatsToJson(e.Stats())), e.Stats());
  EXPECT_THROW(StatsFromJson(ParseJson(R"({"vars":-1})")), Error);
}

}  // namespace
}  // namespace orbikit
