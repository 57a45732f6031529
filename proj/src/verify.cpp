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

#include "orbikit/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "orbikit/error.hpp"
#include "orbikit/formulations.hpp"
#include "orbikit/lifting.hpp"
#include "orbikit/lp_oracle.hpp"
#include "orbikit/optimizer.hpp"
#include "orbikit/sci.hpp"

namespace orbikit {
namespace {

std::string Dims(const Params& params) {
  return "(" + std::to_string(params.p()) + "," + std::to_string(params.q()) + ")";
}

std::string Name(const char* base, const Params& params, std::optional<Kind> kind = {}) {
  std::string out = std::string(base) + Dims(params);
  if (kind) out += std::string(" ") + KindName(*kind);
  return out;
}

Rational Dot(const OrbiMatrix& d, const OrbiMatrix& x) {
  Rational sum;
  for (std::size_t k = 0; k < x.values().size(); ++k) {
    if (!x.values()[k].IsZero()) sum += d.values()[k] * x.values()[k];
  }
  return sum;
}

std::string MatrixText(const OrbiMatrix& m) { return MatrixToJson(m).dump(); }

CellArray<std::int64_t> ToInt64(const OrbiMatrix& d) {
  CellArray<std::int64_t> out(d.params());
  for (std::size_t k = 0; k < d.values().size(); ++k) {
    out.values()[k] = d.values()[k].ToInt64();
  }
  return out;
}

bool IsZeroOne(const std::vector<Rational>& v, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    if (!v[k].IsZero() && v[k] != Rational(1)) return false;
  }
  return true;
}

// All paths starting at prefix.front() that end at a cell.
void QualifyingPaths(const Digraph& g, std::vector<Node>& prefix,
                     std::vector<DirectedPath>& out) {
  const Node w = prefix.back();
  if (w.is_cell()) out.emplace_back(g, prefix);
  if (w.i == g.params().p()) return;
  prefix.push_back(Node::Grid(w.i + 1, w.j));
  QualifyingPaths(g, prefix, out);
  prefix.pop_back();
  if (w.j + 1 <= g.params().RowWidth(w.i + 1)) {
    prefix.push_back(Node::Grid(w.i + 1, w.j + 1));
    QualifyingPaths(g, prefix, out);
    prefix.pop_back();
  }
}

// Integer row of a linear system, for fast 0/1 enumeration.
struct IntRow {
  std::vector<std::pair<int, int>> terms;
  Sense sense;
  int rhs;
  int last;  // largest position (in assignment order) among its variables
};

bool RowHolds(const IntRow& row, const std::vector<int>& value,
              const std::vector<int>& position) {
  int lhs = 0;
  for (const auto& [var, a] : row.terms) lhs += a * value[static_cast<std::size_t>(position[var])];
  switch (row.sense) {
    case Sense::kLessEqual:
      return lhs <= row.rhs;
    case Sense::kEqual:
      return lhs == row.rhs;
    case Sense::kGreaterEqual:
      return lhs >= row.rhs;
  }
  return false;
}

// Every 0/1 point of an integer system, assigning variables in the given
// order and checking each row as soon as its last variable is fixed.
std::vector<std::vector<int>> ZeroOnePoints(const LinearSystem& sys,
                                            const std::vector<int>& order) {
  const std::size_t n = order.size();
  std::vector<int> position(n);
  for (std::size_t k = 0; k < n; ++k) position[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
  std::vector<std::vector<const IntRow*>> due(n);
  std::vector<IntRow> rows;
  rows.reserve(sys.num_constraints());
  for (const Constraint& c : sys.constraints()) {
    IntRow row{{}, c.sense, static_cast<int>(c.rhs.ToInt64()), -1};
    for (const auto& [var, a] : c.terms) {
      row.terms.emplace_back(var, static_cast<int>(a.ToInt64()));
      row.last = std::max(row.last, position[static_cast<std::size_t>(var)]);
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::vector<int>> out;
  std::vector<int> value(n, 0);
  for (const IntRow& row : rows) {
    if (row.last < 0) {
      if (!RowHolds(row, value, position)) return out;
    } else {
      due[static_cast<std::size_t>(row.last)].push_back(&row);
    }
  }
  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (k == n) {
      std::vector<int> point(n);
      for (std::size_t v = 0; v < n; ++v) point[v] = value[static_cast<std::size_t>(position[v])];
      out.push_back(std::move(point));
      return;
    }
    for (int bit = 0; bit <= 1; ++bit) {
      value[k] = bit;
      bool ok = true;
      for (const IntRow* row : due[k]) {
        if (!RowHolds(*row, value, position)) {
          ok = false;
          break;
        }
      }
      if (ok) assign(k + 1);
    }
    value[k] = 0;
  };
  assign(0);
  return out;
}

}  // namespace

Json CheckToJson(const CheckResult& c) {
  Json j{{"name", c.name},
         {"passed", c.passed},
         {"instances", c.instances},
         {"detail", c.detail}};
  if (!c.passed) j["failure"] = c.failure;
  return j;
}

OrbiMatrix RandomObjective(const Params& params, Rng& rng, int lo, int hi) {
  OrbiMatrix d(params);
  for (Rational& v : d.values()) v = Rational(rng.Uniform(lo, hi));
  return d;
}

OrbiMatrix RandomConvexCombination(const std::vector<OrbiMatrix>& vertices, Rng& rng) {
  const auto n = static_cast<std::int64_t>(vertices.size());
  const std::int64_t count = rng.Uniform(1, std::min<std::int64_t>(4, n));
  OrbiMatrix x(vertices.front().params());
  std::vector<std::pair<std::size_t, std::int64_t>> picks;
  std::int64_t total = 0;
  for (std::int64_t k = 0; k < count; ++k) {
    picks.emplace_back(static_cast<std::size_t>(rng.Uniform(0, n - 1)), rng.Uniform(1, 9));
    total += picks.back().second;
  }
  for (const auto& [v, w] : picks) {
    const Rational weight(w, total);
    for (std::size_t k = 0; k < x.values().size(); ++k) {
      if (!vertices[v].values()[k].IsZero()) x.values()[k] += weight;
    }
  }
  return x;
}

OrbiMatrix RandomSubstochastic(const Params& params, Rng& rng) {
  OrbiMatrix x(params);
  for (int i = 1; i <= params.p(); ++i) {
    std::vector<std::int64_t> w(static_cast<std::size_t>(params.RowWidth(i)) + 1);
    std::int64_t total = 0;
    for (auto& v : w) total += (v = rng.Uniform(0, 3));
    if (total == 0) continue;
    for (int j = 1; j <= params.RowWidth(i); ++j) x(i, j) = Rational(w[j], total);
  }
  return x;
}

CheckResult CheckOptimizer(const Params& params, Rng& rng, int objectives) {
  CheckResult r{Name("optimizer", params)};
  const auto packing = EnumerateVertices(params, Kind::kPacking);
  const auto partitioning = EnumerateVertices(params, Kind::kPartitioning);
  for (int k = 0; k < objectives; ++k) {
    const OrbiMatrix d = RandomObjective(params, rng);
    for (Kind kind : {Kind::kPacking, Kind::kPartitioning}) {
      ++r.instances;
      const auto& vertices = kind == Kind::kPacking ? packing : partitioning;
      const Rational expected = BruteForceMax(vertices, d);
      const OptResult exact = Optimize(d, kind);
      const OptResult fast = kind == Kind::kPacking ? OptimizePacking(ToInt64(d))
                                                    : OptimizePartitioning(ToInt64(d));
      const OrbiMatrix x = exact.Matrix();
      if (exact.value != expected || fast.value != expected) {
        r.Fail(std::string(KindName(kind)) + " d=" + MatrixText(d) + ": optimizer " +
               exact.value.ToString() + " / int64 " + fast.value.ToString() +
               ", brute force " + expected.ToString());
      } else if (!IsVertex(x, kind) || Dot(d, x) != expected) {
        r.Fail(std::string(KindName(kind)) + " d=" + MatrixText(d) +
               ": returned matrix is not an optimal vertex");
      }
    }
  }
  r.detail = std::to_string(packing.size()) + " packing / " +
             std::to_string(partitioning.size()) + " partitioning vertices";
  return r;
}

CheckResult CheckExtendedLp(const Params& params, Kind kind, Rng& rng, int objectives) {
  CheckResult r{Name("extended-lp", params, kind)};
  const LinearSystem sys = ExtendedSystem(params, kind);
  const auto points = EnumerateIntegralExtendedPoints(params, kind);
  SimplexSolver solver(sys);
  std::size_t integral = 0;
  for (int k = 0; k < objectives; ++k) {
    ++r.instances;
    const OrbiMatrix d = RandomObjective(params, rng);
    const Rational dp = Optimize(d, kind).value;
    const SimplexResult lp = solver.Optimize(CellObjective(sys, d));
    std::optional<Rational> best;
    for (const ExtendedPoint& pt : points) {
      const Rational v = Dot(d, pt.x);
      if (!best || v > *best) best = v;
    }
    if (IsZeroOne(lp.point, lp.point.size())) ++integral;
    if (lp.value != dp) {
      r.Fail("d=" + MatrixText(d) + ": simplex " + lp.value.ToString() + ", optimizer " +
             dp.ToString());
    } else if (!best || *best != dp) {
      r.Fail("d=" + MatrixText(d) + ": no integral extended point attains " + dp.ToString());
    }
  }
  r.detail = std::to_string(points.size()) + " integral points; simplex point 0/1 in " +
             std::to_string(integral) + "/" + std::to_string(objectives);
  return r;
}

CheckResult CheckCompactLp(const Params& params, Kind kind, Rng& rng, int objectives) {
  CheckResult r{Name("compact-lp", params, kind)};
  const LinearSystem sys = CompactSystem(params, kind);
  SimplexSolver solver(sys);
  for (int k = 0; k < objectives; ++k) {
    ++r.instances;
    const OrbiMatrix d = RandomObjective(params, rng);
    const Rational dp = Optimize(d, kind).value;
    const SimplexResult lp = solver.Optimize(CompactObjective(sys, d));
    if (lp.value != dp) {
      r.Fail("d=" + MatrixText(d) + ": simplex " + lp.value.ToString() + ", optimizer " +
             dp.ToString());
    }
  }
  return r;
}

CheckResult CheckProjection(const Params& params, Kind kind) {
  CheckResult r{Name("projection", params, kind)};
  const auto vertices = EnumerateVertices(params, kind);
  const auto points = EnumerateIntegralExtendedPoints(params, kind);
  std::set<std::vector<Rational>> projected;
  std::set<std::vector<Rational>> expected;
  for (const ExtendedPoint& pt : points) projected.insert(pt.x.values());
  for (const OrbiMatrix& v : vertices) {
    expected.insert(v.values());
    ++r.instances;
    const ExtendedPoint lifted{v, LiftVertex(v)};
    if (!IsExtendedFeasible(lifted, kind)) r.Fail("vertex " + MatrixText(v) + " does not lift");
  }
  for (const auto& x : projected) {
    if (!expected.count(x)) {
      r.Fail("projection " + MatrixText(OrbiMatrix(params, x)) + " is not a vertex");
    }
  }
  for (const auto& x : expected) {
    if (!projected.count(x)) {
      r.Fail("vertex " + MatrixText(OrbiMatrix(params, x)) + " is not a projection");
    }
  }
  r.detail = std::to_string(points.size()) + " integral points project onto " +
             std::to_string(projected.size()) + " of " + std::to_string(vertices.size()) +
             " vertices";
  return r;
}

CheckResult CheckSciLp(const Params& params, Kind kind, Rng& rng, int objectives) {
  CheckResult r{Name("sci-lp", params, kind)};
  const LinearSystem sys = SciSystem(params, kind);
  SimplexSolver solver(sys);
  std::size_t integral = 0;
  std::size_t degenerate = 0;
  std::size_t fractional_degenerate = 0;
  for (int k = 0; k < objectives; ++k) {
    ++r.instances;
    const OrbiMatrix d = RandomObjective(params, rng);
    const Rational dp = Optimize(d, kind).value;
    const SimplexResult lp = solver.Optimize(CellObjective(sys, d));
    const bool zero_one = IsZeroOne(lp.point, lp.point.size());
    integral += zero_one ? 1 : 0;
    degenerate += lp.degenerate ? 1 : 0;
    fractional_degenerate += (!zero_one && lp.degenerate) ? 1 : 0;
    if (lp.value != dp) {
      r.Fail("d=" + MatrixText(d) + ": simplex " + lp.value.ToString() + ", optimizer " +
             dp.ToString());
    }
  }
  r.detail = std::to_string(sys.num_constraints()) + " rows; simplex point 0/1 in " +
             std::to_string(integral) + "/" + std::to_string(objectives) + " (degenerate " +
             std::to_string(degenerate) + ", non-0/1 and degenerate " +
             std::to_string(fractional_degenerate) + ")";
  return r;
}

CheckResult CheckSciValidity(const Params& params) {
  CheckResult r{Name("sci-validity", params)};
  const auto scis = EnumerateScis(params);
  const auto vertices = EnumerateVertices(params, Kind::kPacking);
  for (const SCInequality& sci : scis) {
    for (const OrbiMatrix& v : vertices) {
      ++r.instances;
      if (sci.Violation(v).Sign() > 0) {
        r.Fail(sci.ToString() + " cuts off vertex " + MatrixText(v));
      }
    }
  }
  r.detail = std::to_string(scis.size()) + " SCIs checked against " +
             std::to_string(vertices.size()) + " vertices";
  return r;
}

CheckResult CheckLifting(const Params& params, Rng& rng, int points) {
  CheckResult r{Name("lifting", params)};
  const auto vertices = EnumerateVertices(params, Kind::kPacking);
  for (int k = 0; k < points; ++k) {
    ++r.instances;
    const OrbiMatrix x = RandomConvexCombination(vertices, rng);
    const Flow y = Lift(x);
    const std::string flow = UnitFlowViolation(y);
    const std::string ext = ExtendedViolation({x, y}, Kind::kPacking);
    if (!flow.empty()) {
      r.Fail("x=" + MatrixText(x) + ": " + flow);
    } else if (!HasSaturatedDiagonals(x, y)) {
      r.Fail("x=" + MatrixText(x) + ": a vertical arc carries flow beside an unsaturated diagonal");
    } else if (!ext.empty()) {
      r.Fail("x=" + MatrixText(x) + ": violates " + ext);
    }
  }
  return r;
}

CheckResult CheckCutIdentities(const Params& params) {
  CheckResult r{Name("cut-identities", params)};
  const Digraph g(params);
  std::vector<DirectedPath> gammas;
  for (const Node& start : g.Nodes()) {
    if (!start.is_grid() || !(start.j == 0 || (start.i == start.j && start.j >= 1))) continue;
    std::vector<Node> prefix = {start};
    QualifyingPaths(g, prefix, gammas);
  }
  struct Prepared {
    const DirectedPath* gamma;
    std::vector<Arc> diag_in_s;
    std::vector<Arc> vert_out_t;
    std::vector<Cell> bar;
  };
  std::vector<Prepared> prepared;
  for (const DirectedPath& gamma : gammas) {
    const PathNodeSets sets = ComputePathNodeSets(gamma);
    std::vector<Node> inner(gamma.nodes().begin(), gamma.nodes().end() - 1);
    const CutSets all = ComputeCutSets(g, gamma.nodes());
    const CutSets s = ComputeCutSets(g, sets.s);
    const CutSets t = ComputeCutSets(g, sets.t);
    CutSets without_end = ComputeCutSets(g, inner);
    // A final vertical arc of the path leaves N \ {end} but not T; the
    // identity holds once that arc is set aside.
    if (gamma.nodes().size() > 1) {
      const Arc last = gamma.Arcs().back();
      std::erase(without_end.vert_out, last);
    }
    if (all.diag_in != s.diag_in || without_end.vert_out != t.vert_out) {
      r.Fail("arc-set identity fails for the path ending at " + ToString(gamma.back()) +
             " from " + ToString(gamma.front()));
    }
    prepared.push_back({&gamma, s.diag_in, t.vert_out, Bar(params, gamma.back().i, gamma.back().j)});
  }
  std::vector<std::pair<Cell, std::vector<Arc>>> columns;
  for (const Cell& c : IndexSet(params)) {
    columns.emplace_back(c, ComputeCutSets(g, CellNodes(ColumnSegment(params, c.i, c.j))).diag_in);
  }
  const auto flows = EnumeratePaths(params);
  for (const DirectedPath& path : flows) {
    const Flow y = PathIncidence(g, path);
    for (const Prepared& pr : prepared) {
      ++r.instances;
      // Column-0 paths add the unit source flow; their diag_in(S) is empty
      // unless the path enters some node vertically after leaving column 0.
      const Rational lhs = (pr.gamma->front().j == 0 ? Rational(1) : Rational(0)) +
                           SumOver(y, pr.diag_in_s) - SumOver(y, pr.vert_out_t);
      if (lhs != FlowThrough(y, pr.bar)) {
        r.Fail("cut identity fails for the path from " + ToString(pr.gamma->front()) + " to " +
               ToString(pr.gamma->back()));
      }
    }
    for (const auto& [c, diag_in] : columns) {
      ++r.instances;
      if (SumOver(y, diag_in) != FlowThrough(y, Bar(params, c.i, c.j))) {
        r.Fail("column identity fails at " + ToString(c));
      }
    }
  }
  std::size_t general_only = 0;
  for (const Prepared& pr : prepared) {
    if (pr.gamma->front().j == 0 && !pr.diag_in_s.empty()) ++general_only;
  }
  r.detail = std::to_string(gammas.size()) + " paths x " + std::to_string(flows.size()) +
             " path flows; " + std::to_string(general_only) +
             " column-0 paths need the diag_in(S) term";
  return r;
}

CheckResult CheckCompactBijection(const Params& params, Kind kind) {
  CheckResult r{Name("compact-bijection", params, kind)};
  const LinearSystem compact = CompactSystem(params, kind);
  const auto points = EnumerateIntegralExtendedPoints(params, kind);
  std::set<std::vector<Rational>> images;
  for (const ExtendedPoint& pt : points) {
    ++r.instances;
    const CompactPoint c = ToCompact(pt);
    const std::vector<Rational> v = ToVector(c);
    images.insert(v);
    if (!compact.IsFeasible(v)) {
      r.Fail("image of x=" + MatrixText(pt.x) + " violates " + compact.FirstViolation(v));
    } else if (!(FromCompact(c) == pt)) {
      r.Fail("FromCompact(ToCompact(.)) differs for x=" + MatrixText(pt.x));
    }
  }
  // The compact side, enumerated independently: cell by cell, z before w.
  const std::size_t n = params.NumCells();
  std::vector<int> order;
  for (std::size_t k = 0; k < n; ++k) {
    order.push_back(static_cast<int>(k));
    order.push_back(static_cast<int>(n + k));
  }
  const auto compact_points = ZeroOnePoints(compact, order);
  for (const auto& bits : compact_points) {
    ++r.instances;
    std::vector<Rational> v(bits.begin(), bits.end());
    const CompactPoint c = CompactFromVector(params, v);
    const ExtendedPoint e = FromCompact(c);
    const std::string why = ExtendedViolation(e, kind);
    if (!why.empty()) {
      r.Fail("preimage of compact point " + std::to_string(r.instances) + " violates " + why);
    } else if (!(ToCompact(e) == c)) {
      r.Fail("ToCompact(FromCompact(.)) differs");
    } else if (!images.count(v)) {
      r.Fail("0/1 compact point has no integral extended preimage");
    }
  }
  if (compact_points.size() != points.size()) {
    r.Fail(std::to_string(points.size()) + " integral extended points but " +
           std::to_string(compact_points.size()) + " 0/1 compact points");
  }
  r.detail = std::to_string(points.size()) + " integral points on each side";
  return r;
}

CheckResult CheckSizeBounds(const Params& params) {
  CheckResult r{Name("size-bounds", params)};
  r.instances = 1;
  const SystemStats s = CompactSystem(params, Kind::kPacking).Stats();
  const std::size_t pq = static_cast<std::size_t>(params.p()) * static_cast<std::size_t>(params.q());
  r.detail = "vars=" + std::to_string(s.num_vars) + " general_cons=" +
             std::to_string(s.num_general_constraints) + " nnz=" +
             std::to_string(s.num_nonzeros) + " pq=" + std::to_string(pq);
  if (params.q() < 2) {
    r.detail += " (bounds apply for q >= 2)";
    return r;
  }
  if (s.num_vars >= 2 * pq) r.Fail("vars " + std::to_string(s.num_vars) + " >= 2pq");
  if (s.num_general_constraints >= 4 * pq) {
    r.Fail("constraints " + std::to_string(s.num_general_constraints) + " >= 4pq");
  }
  if (s.num_nonzeros >= 10 * pq) r.Fail("nonzeros " + std::to_string(s.num_nonzeros) + " >= 10pq");
  return r;
}

CheckResult CheckSeparation(const Params& params, Rng& rng, int points) {
  CheckResult r{Name("separation", params)};
  const auto scis = EnumerateScis(params);
  std::size_t found = 0;
  std::size_t scanned = 0;
  std::size_t agree = 0;
  for (int k = 0; k < points; ++k) {
    ++r.instances;
    const OrbiMatrix x = RandomSubstochastic(params, rng);
    const std::optional<SCInequality> sep = Separate(x);
    const std::optional<std::size_t> scan = MostViolated(scis, x);
    const CellArray<Rational> slack = BarSlack(x, Lift(x));
    const bool lift_fails =
        std::any_of(slack.values().begin(), slack.values().end(),
                    [](const Rational& v) { return v.Sign() < 0; });
    found += sep ? 1 : 0;
    scanned += scan ? 1 : 0;
    agree += sep.has_value() == scan.has_value() ? 1 : 0;
    if (sep) {
      if (sep->Violation(x).Sign() <= 0) {
        r.Fail("x=" + MatrixText(x) + ": returned " + sep->ToString() + " is not violated");
      } else if (std::find(scis.begin(), scis.end(), *sep) == scis.end()) {
        r.Fail("x=" + MatrixText(x) + ": returned " + sep->ToString() + " is not an SCI");
      }
    }
    if (scan && lift_fails && !sep) {
      r.Fail("x=" + MatrixText(x) + ": scan finds " + scis[*scan].ToString() +
             " but separation returns none");
    }
  }
  r.detail = "separation found " + std::to_string(found) + ", scan found " +
             std::to_string(scanned) + ", agreement " + std::to_string(agree) + "/" +
             std::to_string(points);
  return r;
}

Suite ParseSuite(const std::string& name) {
  if (name == "all") return Suite::kAll;
  if (name == "cuts") return Suite::kCuts;
  if (name == "integrality") return Suite::kIntegrality;
  if (name == "projection") return Suite::kProjection;
  if (name == "sci") return Suite::kSci;
  if (name == "transform") return Suite::kTransform;
  throw Error(ErrorCode::kInvalidParams, "unknown suite '" + name + "'");
}

const char* SuiteName(Suite suite) {
  switch (suite) {
    case Suite::kAll:
      return "all";
    case Suite::kCuts:
      return "cuts";
    case Suite::kIntegrality:
      return "integrality";
    case Suite::kProjection:
      return "projection";
    case Suite::kSci:
      return "sci";
    case Suite::kTransform:
      return "transform";
  }
  return "?";
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

Json VerifyReport::ToJson() const {
  Json list = Json::array();
  for (const CheckResult& c : checks) list.push_back(CheckToJson(c));
  return Json{{"p", params.p()},     {"q", params.q()},
              {"suite", SuiteName(suite)}, {"seed", seed},
              {"passed", passed()},  {"checks", list}};
}

VerifyReport RunSuite(const Params& params, Suite suite, std::uint64_t seed) {
  constexpr int kObjectives = 100;
  constexpr int kPoints = 500;
  VerifyReport report{params, suite, seed, {}};
  Rng base(seed);
  std::uint64_t stream = 0;
  auto next = [&]() { return base.Fork(stream++); };
  auto wants = [&](Suite s) { return suite == Suite::kAll || suite == s; };

  if (wants(Suite::kCuts)) report.checks.push_back(CheckCutIdentities(params));
  if (wants(Suite::kIntegrality)) {
    Rng rng = next();
    report.checks.push_back(CheckOptimizer(params, rng, kObjectives));
    for (Kind kind : {Kind::kPacking, Kind::kPartitioning}) {
      Rng ext = next();
      report.checks.push_back(CheckExtendedLp(params, kind, ext, kObjectives));
      Rng comp = next();
      report.checks.push_back(CheckCompactLp(params, kind, comp, kObjectives));
    }
  }
  if (wants(Suite::kProjection)) {
    for (Kind kind : {Kind::kPacking, Kind::kPartitioning}) {
      report.checks.push_back(CheckProjection(params, kind));
    }
  }
  if (wants(Suite::kSci)) {
    report.checks.push_back(CheckSciValidity(params));
    for (Kind kind : {Kind::kPacking, Kind::kPartitioning}) {
      Rng rng = next();
      report.checks.push_back(CheckSciLp(params, kind, rng, kObjectives));
    }
    Rng lift = next();
    report.checks.push_back(CheckLifting(params, lift, kPoints));
    Rng sep = next();
    report.checks.push_back(CheckSeparation(params, sep, kPoints));
  }
  if (wants(Suite::kTransform)) {
    for (Kind kind : {Kind::kPacking, Kind::kPartitioning}) {
      report.checks.push_back(CheckCompactBijection(params, kind));
    }
    report.checks.push_back(CheckSizeBounds(params));
  }
  return report;
}

}  // namespace orbikit
