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

namespace orbikit {
namespace {

std::string Suffix(int i, int j) {
  return "_" + std::to_string(i) + "_" + std::to_string(j);
}

// Column index of a z or w variable in CompactSystem, or -1 outside the
// index set (such terms are dropped).
class CompactIndex {
 public:
  explicit CompactIndex(const Params& params)
      : params_(params), n_(static_cast<int>(params.NumCells())) {}

  int Z(int i, int j) const {
    return params_.Contains(i, j) ? static_cast<int>(params_.CellIndex(i, j))
                                  : -1;
  }
  int W(int i, int j) const {
    return params_.Contains(i, j)
               ? n_ + static_cast<int>(params_.CellIndex(i, j))
               : -1;
  }

 private:
  Params params_;
  int n_;
};

void AddTerm(Terms& terms, int var, std::int64_t coef) {
  if (var >= 0) terms.emplace_back(var, Rational(coef));
}

}  // namespace

std::string CellVarName(char prefix, int i, int j) {
  return std::string(1, prefix) + Suffix(i, j);
}

std::string ArcVarName(const Arc& a) {
  switch (a.kind) {
    case Arc::Kind::kSource:
      return "y_s";
    case Arc::Kind::kVertical:
      return "y_v" + Suffix(a.i, a.j);
    case Arc::Kind::kDiagonal:
      return "y_d" + Suffix(a.i, a.j);
    case Arc::Kind::kSink:
      return "y_t_" + std::to_string(a.j);
  }
  return {};
}

LinearSystem ExtendedSystem(const Params& params, Kind kind) {
  const Digraph g(params);
  const int n = static_cast<int>(params.NumCells());
  LinearSystem sys;
  for (const Cell& c : IndexSet(params)) sys.AddVariable(CellVarName('x', c.i, c.j));
  for (const Arc& a : g.Arcs()) sys.AddVariable(ArcVarName(a), Rational(0));

  auto x = [&](int i, int j) { return static_cast<int>(params.CellIndex(i, j)); };
  auto y = [&](const Arc& a) { return n + static_cast<int>(g.ArcIndex(a)); };

  for (const Node& v : g.Nodes()) {
    if (!v.is_grid()) continue;
    Terms terms;
    for (const Arc& a : g.InArcs(v)) terms.emplace_back(y(a), Rational(1));
    for (const Arc& a : g.OutArcs(v)) terms.emplace_back(y(a), Rational(-1));
    sys.AddConstraint("flow" + Suffix(v.i, v.j), std::move(terms), Sense::kEqual,
                      Rational(0));
  }
  sys.AddConstraint("source", {{y(Arc::Source()), Rational(1)}}, Sense::kEqual,
                    Rational(1));
  for (const Cell& c : IndexSet(params)) {
    sys.AddConstraint("cap" + Suffix(c.i, c.j),
                      {{y(Arc::Diagonal(c.i - 1, c.j - 1)), Rational(1)},
                       {x(c.i, c.j), Rational(-1)}},
                      Sense::kLessEqual, Rational(0));
  }
  for (const Cell& c : IndexSet(params)) {
    Terms terms;
    for (const Cell& b : Bar(params, c.i, c.j)) terms.emplace_back(x(b.i, b.j), Rational(1));
    for (const Cell& s : ColumnSegment(params, c.i, c.j)) {
      terms.emplace_back(y(Arc::Diagonal(s.i - 1, s.j - 1)), Rational(-1));
    }
    sys.AddConstraint("bar" + Suffix(c.i, c.j), std::move(terms),
                      Sense::kLessEqual, Rational(0));
  }
  if (kind == Kind::kPartitioning) {
    for (int i = 1; i <= params.p(); ++i) {
      Terms terms;
      for (int j = 1; j <= params.RowWidth(i); ++j) terms.emplace_back(x(i, j), Rational(1));
      sys.AddConstraint("row_" + std::to_string(i), std::move(terms),
                        Sense::kEqual, Rational(1));
    }
  }
  return sys;
}

LinearSystem CompactSystem(const Params& params, Kind kind) {
  const int p = params.p();
  const CompactIndex idx(params);
  LinearSystem sys;
  for (const Cell& c : IndexSet(params)) sys.AddVariable(CellVarName('z', c.i, c.j));
  for (const Cell& c : IndexSet(params)) sys.AddVariable(CellVarName('w', c.i, c.j));

  // Nonnegativity of Diagonal(i, j).
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < params.RowWidth(i + 1); ++j) {
      Terms terms;
      AddTerm(terms, idx.W(i + 1, j + 1), 1);
      AddTerm(terms, idx.W(i, j + 1), -1);
      sys.AddConstraint("diag" + Suffix(i, j), std::move(terms),
                        Sense::kGreaterEqual, Rational(0));
    }
  }
  // Nonnegativity of Vertical(i, j), j >= 1.
  for (const Cell& c : IndexSet(params)) {
    if (c.i == p) continue;
    Terms terms;
    AddTerm(terms, idx.W(c.i, c.j), 1);
    AddTerm(terms, idx.W(c.i + 1, c.j + 1), -1);
    sys.AddConstraint("vert" + Suffix(c.i, c.j), std::move(terms),
                      Sense::kGreaterEqual, Rational(0));
  }
  sys.AddConstraint("top", {{idx.W(p, 1), Rational(1)}}, Sense::kLessEqual,
                    Rational(1));
  for (const Cell& c : IndexSet(params)) {
    Terms terms;
    AddTerm(terms, idx.W(c.i, c.j), 1);
    AddTerm(terms, idx.W(c.i - 1, c.j), -1);
    AddTerm(terms, idx.Z(c.i, c.j), -1);
    AddTerm(terms, idx.Z(c.i, c.j + 1), 1);
    sys.AddConstraint("cap" + Suffix(c.i, c.j), std::move(terms),
                      Sense::kLessEqual, Rational(0));
  }
  for (const Cell& c : IndexSet(params)) {
    Terms terms;
    AddTerm(terms, idx.Z(c.i, c.j), 1);
    AddTerm(terms, idx.W(c.i, c.j), -1);
    sys.AddConstraint("bar" + Suffix(c.i, c.j), std::move(terms),
                      Sense::kLessEqual, Rational(0));
  }
  for (int i = 1; i <= p; ++i) {
    sys.AddConstraint("last_" + std::to_string(i),
                      {{idx.W(i, params.RowWidth(i)), Rational(1)}},
                      Sense::kGreaterEqual, Rational(0));
  }
  if (kind == Kind::kPartitioning) {
    sys.AddConstraint("part", {{idx.W(1, 1), Rational(1)}}, Sense::kEqual,
                      Rational(1));
    // w(1,1) = 1 alone only forces x(1,1) = 1; the row sums x(row(i)) = z(i,1)
    // must be fixed as well (already at p = 2, q = 1 row 2 could stay empty).
    for (int i = 1; i <= params.p(); ++i) {
      sys.AddConstraint("row_" + std::to_string(i), {{idx.Z(i, 1), Rational(1)}},
                        Sense::kEqual, Rational(1));
    }
  }
  return sys;
}

CompactPoint ToCompact(const ExtendedPoint& point) {
  const Params& params = point.x.params();
  CompactPoint out{CellArray<Rational>(params), CellArray<Rational>(params)};
  for (const Cell& c : IndexSet(params)) {
    Rational z;
    for (const Cell& b : Bar(params, c.i, c.j)) z += point.x[b];
    out.z[c] = std::move(z);
    Rational w;
    for (const Cell& s : ColumnSegment(params, c.i, c.j)) {
      w += point.y[Arc::Diagonal(s.i - 1, s.j - 1)];
    }
    out.w[c] = std::move(w);
  }
  return out;
}

ExtendedPoint FromCompact(const CompactPoint& point) {
  const Params& params = point.z.params();
  const Digraph g(params);
  const int p = params.p();
  const auto& z = point.z;
  const auto& w = point.w;
  ExtendedPoint out{OrbiMatrix(params), Flow(g)};
  for (const Cell& c : IndexSet(params)) {
    out.x[c] = z[c] - z.At(c.i, c.j + 1);
  }
  const Rational one(1);
  for (const Arc& a : g.Arcs()) {
    Rational& v = out.y[a];
    switch (a.kind) {
      case Arc::Kind::kSource:
        v = one;
        break;
      case Arc::Kind::kDiagonal:
        v = w(a.i + 1, a.j + 1) - w.At(a.i, a.j + 1);
        break;
      case Arc::Kind::kVertical:
        v = a.j == 0 ? one - w.At(a.i + 1, 1)
                     : w(a.i, a.j) - w.At(a.i + 1, a.j + 1);
        break;
      case Arc::Kind::kSink:
        v = (a.j == 0 ? one : w(p, a.j)) - w.At(p, a.j + 1);
        break;
    }
  }
  return out;
}

std::string ExtendedViolation(const ExtendedPoint& point, Kind kind) {
  const Params& params = point.x.params();
  if (!(point.y.graph().params() == params)) return "dimension mismatch";
  if (std::string flow = UnitFlowViolation(point.y); !flow.empty()) return flow;
  for (const Cell& c : IndexSet(params)) {
    if (point.y[Arc::Diagonal(c.i - 1, c.j - 1)] > point.x[c]) {
      return "cap" + Suffix(c.i, c.j);
    }
  }
  for (const Cell& c : IndexSet(params)) {
    Rational lhs;
    for (const Cell& b : Bar(params, c.i, c.j)) lhs += point.x[b];
    Rational rhs;
    for (const Cell& s : ColumnSegment(params, c.i, c.j)) {
      rhs += point.y[Arc::Diagonal(s.i - 1, s.j - 1)];
    }
    if (lhs > rhs) return "bar" + Suffix(c.i, c.j);
  }
  if (kind == Kind::kPartitioning) {
    for (int i = 1; i <= params.p(); ++i) {
      if (RowSum(point.x, i) != Rational(1)) return "row_" + std::to_string(i);
    }
  }
  return {};
}

std::vector<Rational> ToVector(const ExtendedPoint& point) {
  std::vector<Rational> v = point.x.values();
  v.insert(v.end(), point.y.values().begin(), point.y.values().end());
  return v;
}

std::vector<Rational> ToVector(const CompactPoint& point) {
  std::vector<Rational> v = point.z.values();
  v.insert(v.end(), point.w.values().begin(), point.w.values().end());
  return v;
}

ExtendedPoint ExtendedFromVector(const Params& params,
                                 const std::vector<Rational>& v) {
  const Digraph g(params);
  const std::size_t n = params.NumCells();
  if (v.size() != n + g.num_arcs()) {
    throw Error(ErrorCode::kInvalidInput, "extended point has wrong dimension");
  }
  ExtendedPoint out{OrbiMatrix(params, {v.begin(), v.begin() + n}), Flow(g)};
  std::copy(v.begin() + n, v.end(), out.y.values().begin());
  return out;
}

CompactPoint CompactFromVector(const Params& params,
                               const std::vector<Rational>& v) {
  const std::size_t n = params.NumCells();
  if (v.size() != 2 * n) {
    throw Error(ErrorCode::kInvalidInput, "compact point has wrong dimension");
  }
  return {CellArray<Rational>(params, {v.begin(), v.begin() + n}),
          CellArray<Rational>(params, {v.begin() + n, v.end()})};
}

Objective CompactObjective(const LinearSystem& compact, const OrbiMatrix& d) {
  Objective obj;
  for (const Cell& c : IndexSet(d.params())) {
    obj.terms.emplace_back(compact.VariableIndex(CellVarName('z', c.i, c.j)),
                           d[c] - d.At(c.i, c.j - 1));
  }
  return obj;
}

Objective CellObjective(const LinearSystem& system, const OrbiMatrix& d) {
  Objective obj;
  for (const Cell& c : IndexSet(d.params())) {
    obj.terms.emplace_back(system.VariableIndex(CellVarName('x', c.i, c.j)), d[c]);
  }
  return obj;
}

}  // namespace orbikit
