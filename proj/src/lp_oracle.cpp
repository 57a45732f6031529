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

#include "orbikit/lp_oracle.hpp"

#include <bit>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "orbikit/error.hpp"
#include "orbikit/formulations.hpp"

namespace orbikit {
namespace {

void CheckP(const Params& params, int max_p, const char* what) {
  if (params.p() > max_p) {
    throw Error(ErrorCode::kSizeCap, std::string(what) + " is limited to p <= " +
                                         std::to_string(max_p) + ", got p = " +
                                         std::to_string(params.p()));
  }
}

void VertexRows(const Params& params, Kind kind, int i, int used,
                std::vector<int>& choice, std::vector<OrbiMatrix>& out) {
  if (i > params.p()) {
    OrbiMatrix m(params);
    for (int r = 1; r <= params.p(); ++r) {
      if (choice[r] > 0) m(r, choice[r]) = Rational(1);
    }
    out.push_back(std::move(m));
    return;
  }
  // A column may be opened only after all columns to its left.
  const int widest = std::min(used + 1, params.RowWidth(i));
  for (int c = kind == Kind::kPacking ? 0 : 1; c <= widest; ++c) {
    choice[i] = c;
    VertexRows(params, kind, i + 1, std::max(used, c), choice, out);
  }
}

void PathsFrom(const Digraph& g, std::vector<Node>& prefix,
               std::vector<DirectedPath>& out) {
  const Node w = prefix.back();
  const Params& params = g.params();
  if (w.i == params.p()) {
    prefix.push_back(Node::Sink());
    out.emplace_back(g, prefix);
    prefix.pop_back();
    return;
  }
  prefix.push_back(Node::Grid(w.i + 1, w.j));
  PathsFrom(g, prefix, out);
  prefix.pop_back();
  if (w.j + 1 <= params.RowWidth(w.i + 1)) {
    prefix.push_back(Node::Grid(w.i + 1, w.j + 1));
    PathsFrom(g, prefix, out);
    prefix.pop_back();
  }
}

// 0/1 patterns for row i that satisfy the row-local constraints (capacity,
// bar, partitioning) against the fixed path flow y.
std::vector<std::vector<int>> RowPatterns(const Params& params, Kind kind,
                                          const Flow& y, int i) {
  const int width = params.RowWidth(i);
  std::vector<int> covered(static_cast<std::size_t>(width) + 1, 0);
  for (int j = 1; j <= width; ++j) {
    for (int k = j; k <= i; ++k) {
      covered[j] += y[Arc::Diagonal(k - 1, j - 1)].IsZero() ? 0 : 1;
    }
  }
  std::vector<std::vector<int>> patterns;
  for (unsigned mask = 0; mask < (1u << width); ++mask) {
    std::vector<int> bits(static_cast<std::size_t>(width) + 1, 0);
    for (int j = 1; j <= width; ++j) bits[j] = (mask >> (j - 1)) & 1;
    bool ok = kind == Kind::kPacking || std::popcount(mask) == 1;
    int bar = 0;
    for (int j = width; j >= 1 && ok; --j) {
      bar += bits[j];
      ok = bar <= covered[j] &&
           (y[Arc::Diagonal(i - 1, j - 1)].IsZero() || bits[j] == 1);
    }
    if (ok) patterns.push_back(std::move(bits));
  }
  return patterns;
}

}  // namespace

std::vector<OrbiMatrix> EnumerateVertices(const Params& params, Kind kind,
                                          int max_p) {
  CheckP(params, max_p, "vertex enumeration");
  std::vector<OrbiMatrix> out;
  std::vector<int> choice(static_cast<std::size_t>(params.p()) + 1, 0);
  VertexRows(params, kind, 1, 0, choice, out);
  return out;
}

std::vector<DirectedPath> EnumeratePaths(const Params& params, int max_p) {
  CheckP(params, max_p, "path enumeration");
  const Digraph g(params);
  std::vector<DirectedPath> out;
  std::vector<Node> prefix = {Node::Source(), Node::Grid(0, 0)};
  PathsFrom(g, prefix, out);
  return out;
}

mpz_class CountPaths(const Params& params) {
  std::vector<mpz_class> ways = {1};  // row 0
  for (int i = 1; i <= params.p(); ++i) {
    std::vector<mpz_class> next(static_cast<std::size_t>(params.RowWidth(i)) + 1);
    for (std::size_t j = 0; j < next.size(); ++j) {
      if (j < ways.size()) next[j] += ways[j];
      if (j >= 1 && j - 1 < ways.size()) next[j] += ways[j - 1];
    }
    ways = std::move(next);
  }
  mpz_class total;
  for (const mpz_class& w : ways) total += w;
  return total;
}

std::vector<ExtendedPoint> EnumerateIntegralExtendedPoints(const Params& params,
                                                           Kind kind, int max_p) {
  CheckP(params, max_p, "integral extended point enumeration");
  const Digraph g(params);
  std::vector<ExtendedPoint> out;
  for (const DirectedPath& path : EnumeratePaths(params, max_p)) {
    const Flow y = PathIncidence(g, path);
    std::vector<std::vector<std::vector<int>>> rows;
    bool empty = false;
    for (int i = 1; i <= params.p() && !empty; ++i) {
      rows.push_back(RowPatterns(params, kind, y, i));
      empty = rows.back().empty();
    }
    if (empty) continue;
    // Odometer over the per-row choices.
    std::vector<std::size_t> pick(rows.size(), 0);
    while (true) {
      OrbiMatrix x(params);
      for (int i = 1; i <= params.p(); ++i) {
        const auto& bits = rows[static_cast<std::size_t>(i - 1)][pick[i - 1]];
        for (int j = 1; j <= params.RowWidth(i); ++j) x(i, j) = Rational(bits[j]);
      }
      ExtendedPoint point{std::move(x), y};
      if (!IsExtendedFeasible(point, kind)) {
        throw std::logic_error("row-wise enumeration produced an infeasible point");
      }
      out.push_back(std::move(point));
      std::size_t r = 0;
      while (r < pick.size() && ++pick[r] == rows[r].size()) pick[r++] = 0;
      if (r == pick.size()) break;
    }
  }
  return out;
}

Rational BruteForceMax(const std::vector<OrbiMatrix>& vertices,
                       const OrbiMatrix& d) {
  if (vertices.empty()) throw Error(ErrorCode::kInfeasible, "no vertices");
  std::optional<Rational> best;
  for (const OrbiMatrix& v : vertices) {
    Rational value;
    for (std::size_t k = 0; k < v.values().size(); ++k) {
      if (!v.values()[k].IsZero()) value += v.values()[k] * d.values()[k];
    }
    if (!best || value > *best) best = value;
  }
  return *best;
}

// --- simplex ---------------------------------------------------------------

struct SimplexSolver::Impl {
  // How a system variable is expressed in tableau columns:
  //   kShift   x = offset + col
  //   kMirror  x = offset - col
  //   kSplit   x = col - col2
  enum class Map { kShift, kMirror, kSplit };
  struct VarMap {
    Map map;
    mpq_class offset;
    int col = -1;
    int col2 = -1;
  };

  std::vector<VarMap> vars;
  std::vector<std::string> labels;
  std::vector<bool> banned;  // artificial columns, never re-enter
  std::vector<std::vector<mpq_class>> t;
  std::vector<mpq_class> rhs;
  std::vector<int> basis;
  std::size_t pivots = 0;

  std::size_t num_cols() const { return labels.size(); }

  int NewColumn(std::string label) {
    labels.push_back(std::move(label));
    banned.push_back(false);
    return static_cast<int>(labels.size()) - 1;
  }

  void Pivot(std::size_t r, std::size_t c, std::vector<mpq_class>* d) {
    ++pivots;
    std::vector<mpq_class>& row = t[r];
    const mpq_class piv = row[c];
    std::vector<std::size_t> nz;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (sgn(row[k]) != 0) {
        row[k] /= piv;
        nz.push_back(k);
      }
    }
    rhs[r] /= piv;
    auto eliminate = [&](std::vector<mpq_class>& target, mpq_class* target_rhs) {
      const mpq_class f = target[c];
      if (sgn(f) == 0) return;
      for (std::size_t k : nz) target[k] -= f * row[k];
      if (target_rhs != nullptr) *target_rhs -= f * rhs[r];
    };
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i != r) eliminate(t[i], &rhs[i]);
    }
    if (d != nullptr) eliminate(*d, nullptr);
    basis[r] = static_cast<int>(c);
  }

  // Reduced costs c_j - c_B B^-1 A_j.
  std::vector<mpq_class> ReducedCosts(const std::vector<mpq_class>& cost) const {
    std::vector<mpq_class> d = cost;
    for (std::size_t r = 0; r < t.size(); ++r) {
      const mpq_class& cb = cost[static_cast<std::size_t>(basis[r])];
      if (sgn(cb) == 0) continue;
      for (std::size_t k = 0; k < d.size(); ++k) {
        if (sgn(t[r][k]) != 0) d[k] -= cb * t[r][k];
      }
    }
    return d;
  }

  // Maximizes cost from the current basis with Bland's rule. Returns false
  // if unbounded.
  bool Run(const std::vector<mpq_class>& cost) {
    std::vector<mpq_class> d = ReducedCosts(cost);
    while (true) {
      std::size_t enter = num_cols();
      for (std::size_t k = 0; k < num_cols(); ++k) {
        if (!banned[k] && sgn(d[k]) > 0) {
          enter = k;
          break;
        }
      }
      if (enter == num_cols()) return true;
      std::size_t leave = t.size();
      mpq_class best;
      for (std::size_t r = 0; r < t.size(); ++r) {
        if (sgn(t[r][enter]) <= 0) continue;
        const mpq_class ratio = rhs[r] / t[r][enter];
        if (leave == t.size() || ratio < best ||
            (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == t.size()) return false;
      Pivot(leave, enter, &d);
    }
  }

  void RemoveRow(std::size_t r) {
    t.erase(t.begin() + static_cast<std::ptrdiff_t>(r));
    rhs.erase(rhs.begin() + static_cast<std::ptrdiff_t>(r));
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(r));
  }
};

SimplexSolver::SimplexSolver(const LinearSystem& system)
    : impl_(std::make_unique<Impl>()) {
  Impl& s = *impl_;
  using Map = Impl::Map;

  struct Row {
    std::map<int, mpq_class> coef;
    Sense sense;
    mpq_class rhs;
    std::string name;
  };
  std::vector<Row> rows;

  for (const Variable& v : system.variables()) {
    Impl::VarMap m;
    if (v.lower) {
      m.map = Map::kShift;
      m.offset = v.lower->raw();
      m.col = s.NewColumn(v.name);
      if (v.upper) {
        rows.push_back({{{m.col, 1}}, Sense::kLessEqual,
                        v.upper->raw() - v.lower->raw(), v.name + ".upper"});
      }
    } else if (v.upper) {
      m.map = Map::kMirror;
      m.offset = v.upper->raw();
      m.col = s.NewColumn(v.name + "-");
    } else {
      m.map = Map::kSplit;
      m.col = s.NewColumn(v.name + "+");
      m.col2 = s.NewColumn(v.name + "-");
    }
    s.vars.push_back(std::move(m));
  }
  for (const Constraint& c : system.constraints()) {
    Row row{{}, c.sense, c.rhs.raw(), c.name};
    for (const auto& [var, a] : c.terms) {
      const Impl::VarMap& m = s.vars[static_cast<std::size_t>(var)];
      switch (m.map) {
        case Map::kShift:
          row.coef[m.col] += a.raw();
          row.rhs -= a.raw() * m.offset;
          break;
        case Map::kMirror:
          row.coef[m.col] -= a.raw();
          row.rhs -= a.raw() * m.offset;
          break;
        case Map::kSplit:
          row.coef[m.col] += a.raw();
          row.coef[m.col2] -= a.raw();
          break;
      }
    }
    rows.push_back(std::move(row));
  }

  // Slacks, sign normalization, artificials.
  std::vector<int> basic(rows.size(), -1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Row& row = rows[r];
    int slack = -1;
    if (row.sense != Sense::kEqual) {
      slack = s.NewColumn("slack:" + row.name);
      row.coef[slack] = row.sense == Sense::kLessEqual ? 1 : -1;
    }
    if (sgn(row.rhs) < 0) {
      for (auto& [col, a] : row.coef) a = -a;
      row.rhs = -row.rhs;
    }
    if (slack >= 0 && sgn(row.coef[slack]) > 0) basic[r] = slack;
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (basic[r] >= 0) continue;
    basic[r] = s.NewColumn("artificial:" + rows[r].name);
    rows[r].coef[basic[r]] = 1;
  }

  const std::size_t n = s.num_cols();
  s.t.assign(rows.size(), std::vector<mpq_class>(n));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (auto& [col, a] : rows[r].coef) s.t[r][static_cast<std::size_t>(col)] = a;
    s.rhs.push_back(rows[r].rhs);
  }
  s.basis = basic;

  // Phase I: maximize minus the sum of artificials.
  std::vector<mpq_class> cost(n);
  bool any_artificial = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (s.labels[k].rfind("artificial:", 0) == 0) {
      cost[k] = -1;
      any_artificial = true;
    }
  }
  if (!any_artificial) return;
  s.Run(cost);  // bounded by zero
  mpq_class infeasibility;
  for (std::size_t r = 0; r < s.t.size(); ++r) {
    if (sgn(cost[static_cast<std::size_t>(s.basis[r])]) != 0) infeasibility += s.rhs[r];
  }
  if (sgn(infeasibility) != 0) {
    throw Error(ErrorCode::kInfeasible, "constraint system is infeasible");
  }
  for (std::size_t k = 0; k < n; ++k) s.banned[k] = sgn(cost[k]) != 0;
  // Drive zero-level artificials out of the basis; rows where that is
  // impossible are redundant.
  for (std::size_t r = s.t.size(); r-- > 0;) {
    if (!s.banned[static_cast<std::size_t>(s.basis[r])]) continue;
    std::size_t col = n;
    for (std::size_t k = 0; k < n; ++k) {
      if (!s.banned[k] && sgn(s.t[r][k]) != 0) {
        col = k;
        break;
      }
    }
    if (col == n) {
      s.RemoveRow(r);
    } else {
      s.Pivot(r, col, nullptr);
    }
  }
}

SimplexSolver::~SimplexSolver() = default;

SimplexResult SimplexSolver::Optimize(const Objective& objective) {
  Impl& s = *impl_;
  using Map = Impl::Map;
  std::vector<mpq_class> cost(s.num_cols());
  mpq_class constant;
  for (const auto& [var, coef] : objective.terms) {
    const mpq_class a = objective.maximize ? coef.raw() : mpq_class(-coef.raw());
    const Impl::VarMap& m = s.vars.at(static_cast<std::size_t>(var));
    switch (m.map) {
      case Map::kShift:
        cost[static_cast<std::size_t>(m.col)] += a;
        constant += a * m.offset;
        break;
      case Map::kMirror:
        cost[static_cast<std::size_t>(m.col)] -= a;
        constant += a * m.offset;
        break;
      case Map::kSplit:
        cost[static_cast<std::size_t>(m.col)] += a;
        cost[static_cast<std::size_t>(m.col2)] -= a;
        break;
    }
  }
  const std::size_t before = s.pivots;
  if (!s.Run(cost)) throw Error(ErrorCode::kUnbounded, "objective is unbounded");

  std::vector<mpq_class> col_value(s.num_cols());
  SimplexResult result;
  mpq_class value = constant;
  for (std::size_t r = 0; r < s.t.size(); ++r) {
    const auto b = static_cast<std::size_t>(s.basis[r]);
    col_value[b] = s.rhs[r];
    value += cost[b] * s.rhs[r];
    result.basis.push_back(s.labels[b]);
    result.degenerate = result.degenerate || sgn(s.rhs[r]) == 0;
  }
  result.value = Rational(objective.maximize ? value : mpq_class(-value));
  for (const Impl::VarMap& m : s.vars) {
    mpq_class x;
    switch (m.map) {
      case Map::kShift:
        x = m.offset + col_value[static_cast<std::size_t>(m.col)];
        break;
      case Map::kMirror:
        x = m.offset - col_value[static_cast<std::size_t>(m.col)];
        break;
      case Map::kSplit:
        x = col_value[static_cast<std::size_t>(m.col)] -
            col_value[static_cast<std::size_t>(m.col2)];
        break;
    }
    result.point.emplace_back(std::move(x));
  }
  result.pivots = s.pivots - before;
  return result;
}

SimplexResult SimplexMax(const LinearSystem& system) {
  SimplexSolver solver(system);
  return solver.Optimize(system.objective().value_or(Objective{}));
}

}  // namespace orbikit
