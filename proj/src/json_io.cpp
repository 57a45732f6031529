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

#include "orbikit/json_io.hpp"

#include <set>
#include <string>

#include "orbikit/error.hpp"

namespace orbikit {
namespace {

[[noreturn]] void Bad(const std::string& what) {
  throw Error(ErrorCode::kInvalidInput, "JSON: " + what);
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object()) Bad(std::string("expected an object holding '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) Bad(std::string("missing field '") + key + "'");
  return *it;
}

int IntField(const Json& j, const char* key) {
  const Json& v = Field(j, key);
  if (!v.is_number_integer()) Bad(std::string("field '") + key + "' must be an integer");
  const auto value = v.get<std::int64_t>();
  if (value < INT32_MIN || value > INT32_MAX) Bad(std::string("field '") + key + "' out of range");
  return static_cast<int>(value);
}

const Json& ArrayField(const Json& j, const char* key) {
  const Json& v = Field(j, key);
  if (!v.is_array()) Bad(std::string("field '") + key + "' must be an array");
  return v;
}

Params ReadParams(const Json& j, const std::optional<Params>& expected) {
  const bool has_p = j.is_object() && j.contains("p");
  const bool has_q = j.is_object() && j.contains("q");
  if (expected && !has_p && !has_q) return *expected;
  Params params(IntField(j, "p"), IntField(j, "q"));
  if (expected && !(params == *expected)) {
    Bad("document is for p=" + std::to_string(params.p()) + ", q=" +
        std::to_string(params.q()) + " but p=" + std::to_string(expected->p()) +
        ", q=" + std::to_string(expected->q()) + " was requested");
  }
  return params;
}

const char* ArcKindTag(Arc::Kind kind) {
  switch (kind) {
    case Arc::Kind::kSource:
      return "s";
    case Arc::Kind::kVertical:
      return "v";
    case Arc::Kind::kDiagonal:
      return "d";
    case Arc::Kind::kSink:
      return "t";
  }
  return "?";
}

}  // namespace

Json RationalToJson(const Rational& r) { return r.ToString(); }

Rational RationalFromJson(const Json& j) {
  if (j.is_string()) return Rational::Parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  Bad("expected a rational as string or integer, got " + j.dump());
}

Json CellToJson(const Cell& c) { return Json{{"i", c.i}, {"j", c.j}}; }

Cell CellFromJson(const Json& j) { return {IntField(j, "i"), IntField(j, "j")}; }

Json MatrixToJson(const OrbiMatrix& m) {
  Json entries = Json::array();
  for (const Cell& c : IndexSet(m.params())) {
    if (m[c].IsZero()) continue;
    Json e = CellToJson(c);
    e["v"] = RationalToJson(m[c]);
    entries.push_back(std::move(e));
  }
  return Json{{"p", m.params().p()}, {"q", m.params().q()}, {"entries", entries}};
}

OrbiMatrix MatrixFromJson(const Json& j, const std::optional<Params>& expected) {
  const Params params = ReadParams(j, expected);
  OrbiMatrix m(params);
  if (j.is_object() && !j.contains("entries")) return m;
  std::set<Cell> seen;
  for (const Json& e : ArrayField(j, "entries")) {
    const Cell c = CellFromJson(e);
    if (!params.Contains(c.i, c.j)) Bad("cell " + ToString(c) + " outside the index set");
    if (!seen.insert(c).second) Bad("cell " + ToString(c) + " given twice");
    m[c] = RationalFromJson(Field(e, "v"));
  }
  return m;
}

Json FlowToJson(const Flow& y) {
  const Params& params = y.graph().params();
  Json arcs = Json::array();
  for (const Arc& a : y.graph().Arcs()) {
    if (y[a].IsZero()) continue;
    arcs.push_back(Json{{"kind", ArcKindTag(a.kind)},
                        {"i", a.kind == Arc::Kind::kSink ? params.p() : a.i},
                        {"j", a.j},
                        {"flow", RationalToJson(y[a])}});
  }
  return Json{{"p", params.p()}, {"q", params.q()}, {"arcs", arcs}};
}

Flow FlowFromJson(const Json& j, const std::optional<Params>& expected) {
  const Params params = ReadParams(j, expected);
  const Digraph g(params);
  Flow y(g);
  std::set<Arc> seen;
  for (const Json& e : ArrayField(j, "arcs")) {
    const Json& tag = Field(e, "kind");
    if (!tag.is_string()) Bad("arc kind must be a string");
    const std::string kind = tag.get<std::string>();
    const int i = IntField(e, "i");
    const int jj = IntField(e, "j");
    Arc a;
    if (kind == "s") {
      a = Arc::Source();
      if (i != 0 || jj != 0) Bad("the source arc is written with i = j = 0");
    } else if (kind == "v") {
      a = Arc::Vertical(i, jj);
    } else if (kind == "d") {
      a = Arc::Diagonal(i, jj);
    } else if (kind == "t") {
      if (i != params.p()) Bad("sink arcs leave row p");
      a = Arc::SinkArc(jj);
    } else {
      Bad("unknown arc kind '" + kind + "'");
    }
    if (!g.Contains(a)) Bad("arc " + ToString(a) + " is not in D(p,q)");
    if (!seen.insert(a).second) Bad("arc " + ToString(a) + " given twice");
    y[a] = RationalFromJson(Field(e, "flow"));
  }
  return y;
}

Json SciToJson(const SCInequality& sci, const OrbiMatrix& x) {
  Json s = Json::array();
  for (const Cell& c : sci.s()) s.push_back(CellToJson(c));
  return Json{{"bar", CellToJson(sci.anchor)},
              {"S", s},
              {"violation", RationalToJson(sci.Violation(x))}};
}

SCInequality SciFromJson(const Json& j, const Params& params) {
  const Cell anchor = CellFromJson(Field(j, "bar"));
  std::vector<Cell> s;
  for (const Json& c : ArrayField(j, "S")) s.push_back(CellFromJson(c));
  return SciFromCells(params, anchor, std::move(s));
}

Json OptResultToJson(const OptResult& r, Kind kind) {
  const Params& params = r.path.graph().params();
  Json x = Json::array();
  for (const Cell& c : r.ones) x.push_back(CellToJson(c));
  Json path = Json::array();
  for (const Node& n : r.path.nodes()) path.push_back(ToString(n));
  return Json{{"p", params.p()},   {"q", params.q()},
              {"kind", KindName(kind)}, {"value", RationalToJson(r.value)},
              {"x", x},            {"path", path}};
}

OptResult OptResultFromJson(const Json& j) {
  const Params params = ReadParams(j, std::nullopt);
  std::vector<Cell> ones;
  for (const Json& c : ArrayField(j, "x")) {
    ones.push_back(CellFromJson(c));
    if (!params.Contains(ones.back().i, ones.back().j)) Bad("cell outside the index set");
  }
  std::vector<Node> nodes;
  for (const Json& n : ArrayField(j, "path")) {
    if (!n.is_string()) Bad("path nodes are strings");
    nodes.push_back(ParseNode(n.get<std::string>()));
  }
  return OptResult{RationalFromJson(Field(j, "value")), std::move(ones),
                   DirectedPath(Digraph(params), std::move(nodes))};
}

Json SystemToJson(const LinearSystem& system) {
  auto bound = [](const std::optional<Rational>& b) -> Json {
    return b ? RationalToJson(*b) : Json(nullptr);
  };
  auto terms = [&](const Terms& t) {
    Json out = Json::array();
    for (const auto& [var, coef] : t) {
      out.push_back(Json{{"var", system.variables()[static_cast<std::size_t>(var)].name},
                         {"coef", RationalToJson(coef)}});
    }
    return out;
  };
  Json vars = Json::array();
  for (const Variable& v : system.variables()) {
    vars.push_back(Json{{"name", v.name}, {"lower", bound(v.lower)}, {"upper", bound(v.upper)}});
  }
  Json rows = Json::array();
  for (const Constraint& c : system.constraints()) {
    rows.push_back(Json{{"name", c.name},
                        {"sense", SenseSymbol(c.sense)},
                        {"rhs", RationalToJson(c.rhs)},
                        {"terms", terms(c.terms)}});
  }
  Json objective = nullptr;
  if (system.objective()) {
    objective = Json{{"sense", system.objective()->maximize ? "max" : "min"},
                     {"terms", terms(system.objective()->terms)}};
  }
  return Json{{"variables", vars}, {"constraints", rows}, {"objective", objective}};
}

LinearSystem SystemFromJson(const Json& j) {
  LinearSystem system;
  auto bound = [](const Json& b) -> std::optional<Rational> {
    if (b.is_null()) return std::nullopt;
    return RationalFromJson(b);
  };
  auto name_of = [](const Json& v, const char* key) {
    const Json& n = Field(v, key);
    if (!n.is_string()) Bad(std::string("field '") + key + "' must be a string");
    return n.get<std::string>();
  };
  auto terms = [&](const Json& list) {
    Terms out;
    if (!list.is_array()) Bad("terms must be an array");
    for (const Json& t : list) {
      out.emplace_back(system.VariableIndex(name_of(t, "var")), RationalFromJson(Field(t, "coef")));
    }
    return out;
  };
  for (const Json& v : ArrayField(j, "variables")) {
    system.AddVariable(name_of(v, "name"), bound(Field(v, "lower")), bound(Field(v, "upper")));
  }
  for (const Json& c : ArrayField(j, "constraints")) {
    const std::string sense = name_of(c, "sense");
    Sense s;
    if (sense == "<=") {
      s = Sense::kLessEqual;
    } else if (sense == "=") {
      s = Sense::kEqual;
    } else if (sense == ">=") {
      s = Sense::kGreaterEqual;
    } else {
      Bad("unknown sense '" + sense + "'");
    }
    system.AddConstraint(name_of(c, "name"), terms(Field(c, "terms")), s,
                         RationalFromJson(Field(c, "rhs")));
  }
  const Json& objective = Field(j, "objective");
  if (!objective.is_null()) {
    const std::string sense = name_of(objective, "sense");
    if (sense != "max" && sense != "min") Bad("objective sense must be max or min");
    system.SetObjective(Objective{sense == "max", terms(Field(objective, "terms"))});
  }
  return system;
}

Json StatsToJson(const SystemStats& s) {
  return Json{{"vars", s.num_vars},
              {"cons", s.num_constraints},
              {"nnz", s.num_nonzeros},
              {"general_cons", s.num_general_constraints},
              {"general_nnz", s.num_general_nonzeros}};
}

SystemStats StatsFromJson(const Json& j) {
  auto count = [&](const char* key) {
    const Json& v = Field(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      Bad(std::string("field '") + key + "' must be a count");
    }
    return v.get<std::size_t>();
  };
  SystemStats s;
  s.num_vars = count("vars");
  s.num_constraints = count("cons");
  s.num_nonzeros = count("nnz");
  s.num_general_constraints = count("general_cons");
  s.num_general_nonzeros = count("general_nnz");
  return s;
}

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    Bad(e.what());
  }
}

}  // namespace orbikit
