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

// JSON encodings. Rationals are strings ("3", "-1/2"); readers also accept
// JSON integers. Cells are {"i": .., "j": ..}. Zero entries are omitted on
// output and default to zero on input.
//
//   matrix      {"p":2,"q":2,"entries":[{"i":1,"j":1,"v":"1/2"}, ...]}
//   flow        {"p":2,"q":2,"arcs":[{"kind":"s|v|d|t","i":..,"j":..,
//                                     "flow":".."}, ...]}
//               a sink arc (p, j) -> t is written with i = p; the source
//               arc as i = j = 0.
//   sci         {"bar":{"i":3,"j":2},"S":[cells],"violation":".."}
//   opt result  {"p","q","kind","value","x":[cells],"path":["s","0,0",...,"t"]}
//   stats       {"vars","cons","nnz","general_cons","general_nnz"}
//
// Every reader throws Error(kInvalidInput) on malformed documents.

#ifndef ORBIKIT_JSON_IO_HPP_
#define ORBIKIT_JSON_IO_HPP_

#include <optional>

#include "json.hpp"
#include "orbikit/core.hpp"
#include "orbikit/digraph.hpp"
#include "orbikit/linear_system.hpp"
#include "orbikit/optimizer.hpp"
#include "orbikit/sci.hpp"

namespace orbikit {

using Json = nlohmann::ordered_json;

Json RationalToJson(const Rational& r);
Rational RationalFromJson(const Json& j);

Json CellToJson(const Cell& c);
Cell CellFromJson(const Json& j);

Json MatrixToJson(const OrbiMatrix& m);
/// If expected is given, a document naming other dimensions is rejected;
/// "p" and "q" may then be omitted.
OrbiMatrix MatrixFromJson(const Json& j,
                          const std::optional<Params>& expected = std::nullopt);

Json FlowToJson(const Flow& y);
Flow FlowFromJson(const Json& j,
                  const std::optional<Params>& expected = std::nullopt);

/// Includes the violation at x.
Json SciToJson(const SCInequality& sci, const OrbiMatrix& x);
/// Rebuilds the witness path from S; the violation field is ignored.
SCInequality SciFromJson(const Json& j, const Params& params);

Json OptResultToJson(const OptResult& r, Kind kind);
OptResult OptResultFromJson(const Json& j);

/// {"variables":[{"name","lower","upper"}],"constraints":[{"name","sense",
/// "rhs","terms":[{"var","coef"}]}],"objective":{"sense","terms"} | null}
/// with variables referenced by name and infinite bounds as null.
Json SystemToJson(const LinearSystem& system);
LinearSystem SystemFromJson(const Json& j);

Json StatsToJson(const SystemStats& s);
SystemStats StatsFromJson(const Json& j);

/// Parses text, mapping parse errors to Error(kInvalidInput).
Json ParseJson(const std::string& text);

}  // namespace orbikit

#endif  // ORBIKIT_JSON_IO_HPP_
