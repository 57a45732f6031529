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

// Solver-file writers for LinearSystem, plus an LP reader for round trips.
//
// Coefficients are written as exact decimals whenever every denominator in a
// row divides a power of ten. Otherwise the whole row is multiplied by the
// least common multiple L of its denominators, written with integer
// coefficients, and preceded by the comment "\ scale <row> L" (LP) or
// "* scale <row> L" (MPS). The LP reader undoes the scaling, so reading back
// an emitted file reproduces the system exactly.
//
// Every variable is listed in the LP Bounds section in declaration order,
// including default [0, +inf) ones, which pins the variable order on reading.

#ifndef ORBIKIT_LP_IO_HPP_
#define ORBIKIT_LP_IO_HPP_

#include <iosfwd>
#include <string>

#include "orbikit/linear_system.hpp"

namespace orbikit {

enum class FileFormat { kLp, kMps };

/// Throws Error(kIo) if the stream fails.
void WriteLp(const LinearSystem& system, std::ostream& os,
             const std::string& name = "orbikit");
void WriteMps(const LinearSystem& system, std::ostream& os,
              const std::string& name = "orbikit");
void Emit(const LinearSystem& system, FileFormat format, std::ostream& os,
          const std::string& name = "orbikit");

/// Reads the LP subset produced by WriteLp: one objective, named rows with
/// <=, = or >=, a Bounds section, no ranges. Throws Error(kInvalidInput).
LinearSystem ReadLp(std::istream& is);

/// Exact decimal text for r if its denominator divides a power of ten.
bool ToExactDecimal(const Rational& r, std::string& out);

}  // namespace orbikit

#endif  // ORBIKIT_LP_IO_HPP_
