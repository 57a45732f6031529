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

#ifndef ORBIKIT_LINEAR_SYSTEM_HPP_
#define ORBIKIT_LINEAR_SYSTEM_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbikit/rational.hpp"

namespace orbikit {

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

const char* SenseSymbol(Sense sense);  // "<=", "=", ">="

struct Variable {
  std::string name;
  std::optional<Rational> lower;  // nullopt = -infinity
  std::optional<Rational> upper;  // nullopt = +infinity

  friend bool operator==(const Variable&, const Variable&) = default;
};

/// (variable index, coefficient), sorted by index, no zeros, no duplicates.
using Terms = std::vector<std::pair<int, Rational>>;

struct Constraint {
  std::string name;
  Terms terms;
  Sense sense = Sense::kLessEqual;
  Rational rhs;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct Objective {
  bool maximize = true;
  Terms terms;

  friend bool operator==(const Objective&, const Objective&) = default;
};

struct SystemStats {
  std::size_t num_vars = 0;
  std::size_t num_constraints = 0;
  std::size_t num_nonzeros = 0;
  /// Same counts restricted to rows with at least two nonzeros, i.e.
  /// ignoring simple bound rows such as x >= 0 or w <= 1.
  std::size_t num_general_constraints = 0;
  std::size_t num_general_nonzeros = 0;

  friend bool operator==(const SystemStats&, const SystemStats&) = default;
};

/// Sparse rational constraint system with named variables and rows.
class LinearSystem {
 public:
  /// Throws Error(kInvalidInput) on a duplicate name.
  int AddVariable(const std::string& name,
                  std::optional<Rational> lower = std::nullopt,
                  std::optional<Rational> upper = std::nullopt);

  /// Merges duplicate indices and drops zero coefficients. Throws on an
  /// unknown variable index or duplicate row name.
  void AddConstraint(const std::string& name, Terms terms, Sense sense,
                     Rational rhs);

  /// An objective without nonzero terms is the same as no objective.
  void SetObjective(Objective objective);
  void ClearObjective() { objective_.reset(); }

  std::optional<int> FindVariable(const std::string& name) const;
  /// Throws Error(kInvalidInput) if absent.
  int VariableIndex(const std::string& name) const;

  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::optional<Objective>& objective() const { return objective_; }

  std::size_t num_vars() const { return variables_.size(); }
  std::size_t num_constraints() const { return constraints_.size(); }

  /// Evaluates the left-hand side of row r at a point indexed like
  /// variables().
  Rational Activity(std::size_t r, const std::vector<Rational>& point) const;
  /// True iff every row and every variable bound holds exactly.
  bool IsFeasible(const std::vector<Rational>& point) const;
  /// Name of the first violated row or bound, empty if feasible.
  std::string FirstViolation(const std::vector<Rational>& point) const;

  SystemStats Stats() const;

  friend bool operator==(const LinearSystem& a, const LinearSystem& b) {
    return a.variables_ == b.variables_ && a.constraints_ == b.constraints_ &&
           a.objective_ == b.objective_;
  }

 private:
  Terms Normalize(Terms terms) const;

  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  std::optional<Objective> objective_;
  std::map<std::string, int> var_index_;
  std::map<std::string, std::size_t> row_index_;
};

}  // namespace orbikit

#endif  // ORBIKIT_LINEAR_SYSTEM_HPP_
