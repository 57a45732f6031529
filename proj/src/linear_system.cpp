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

#include "orbikit/linear_system.hpp"

#include <algorithm>

#include "orbikit/error.hpp"

namespace orbikit {

const char* SenseSymbol(Sense sense) {
  switch (sense) {
    case Sense::kLessEqual:
      return "<=";
    case Sense::kEqual:
      return "=";
    case Sense::kGreaterEqual:
      return ">=";
  }
  return "?";
}

int LinearSystem::AddVariable(const std::string& name,
                              std::optional<Rational> lower,
                              std::optional<Rational> upper) {
  if (name.empty()) throw Error(ErrorCode::kInvalidInput, "empty variable name");
  const int index = static_cast<int>(variables_.size());
  if (!var_index_.emplace(name, index).second) {
    throw Error(ErrorCode::kInvalidInput, "duplicate variable '" + name + "'");
  }
  variables_.push_back({name, std::move(lower), std::move(upper)});
  return index;
}

Terms LinearSystem::Normalize(Terms terms) const {
  for (const auto& [var, coef] : terms) {
    if (var < 0 || static_cast<std::size_t>(var) >= variables_.size()) {
      throw Error(ErrorCode::kInvalidInput,
                  "coefficient references undeclared variable " +
                      std::to_string(var));
    }
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  Terms merged;
  for (auto& [var, coef] : terms) {
    if (!merged.empty() && merged.back().first == var) {
      merged.back().second += coef;
    } else {
      merged.emplace_back(var, std::move(coef));
    }
  }
  std::erase_if(merged, [](const auto& t) { return t.second.IsZero(); });
  return merged;
}

void LinearSystem::AddConstraint(const std::string& name, Terms terms,
                                 Sense sense, Rational rhs) {
  if (name.empty()) throw Error(ErrorCode::kInvalidInput, "empty row name");
  if (!row_index_.emplace(name, constraints_.size()).second) {
    throw Error(ErrorCode::kInvalidInput, "duplicate constraint '" + name + "'");
  }
  constraints_.push_back({name, Normalize(std::move(terms)), sense,
                          std::move(rhs)});
}

void LinearSystem::SetObjective(Objective objective) {
  objective.terms = Normalize(std::move(objective.terms));
  if (objective.terms.empty()) {
    objective_.reset();
  } else {
    objective_ = std::move(objective);
  }
}

std::optional<int> LinearSystem::FindVariable(const std::string& name) const {
  const auto it = var_index_.find(name);
  if (it == var_index_.end()) return std::nullopt;
  return it->second;
}

int LinearSystem::VariableIndex(const std::string& name) const {
  const auto index = FindVariable(name);
  if (!index) throw Error(ErrorCode::kInvalidInput, "no variable '" + name + "'");
  return *index;
}

Rational LinearSystem::Activity(std::size_t r,
                                const std::vector<Rational>& point) const {
  Rational sum;
  for (const auto& [var, coef] : constraints_.at(r).terms) {
    sum += coef * point.at(static_cast<std::size_t>(var));
  }
  return sum;
}

std::string LinearSystem::FirstViolation(
    const std::vector<Rational>& point) const {
  if (point.size() != variables_.size()) return "<dimension>";
  for (std::size_t v = 0; v < variables_.size(); ++v) {
    const Variable& var = variables_[v];
    if (var.lower && point[v] < *var.lower) return var.name + ".lower";
    if (var.upper && point[v] > *var.upper) return var.name + ".upper";
  }
  for (std::size_t r = 0; r < constraints_.size(); ++r) {
    const Constraint& c = constraints_[r];
    const Rational lhs = Activity(r, point);
    const bool ok = c.sense == Sense::kLessEqual   ? lhs <= c.rhs
                    : c.sense == Sense::kEqual     ? lhs == c.rhs
                                                   : lhs >= c.rhs;
    if (!ok) return c.name;
  }
  return {};
}

bool LinearSystem::IsFeasible(const std::vector<Rational>& point) const {
  return FirstViolation(point).empty();
}

SystemStats LinearSystem::Stats() const {
  SystemStats s;
  s.num_vars = variables_.size();
  s.num_constraints = constraints_.size();
  for (const Constraint& c : constraints_) {
    s.num_nonzeros += c.terms.size();
    if (c.terms.size() >= 2) {
      ++s.num_general_constraints;
      s.num_general_nonzeros += c.terms.size();
    }
  }
  return s;
}

}  // namespace orbikit
