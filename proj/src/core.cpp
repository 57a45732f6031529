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

#include "orbikit/core.hpp"

#include <cctype>
#include <cstdlib>
#include <exception>
#include <string>

namespace orbikit {

const char* KindName(Kind kind) {
  return kind == Kind::kPacking ? "packing" : "partitioning";
}

Kind ParseKind(const std::string& name) {
  if (name == "packing") return Kind::kPacking;
  if (name == "partitioning") return Kind::kPartitioning;
  throw Error(ErrorCode::kInvalidInput, "unknown orbitope kind '" + name + "'");
}

Params::Params(int p, int q) : p_(p), q_(q) {
  if (q < 1 || p < q) {
    throw Error(ErrorCode::kInvalidParams,
                "need p >= q >= 1, got p=" + std::to_string(p) +
                    " q=" + std::to_string(q));
  }
}

std::size_t Params::NumCells() const {
  const auto p = static_cast<std::size_t>(p_);
  const auto q = static_cast<std::size_t>(q_);
  return p * q - q * (q - 1) / 2;
}

std::size_t Params::RowOffset(int i) const {
  const auto k = static_cast<std::size_t>(i - 1);  // full rows above i
  const auto q = static_cast<std::size_t>(q_);
  if (k <= q) return k * (k + 1) / 2;
  return q * (q + 1) / 2 + (k - q) * q;
}

std::string ToString(const Cell& c) {
  return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}

std::vector<Cell> IndexSet(const Params& params) {
  std::vector<Cell> cells;
  cells.reserve(params.NumCells());
  for (int i = 1; i <= params.p(); ++i) {
    for (int j = 1; j <= params.RowWidth(i); ++j) cells.push_back({i, j});
  }
  return cells;
}

Rational RowSum(const OrbiMatrix& m, int i) {
  Rational sum;
  for (int j = 1; j <= m.params().RowWidth(i); ++j) sum += m(i, j);
  return sum;
}

bool IsVertex(const OrbiMatrix& m, Kind kind) {
  const Params& params = m.params();
  const Rational one(1);
  for (const Rational& v : m.values()) {
    if (!v.IsZero() && v != one) return false;
  }
  for (int i = 1; i <= params.p(); ++i) {
    const Rational s = RowSum(m, i);
    if (kind == Kind::kPacking ? s > one : s != one) return false;
  }
  for (int j = 1; j < params.q(); ++j) {
    for (int i = 1; i <= params.p(); ++i) {
      const Rational left = m.At(i, j);
      const Rational right = m.At(i, j + 1);
      if (left == right) continue;
      if (left < right) return false;
      break;
    }
  }
  return true;
}

OrbiMatrix MatrixFromOnes(const Params& params, const std::vector<Cell>& ones) {
  OrbiMatrix m(params);
  for (const Cell& c : ones) {
    if (!params.Contains(c.i, c.j)) {
      throw Error(ErrorCode::kInvalidInput,
                  "cell " + ToString(c) + " outside index set");
    }
    m[c] = Rational(1);
  }
  return m;
}

std::uint64_t DefaultSizeCap() {
  constexpr std::uint64_t kFallback = 1'000'000;
  const char* env = std::getenv("ORBIKIT_CAP");
  if (env == nullptr || *env == '\0') return kFallback;
  try {
    if (!std::isdigit(static_cast<unsigned char>(env[0]))) throw std::exception();
    std::size_t used = 0;
    const unsigned long long value = std::stoull(env, &used);
    if (used == std::string(env).size() && value > 0) return value;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kInvalidParams,
              std::string("ORBIKIT_CAP must be a positive integer, got '") +
                  env + "'");
}

}  // namespace orbikit
