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

#include "orbikit/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "orbikit/error.hpp"

namespace orbikit {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput:
      return "InvalidInput";
    case ErrorCode::kInvalidParams:
      return "InvalidParams";
    case ErrorCode::kSizeCap:
      return "SizeCap";
    case ErrorCode::kInfeasible:
      return "Infeasible";
    case ErrorCode::kUnbounded:
      return "Unbounded";
    case ErrorCode::kIo:
      return "IOError";
  }
  return "Unknown";
}

namespace {

mpz_class Int64ToMpz(std::int64_t v) {
  // mpz_class(long) is exact for LP64; go through a string otherwise.
  if constexpr (sizeof(long) >= sizeof(std::int64_t)) {
    return mpz_class(static_cast<long>(v));
  } else {
    return mpz_class(std::to_string(v));
  }
}

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void BadRational(std::string_view text) {
  throw Error(ErrorCode::kInvalidInput,
              "malformed rational '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(Int64ToMpz(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw Error(ErrorCode::kInvalidInput, "zero denominator");
  }
  value_ = mpq_class(Int64ToMpz(num), Int64ToMpz(den));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::Parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  bool negative = false;
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  mpq_class q;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = body.substr(slash + 1);
    if (!IsDigits(num) || !IsDigits(den)) BadRational(text);
    const mpz_class d(std::string(den), 10);
    if (d == 0) throw Error(ErrorCode::kInvalidInput, "zero denominator");
    q = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = body.substr(0, dot);
    const std::string_view frac = body.substr(dot + 1);
    if ((!whole.empty() && !IsDigits(whole)) ||
        (!frac.empty() && !IsDigits(frac)) || (whole.empty() && frac.empty())) {
      BadRational(text);
    }
    mpz_class scale = 1;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const mpz_class w = whole.empty() ? mpz_class(0)
                                      : mpz_class(std::string(whole), 10);
    const mpz_class f = frac.empty() ? mpz_class(0)
                                     : mpz_class(std::string(frac), 10);
    q = mpq_class(w * scale + f, scale);
  } else {
    if (!IsDigits(body)) BadRational(text);
    q = mpq_class(mpz_class(std::string(body), 10));
  }
  q.canonicalize();
  if (negative) q = -q;
  return Rational(std::move(q));
}

std::string Rational::ToString() const {
  if (IsInteger()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::Numerator() const { return value_.get_num().get_str(); }
std::string Rational::Denominator() const {
  return value_.get_den().get_str();
}

bool Rational::IsInteger() const { return value_.get_den() == 1; }

bool Rational::FitsInt64() const {
  if (!IsInteger()) return false;
  static const mpz_class kMax(
      std::to_string(std::numeric_limits<std::int64_t>::max()));
  static const mpz_class kMin(
      std::to_string(std::numeric_limits<std::int64_t>::min()));
  return value_.get_num() >= kMin && value_.get_num() <= kMax;
}

std::int64_t Rational::ToInt64() const {
  if (!FitsInt64()) {
    throw Error(ErrorCode::kInvalidInput,
                "rational " + ToString() + " is not an int64");
  }
  return std::stoll(value_.get_num().get_str());
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.IsZero()) throw Error(ErrorCode::kInvalidInput, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

}  // namespace orbikit
