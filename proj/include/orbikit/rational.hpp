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

#ifndef ORBIKIT_RATIONAL_HPP_
#define ORBIKIT_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace orbikit {

/// Exact rational number backed by GMP. Always canonical: lowest terms with
/// a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(mpq_class value);

  /// Parses "num", "num/den" or a finite decimal such as "-1.25".
  /// Throws Error(kInvalidInput) on malformed text or a zero denominator.
  static Rational Parse(std::string_view text);

  /// "num" for integers, "num/den" otherwise.
  std::string ToString() const;

  std::string Numerator() const;
  std::string Denominator() const;
  bool IsInteger() const;
  bool IsZero() const { return sgn(value_) == 0; }
  int Sign() const { return sgn(value_); }

  /// Requires IsInteger() and a value that fits in int64.
  std::int64_t ToInt64() const;
  bool FitsInt64() const;

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    return Rational(mpq_class(-a.value_));
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational Min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline Rational Max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

}  // namespace orbikit

#endif  // ORBIKIT_RATIONAL_HPP_
