// Copyright 2026 The mvk Authors
//
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

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace mvk {

/// Exact arbitrary-precision rational number.
///
/// Always kept in lowest terms with a positive denominator, so equality is
/// value equality and `str()` is canonical.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);
  explicit Rational(mpq_class value);

  /// Parses "p/q" (q > 0, lowest terms). The plain integer form "p" is
  /// accepted only when `allow_integer` is set.
  static Rational parse(std::string_view text, bool allow_integer = false);

  /// Canonical "p/q" form, e.g. "0/1", "1/2", "-3/1".
  std::string str() const;
  /// Short display form: "0", "1", "1/2".
  std::string pretty() const;

  std::string numerator_str() const;
  std::string denominator_str() const;
  bool is_integer() const;
  /// Requires the value to fit in an int64.
  std::int64_t numerator_i64() const;
  std::int64_t denominator_i64() const;

  /// Floor and ceiling as int64; throw on overflow.
  std::int64_t floor_i64() const;
  std::int64_t ceil_i64() const;
  double to_double() const;

  int sign() const { return sgn(value_); }

  const mpq_class& raw() const { return value_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ + b.value_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ - b.value_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ * b.value_));
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const;

 private:
  mpq_class value_{0};
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// gcd of two rationals: the positive generator of aZ + bZ (0 if both are 0).
Rational gcd(const Rational& a, const Rational& b);

}  // namespace mvk

template <>
struct std::hash<mvk::Rational> {
  std::size_t operator()(const mvk::Rational& r) const { return r.hash(); }
};
