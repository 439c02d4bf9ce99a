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

#include "mvk/rational.hpp"

#include <cctype>
#include <limits>

#include "mvk/error.hpp"

namespace mvk {
namespace {

mpz_class to_mpz(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

std::int64_t to_i64(const mpz_class& z, const char* what) {
  if (!z.fits_slong_p()) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string(what) + " does not fit in 64 bits");
  }
  return z.get_si();
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(to_mpz(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw InvariantError("positive denominator", "denominator is zero");
  }
  value_ = mpq_class(to_mpz(numerator), to_mpz(denominator));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text, bool allow_integer) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  bool negative = !num.empty() && num.front() == '-';
  if (negative) num.remove_prefix(1);
  if (!is_digits(num)) {
    throw InvariantError("rational syntax",
                         "'" + std::string(text) + "' is not of the form p/q");
  }
  mpz_class n(std::string(num), 10);
  if (negative) n = -n;
  if (slash == std::string_view::npos) {
    if (!allow_integer) {
      throw InvariantError("rational syntax", "'" + std::string(text) +
                                                  "' is missing '/q'");
    }
    return Rational(mpq_class(n));
  }
  std::string_view den = text.substr(slash + 1);
  if (!is_digits(den)) {
    throw InvariantError("rational syntax",
                         "'" + std::string(text) + "' is not of the form p/q");
  }
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw InvariantError("positive denominator",
                         "'" + std::string(text) + "' has denominator 0");
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) {
    throw InvariantError("lowest terms",
                         "'" + std::string(text) + "' is not reduced");
  }
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::pretty() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return str();
}

std::string Rational::numerator_str() const {
  return value_.get_num().get_str();
}
std::string Rational::denominator_str() const {
  return value_.get_den().get_str();
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::int64_t Rational::numerator_i64() const {
  return to_i64(value_.get_num(), "numerator");
}
std::int64_t Rational::denominator_i64() const {
  return to_i64(value_.get_den(), "denominator");
}

std::int64_t Rational::floor_i64() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return to_i64(q, "floor");
}

std::int64_t Rational::ceil_i64() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return to_i64(q, "ceiling");
}

double Rational::to_double() const { return value_.get_d(); }

Rational operator/(const Rational& a, const Rational& b) {
  if (b.sign() == 0) {
    throw Error(ErrorKind::kInvalidArgument, "division by zero");
  }
  return Rational(mpq_class(a.value_ / b.value_));
}

std::size_t Rational::hash() const {
  std::size_t h = std::hash<std::string>{}(value_.get_num().get_str(16));
  std::size_t d = std::hash<std::string>{}(value_.get_den().get_str(16));
  return h ^ (d + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational gcd(const Rational& a, const Rational& b) {
  // gcd(p/q, r/s) = gcd(p*s, r*q) / (q*s)
  mpz_class ps = a.raw().get_num() * b.raw().get_den();
  mpz_class rq = b.raw().get_num() * a.raw().get_den();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), ps.get_mpz_t(), rq.get_mpz_t());
  mpz_class den = a.raw().get_den() * b.raw().get_den();
  return Rational(mpq_class(g, den));
}

}  // namespace mvk
