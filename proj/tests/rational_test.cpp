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

#include <gtest/gtest.h>

#include <unordered_set>

#include "mvk/error.hpp"
#include "mvk/rational.hpp"

namespace mvk {
namespace {

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(2, 4).str(), "1/2");
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
  EXPECT_EQ(Rational(0, 7).str(), "0/1");
  EXPECT_EQ(Rational(5).str(), "5/1");
  EXPECT_EQ(Rational(4, 2).pretty(), "2");
  EXPECT_EQ(Rational(1, 3).pretty(), "1/3");
}

TEST(Rational, ZeroDenominatorNamesInvariant) {
  try {
    Rational(1, 0);
    FAIL();
  } catch (const InvariantError& e) {
    EXPECT_EQ(e.invariant(), "positive denominator");
  }
}

TEST(Rational, ParseAcceptsLowestTermsOnly) {
  EXPECT_EQ(Rational::parse("2/5"), Rational(2, 5));
  EXPECT_EQ(Rational::parse("-1/3"), Rational(-1, 3));
  EXPECT_EQ(Rational::parse("0/1"), Rational(0));
  EXPECT_THROW(Rational::parse("2/4"), InvariantError);
  EXPECT_THROW(Rational::parse("0/5"), InvariantError);
  try {
    Rational::parse("3/0");
    FAIL();
  } catch (const InvariantError& e) {
    EXPECT_EQ(e.invariant(), "positive denominator");
  }
  EXPECT_THROW(Rational::parse("1/-2"), InvariantError);
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* bad : {"", "1", "/2", "1/", "a/b", "1/2/3", " 1/2", "1.5"}) {
    EXPECT_THROW(Rational::parse(bad), Error) << bad;
  }
  EXPECT_EQ(Rational::parse("7", true), Rational(7));
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(2, 3), Rational(-1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
  EXPECT_THROW(Rational(1) / Rational(0), Error);
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(min(Rational(1, 3), Rational(1, 2)), Rational(1, 3));
  EXPECT_EQ(max(Rational(1, 3), Rational(1, 2)), Rational(1, 2));
}

TEST(Rational, FloorCeil) {
  EXPECT_EQ(Rational(7, 2).floor_i64(), 3);
  EXPECT_EQ(Rational(7, 2).ceil_i64(), 4);
  EXPECT_EQ(Rational(-7, 2).floor_i64(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil_i64(), -3);
  EXPECT_EQ(Rational(4).ceil_i64(), 4);
}

TEST(Rational, GcdOfRationals) {
  EXPECT_EQ(gcd(Rational(1, 2), Rational(1, 3)), Rational(1, 6));
  EXPECT_EQ(gcd(Rational(2, 3), Rational(4, 9)), Rational(2, 9));
  EXPECT_EQ(gcd(Rational(0), Rational(3, 5)), Rational(3, 5));
}

TEST(Rational, HashAgreesWithEquality) {
  std::unordered_set<Rational> s{Rational(1, 2), Rational(2, 4),
                                 Rational(3, 6)};
  EXPECT_EQ(s.size(), 1u);
}

TEST(Rational, StrParseRoundTrip) {
  for (int p = -20; p <= 20; ++p) {
    for (int d = 1; d <= 20; ++d) {
      Rational r(p, d);
      EXPECT_EQ(Rational::parse(r.str()), r);
    }
  }
}

}  // namespace
}  // namespace mvk
