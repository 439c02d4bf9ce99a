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

#include "mvk/error.hpp"
#include "mvk/spectra.hpp"
#include "support.hpp"

namespace mvk {
namespace {

using testing::el;
using testing::Gen;
using testing::q;

TEST(Ideals, CountAndPrimes) {
  EXPECT_EQ(enumerate_ideals(ChainProduct({2, 3})).size(), 4u);
  EXPECT_EQ(enumerate_ideals(ChainProduct({1, 1, 1})).size(), 8u);
  int primes = 0;
  for (const auto& i : enumerate_ideals(ChainProduct({2, 2}))) {
    primes += is_prime(i);
  }
  EXPECT_EQ(primes, 2);
}

TEST(Ideals, PrimeIffSingletonVanishingSet) {
  ChainProduct alg({2, 3, 4});
  EXPECT_TRUE(is_prime(Ideal(alg, {false, true, false})));
  EXPECT_FALSE(is_prime(Ideal(alg, {true, true, false})));
  EXPECT_FALSE(is_prime(Ideal(alg, {false, false, false})));
  EXPECT_EQ(Ideal(alg, {false, true, false}).quotient_algebra(),
            ChainProduct({3}));
  EXPECT_THROW(Ideal(alg, {false, false, false}).quotient_algebra(), Error);
}

TEST(Ideals, MembershipAndProjection) {
  ChainProduct alg({2, 3});
  Ideal j(alg, {false, true});
  EXPECT_TRUE(j.contains(el({2, 3}, {1, 0})));
  EXPECT_FALSE(j.contains(el({2, 3}, {1, 1})));
  EXPECT_TRUE(j.is_proper());
  EXPECT_FALSE(Ideal(alg, {false, false}).is_proper());
  EXPECT_EQ(j.project(el({2, 3}, {1, 2})), el({3}, {2}));
}

TEST(Ideals, ClosedUnderOplusAndDownward) {
  Gen gen(31);
  for (int i = 0; i < 50; ++i) {
    auto alg = gen.algebra(3, 4);
    for (const auto& ideal : enumerate_ideals(alg)) {
      for (int k = 0; k < 30; ++k) {
        auto x = gen.element(alg), y = gen.element(alg);
        if (ideal.contains(x) && ideal.contains(y)) {
          EXPECT_TRUE(ideal.contains(oplus(x, y)));
        }
        if (ideal.contains(x) && natural_leq(y, x)) {
          EXPECT_TRUE(ideal.contains(y));
        }
      }
    }
  }
}

TEST(Quotient, Projection) {
  EXPECT_EQ(quotient(el({2, 3}, {1, 2}), {1}), q(2, 3));
  EXPECT_EQ(quotient(el({2, 3}, {1, 2}), {0}), q(1, 2));
  EXPECT_THROW(quotient(el({2, 3}, {1, 2}), {2}), Error);
}

TEST(BelowOrder, Examples) {
  EXPECT_TRUE(below_order(el({2, 3}, {2, 0}), el({2, 3}, {1, 1})));
  EXPECT_FALSE(below_order(el({3}, {2}), el({3}, {1})));
  EXPECT_FALSE(is_below_minimal(el({2}, {1})));
  EXPECT_FALSE(is_below_minimal(el({4}, {1})));
  EXPECT_TRUE(is_below_minimal(el({4, 1}, {4, 0})));
}

TEST(BelowOrder, AgreesWithDefinitionOverQuotients) {
  // x below y iff in every prime quotient x sits on y's side of 1/2 and at
  // least as far out, wherever y != not y.
  Gen gen(32);
  for (int i = 0; i < 3000; ++i) {
    auto alg = gen.algebra(4, 8);
    auto x = gen.element(alg), y = gen.element(alg);
    bool expected = true;
    for (std::size_t c = 0; c < alg.rank(); ++c) {
      Rational xv = quotient(x, {c}), yv = quotient(y, {c});
      if (yv < q(1, 2) && yv < xv) expected = false;
      if (yv > q(1, 2) && xv < yv) expected = false;
    }
    EXPECT_EQ(below_order(x, y), expected) << x.pretty() << " " << y.pretty();
  }
}

TEST(BelowOrder, MinimalIffBoolean) {
  Gen gen(33);
  for (int i = 0; i < 300; ++i) {
    auto alg = gen.algebra(3, 5);
    auto x = gen.element(alg);
    bool minimal = true;
    for (const auto& y : alg.carrier()) {
      if (!(y == x) && below_order(y, x)) minimal = false;
    }
    EXPECT_EQ(is_below_minimal(x), minimal) << x.pretty();
    EXPECT_EQ(is_below_minimal(x), is_boolean(x)) << x.pretty();
  }
}

TEST(Indicators, Examples) {
  ChainProduct alg({2, 3, 3});
  std::vector<SpectrumPoint> w{{0}, {2}};
  EXPECT_EQ(zeroset_indicator(alg, w), el({2, 3, 3}, {0, 3, 0}));
  EXPECT_EQ(level_set_indicator(el({2, 3, 3}, {1, 1, 3}), q(1, 3)),
            el({2, 3, 3}, {2, 0, 3}));
  EXPECT_EQ(separating_element(ChainProduct({2, 3}), {0}, {1}),
            el({2, 3}, {0, 3}));
  EXPECT_EQ(separating_element(alg, {1}, {2}), el({2, 3, 3}, {2, 0, 3}));
  EXPECT_THROW(separating_element(alg, {1}, {1}), Error);
  EXPECT_THROW(level_set_indicator(el({2}, {1}), q(3, 2)), Error);
}

TEST(Indicators, EmptyAndFullZerosets) {
  ChainProduct alg({4, 5});
  EXPECT_EQ(zeroset_indicator(alg, {}), alg.one());
  std::vector<SpectrumPoint> all{{0}, {1}};
  EXPECT_EQ(zeroset_indicator(alg, all), alg.zero());
}

TEST(Subalgebra, Examples) {
  std::vector<MvElement> g1{el({2}, {1})};
  EXPECT_EQ(generated_subalgebra(ChainProduct({2}), g1).size(), 3u);
  std::vector<MvElement> g2{el({4}, {1})};
  EXPECT_EQ(generated_subalgebra(ChainProduct({4}), g2).size(), 5u);
  std::vector<MvElement> g3{el({6}, {2})};
  // 1/3 generates L_3 inside L_6.
  auto sub = generated_subalgebra(ChainProduct({6}), g3);
  ASSERT_EQ(sub.size(), 4u);
  EXPECT_EQ(sub[1], el({6}, {2}));
  EXPECT_EQ(generated_subalgebra(ChainProduct({6}), {}).size(), 2u);
  std::vector<MvElement> foreign{el({3}, {1})};
  EXPECT_THROW(generated_subalgebra(ChainProduct({6}), foreign), Error);
}

}  // namespace
}  // namespace mvk
