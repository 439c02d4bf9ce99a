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
#include "mvk/mv.hpp"
#include "support.hpp"

namespace mvk {
namespace {

using testing::el;
using testing::Gen;
using testing::q;

TEST(ChainProduct, Shape) {
  ChainProduct a({2, 3});
  EXPECT_EQ(a.rank(), 2u);
  EXPECT_EQ(*a.carrier_size(), 12u);
  EXPECT_EQ(*a.boolean_count(), 4u);
  EXPECT_EQ(a.max_denominator(), 3);
  EXPECT_EQ(a.str(), "L_2 x L_3");
  EXPECT_EQ(a.carrier().size(), 12u);
  EXPECT_EQ(a.booleans().size(), 4u);
}

TEST(ChainProduct, RejectsBadDenominators) {
  EXPECT_THROW(ChainProduct({}), InvariantError);
  EXPECT_THROW(ChainProduct({2, 0}), InvariantError);
  EXPECT_THROW(ChainProduct({-1}), InvariantError);
}

TEST(ChainProduct, CarrierOverflowIsReported) {
  std::vector<std::int64_t> dens(70, 1);
  EXPECT_FALSE(ChainProduct(dens).carrier_size().has_value());
}

TEST(ChainProduct, IndexRoundTrip) {
  ChainProduct a({2, 1, 4});
  for (std::uint64_t i = 0; i < *a.carrier_size(); ++i) {
    EXPECT_EQ(a.index_of(a.element_at(i)), i);
  }
}

TEST(ChainProduct, ElementMembership) {
  ChainProduct a({2, 3});
  std::vector<Rational> ok{q(1, 2), q(2, 3)};
  EXPECT_EQ(a.element(ok), el({2, 3}, {1, 2}));
  std::vector<Rational> bad{q(1, 3), q(2, 3)};
  try {
    a.element(bad);
    FAIL();
  } catch (const InvariantError& e) {
    EXPECT_EQ(e.invariant(), "carrier membership");
  }
  std::vector<Rational> out{q(3, 2), q(0)};
  EXPECT_THROW(a.element(out), InvariantError);
  EXPECT_THROW(MvElement(a, {3, 0}), InvariantError);
  EXPECT_THROW(MvElement(a, {1}), InvariantError);
}

TEST(MvOps, Examples) {
  EXPECT_EQ(oplus(el({2}, {1}), el({2}, {1})), el({2}, {2}));
  EXPECT_EQ(oplus(el({3, 2}, {1, 1}), el({3, 2}, {1, 1})), el({3, 2}, {2, 2}));
  EXPECT_EQ(neg(el({3}, {1})), el({3}, {2}));
  EXPECT_EQ(odot(el({2}, {1}), el({2}, {1})), el({2}, {0}));
  EXPECT_EQ(join(el({5}, {2}), el({5}, {3})), el({5}, {3}));
  EXPECT_EQ(meet(el({5}, {2}), el({5}, {3})), el({5}, {2}));
  EXPECT_FALSE(natural_leq(el({3, 3}, {1, 2}), el({3, 3}, {2, 1})));
  EXPECT_EQ(chang_distance(el({4}, {1}), el({4}, {3})), el({4}, {2}));
}

TEST(MvOps, BooleanAndCharacteristic) {
  EXPECT_FALSE(is_boolean(el({2}, {1})));
  EXPECT_TRUE(is_boolean(el({3, 2}, {3, 0})));
  EXPECT_FALSE(is_characteristic(el({2}, {1})));
  Gen gen(7);
  for (int i = 0; i < 500; ++i) {
    auto a = gen.element(gen.algebra());
    EXPECT_EQ(is_boolean(a), is_characteristic(a)) << a.pretty();
  }
}

TEST(MvOps, MismatchedCarriers) {
  try {
    oplus(el({2}, {1}), el({3}, {1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kAlgebraMismatch);
  }
  EXPECT_THROW(natural_leq(el({2, 2}, {1, 1}), el({2}, {1})), Error);
}

// Properties over random elements of random products.

TEST(MvProperties, Axioms) {
  Gen gen(11);
  for (int i = 0; i < 2000; ++i) {
    auto alg = gen.algebra();
    auto x = gen.element(alg), y = gen.element(alg), z = gen.element(alg);
    SCOPED_TRACE(x.pretty() + " " + y.pretty() + " " + z.pretty());
    EXPECT_EQ(oplus(x, y), oplus(y, x));
    EXPECT_EQ(oplus(oplus(x, y), z), oplus(x, oplus(y, z)));
    EXPECT_EQ(oplus(x, alg.zero()), x);
    EXPECT_EQ(neg(neg(x)), x);
    EXPECT_EQ(oplus(x, neg(alg.zero())), neg(alg.zero()));
    EXPECT_EQ(oplus(neg(oplus(neg(x), y)), y),
              oplus(neg(oplus(neg(y), x)), x));
  }
}

TEST(MvProperties, DerivedOperationsAreCoordinatewise) {
  Gen gen(12);
  for (int i = 0; i < 2000; ++i) {
    auto alg = gen.algebra();
    auto x = gen.element(alg), y = gen.element(alg);
    SCOPED_TRACE(x.pretty() + " " + y.pretty());
    auto o = odot(x, y), j = join(x, y), m = meet(x, y);
    bool leq = true;
    for (std::size_t c = 0; c < alg.rank(); ++c) {
      const auto a = x.numerator(c), b = y.numerator(c);
      const auto d = alg.denominator(c);
      EXPECT_EQ(o.numerator(c), std::max<std::int64_t>(0, a + b - d));
      EXPECT_EQ(j.numerator(c), std::max(a, b));
      EXPECT_EQ(m.numerator(c), std::min(a, b));
      leq = leq && a <= b;
    }
    EXPECT_EQ(natural_leq(x, y), leq);
    EXPECT_EQ(neg(join(x, y)), meet(neg(x), neg(y)));
  }
}

TEST(MvProperties, ChangDistanceIsAMetric) {
  Gen gen(13);
  for (int i = 0; i < 1000; ++i) {
    auto alg = gen.algebra();
    auto x = gen.element(alg), y = gen.element(alg), z = gen.element(alg);
    EXPECT_EQ(chang_distance(x, y), chang_distance(y, x));
    EXPECT_EQ(chang_distance(x, y) == alg.zero(), x == y);
    // d(x, z) <= d(x, y) (+) d(y, z)
    EXPECT_TRUE(natural_leq(chang_distance(x, z),
                            oplus(chang_distance(x, y), chang_distance(y, z))));
  }
}

TEST(MvProperties, PrettyForms) {
  EXPECT_EQ(el({5}, {2}).pretty(), "2/5");
  EXPECT_EQ(el({2, 3}, {1, 1}).pretty(), "(1/2,1/3)");
  EXPECT_EQ(el({4}, {2}).pretty(), "1/2");
  EXPECT_EQ(el({2, 3}, {2, 0}).pretty(), "(1,0)");
}

TEST(StandardAlgebra, Operations) {
  EXPECT_EQ(standard::oplus(q(2, 3), q(1, 2)), q(1));
  EXPECT_EQ(standard::neg(q(1, 3)), q(2, 3));
  EXPECT_EQ(standard::odot(q(2, 3), q(1, 2)), q(1, 6));
  EXPECT_THROW(standard::neg(q(3, 2)), Error);
}

}  // namespace
}  // namespace mvk
