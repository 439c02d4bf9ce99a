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
#include "mvk/lgroup.hpp"
#include "support.hpp"

namespace mvk {
namespace {

using testing::el;
using testing::Gen;
using testing::q;

TEST(Gamma, UnitIntervals) {
  EXPECT_EQ(gamma(UnitalLGroup({2})), ChainProduct({2}));
  EXPECT_EQ(gamma(UnitalLGroup({1, 1})), ChainProduct({1, 1}));
  EXPECT_EQ(gamma(UnitalLGroup({1, 1})).carrier().size(), 4u);
  EXPECT_THROW(UnitalLGroup({}), InvariantError);
  EXPECT_THROW(UnitalLGroup({2, 0}), InvariantError);
}

TEST(Gamma, ElementTransport) {
  UnitalLGroup g({2, 3});
  auto x = g.element({1, 3});
  EXPECT_EQ(to_mv(x), el({2, 3}, {1, 3}));
  EXPECT_EQ(from_mv(g, to_mv(x)), x);
  EXPECT_THROW(to_mv(g.element({3, 0})), Error);
  EXPECT_THROW(from_mv(g, el({2}, {1})), Error);
}

TEST(Gamma, OperationsMatchTruncatedGroupOps) {
  // x (+) y = u ^ (x + y), not x = u - x.
  UnitalLGroup g({3, 4});
  Gen gen(61);
  for (int i = 0; i < 500; ++i) {
    auto a = gen.element(gamma(g)), b = gen.element(gamma(g));
    auto x = from_mv(g, a), y = from_mv(g, b);
    EXPECT_EQ(from_mv(g, oplus(a, b)), meet(g.unit_element(), x + y));
    EXPECT_EQ(from_mv(g, neg(a)), g.unit_element() - x);
  }
}

TEST(GoodSequence, Example) {
  UnitalLGroup g({3});
  auto s = good_sequence_of(g.element({4}));
  ASSERT_EQ(s.entries.size(), 2u);
  EXPECT_EQ(s.entries[0], el({3}, {3}));
  EXPECT_EQ(s.entries[1], el({3}, {1}));
  EXPECT_TRUE(s.absorbs());
  EXPECT_EQ(s.sum(g), g.element({4}));
  EXPECT_TRUE(good_sequence_of(g.zero()).entries.empty());
  EXPECT_THROW(good_sequence_of(g.element({-1})), Error);
  EXPECT_EQ(s.padded(4, gamma(g)).entries.size(), 4u);
}

TEST(Comparability, Example) {
  UnitalLGroup g({2, 3});
  auto s = comparability_split(g.element({1, 2}), g.element({2, 1}));
  EXPECT_EQ(s.x1, std::vector<SpectrumPoint>{{0}});
  EXPECT_EQ(s.x2, std::vector<SpectrumPoint>{{1}});
  EXPECT_EQ(s.e1, el({2, 3}, {0, 3}));
  EXPECT_EQ(s.e2, el({2, 3}, {2, 0}));
}

TEST(Comparability, NegativeInputsAreShifted) {
  UnitalLGroup g({2, 3});
  auto s = comparability_split(g.element({-5, 4}), g.element({-4, -7}));
  EXPECT_EQ(s.shift, 3);
  EXPECT_EQ(s.x1, std::vector<SpectrumPoint>{{0}});
  EXPECT_EQ(s.x2, std::vector<SpectrumPoint>{{1}});
}

TEST(ExtremalState, Example) {
  UnitalLGroup g({2, 3});
  auto s = extremal_state(g, {1});
  EXPECT_EQ(s(g.element({0, 1})), q(1, 3));
  EXPECT_EQ(s.image_generator(), q(1, 3));
  EXPECT_TRUE(s.is_discrete());
  EXPECT_EQ(s(g.unit_element()), q(1));
  EXPECT_THROW(extremal_state(g, {2}), Error);
}

TEST(GoodSequenceOrder, Examples) {
  UnitalLGroup g({3});
  EXPECT_TRUE(good_sequence_order_test(g.element({4}), g.element({5})));
  EXPECT_TRUE(good_sequence_order_test(g.element({4}), g.element({2})));
}

TEST(LGroup, Arithmetic) {
  UnitalLGroup g({2, 3});
  auto a = g.element({1, -2}), b = g.element({0, 5});
  EXPECT_EQ(a + b, g.element({1, 3}));
  EXPECT_EQ(a - b, g.element({1, -7}));
  EXPECT_EQ(3 * a, g.element({3, -6}));
  EXPECT_EQ(join(a, b), g.element({1, 5}));
  EXPECT_EQ(meet(a, b), g.element({0, -2}));
  EXPECT_FALSE(a <= b);
  EXPECT_TRUE(meet(a, b) <= a);
  EXPECT_EQ(a.pretty(), "(1,-2)");
  EXPECT_THROW(a + UnitalLGroup({2}).element({1}), Error);
}

TEST(LGroupProperties, RandomSplitsAndSequences) {
  Gen gen(62);
  for (int i = 0; i < 2000; ++i) {
    std::vector<std::int64_t> unit(gen.between(1, 4));
    for (auto& u : unit) u = gen.between(1, 6);
    UnitalLGroup g(unit);
    std::vector<std::int64_t> hv(unit.size()), kv(unit.size());
    for (auto& v : hv) v = gen.between(-20, 20);
    for (auto& v : kv) v = gen.between(-20, 20);
    auto h = g.element(hv), k = g.element(kv);
    auto s = comparability_split(h, k);
    EXPECT_TRUE(is_boolean(s.e1));
    EXPECT_EQ(s.e2, neg(s.e1));
    for (auto p : s.x1) EXPECT_LE(hv[p.index], kv[p.index]);
    for (auto p : s.x2) EXPECT_GT(hv[p.index], kv[p.index]);
    auto hp = join(h, g.zero());
    auto seq = good_sequence_of(hp);
    EXPECT_TRUE(seq.absorbs());
    EXPECT_EQ(seq.sum(g), hp);
    EXPECT_TRUE(good_sequence_order_test(hp, join(k, g.zero())));
  }
}

}  // namespace
}  // namespace mvk
