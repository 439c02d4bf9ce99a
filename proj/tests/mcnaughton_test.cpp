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
#include "mvk/mcnaughton.hpp"
#include "support.hpp"

namespace mvk {
namespace {

using testing::Gen;
using testing::q;

PLFunction pl(std::vector<std::pair<Rational, Rational>> pts) {
  std::vector<PLPoint> out;
  for (auto& [x, y] : pts) out.push_back({x, y});
  return PLFunction(std::move(out));
}

PLFunction min_one_2x() { return pl({{q(0), q(0)}, {q(1, 2), q(1)}, {q(1), q(1)}}); }

TEST(PLFunction, Normalization) {
  auto f = pl({{q(0), q(0)}, {q(1, 4), q(1, 4)}, {q(1), q(1)}});
  EXPECT_EQ(f, PLFunction::identity());
  EXPECT_EQ(f.points().size(), 2u);
}

TEST(PLFunction, Validation) {
  EXPECT_THROW(pl({{q(0), q(0)}}), InvariantError);
  EXPECT_THROW(pl({{q(0), q(0)}, {q(1, 2), q(0)}}), InvariantError);
  EXPECT_THROW(pl({{q(0), q(0)}, {q(0), q(1)}, {q(1), q(1)}}), InvariantError);
  EXPECT_THROW(pl({{q(0), q(0)}, {q(1), q(3, 2)}}), InvariantError);
  // Slope 1/2 is not a McNaughton piece.
  EXPECT_THROW(pl({{q(0), q(0)}, {q(1), q(1, 2)}}), InvariantError);
  EXPECT_NO_THROW(PLFunction::rational({{q(0), q(0)}, {q(1), q(1, 2)}}));
  EXPECT_THROW(PLFunction::constant(q(3, 2)), Error);
}

TEST(PLFunction, PointwiseExamples) {
  const auto id = PLFunction::identity();
  EXPECT_EQ(pl_oplus(id, id), min_one_2x());
  EXPECT_EQ(pl_odot(id, id), pl({{q(0), q(0)}, {q(1, 2), q(0)}, {q(1), q(1)}}));
  EXPECT_EQ(pl_neg(id), pl({{q(0), q(1)}, {q(1), q(0)}}));
  EXPECT_EQ(pl_join(id, pl_neg(id)),
            pl({{q(0), q(1)}, {q(1, 2), q(1, 2)}, {q(1), q(1)}}));
  EXPECT_EQ(pl_meet(id, pl_neg(id)),
            pl({{q(0), q(0)}, {q(1, 2), q(1, 2)}, {q(1), q(0)}}));
}

TEST(PLFunction, SigmaStar) {
  const auto s = sigma_star();
  EXPECT_EQ(s, pl({{q(0), q(0)}, {q(1, 3), q(0)}, {q(2, 3), q(1)}, {q(1), q(1)}}));
  EXPECT_EQ(s.pieces().size(), 3u);
  EXPECT_EQ(pl_eval(s, q(0)), q(0));
  EXPECT_EQ(pl_eval(s, q(1, 2)), q(1, 2));
  EXPECT_EQ(pl_eval(s, q(1)), q(1));
  EXPECT_EQ(pl_eval(s, q(1, 3)), q(0));
  EXPECT_EQ(pl_eval(s, q(3, 4)), q(1));
  EXPECT_EQ(pl_eval(s, q(2, 5)), q(1, 5));
  EXPECT_EQ(pl_eval(s, q(1, 5)), q(0));
  EXPECT_EQ(apply_term_pl(Term::sigma(), PLFunction::identity()), s);
  EXPECT_TRUE(s.is_mcnaughton());
}

TEST(PLFunction, SigmaOfConstantHalf) {
  const auto half = PLFunction::constant(q(1, 2));
  EXPECT_FALSE(half.is_mcnaughton());
  EXPECT_EQ(apply_term_pl(Term::sigma(), half), half);
}

TEST(PLFunction, Pieces) {
  auto pieces = sigma_star().pieces();
  EXPECT_EQ(pieces[1].x0, q(1, 3));
  EXPECT_EQ(pieces[1].x1, q(2, 3));
  EXPECT_EQ(pieces[1].slope, q(3));
  EXPECT_EQ(pieces[1].intercept, q(-1));
}

TEST(PLFunction, EvalRangeChecked) {
  EXPECT_THROW(pl_eval(sigma_star(), q(-1, 3)), Error);
  EXPECT_THROW(pl_eval(sigma_star(), q(4, 3)), Error);
}

TEST(PLFunction, Composition) {
  auto c = compose(sigma_star(), min_one_2x());
  // max(0, 6x - 1) truncated at 1: zero on [0, 1/6], one from 1/3.
  EXPECT_EQ(c, pl({{q(0), q(0)}, {q(1, 6), q(0)}, {q(1, 3), q(1)}, {q(1), q(1)}}));
  Gen gen(41);
  for (int i = 0; i < 100; ++i) {
    Rational x = gen.unit_rational(500);
    EXPECT_EQ(pl_eval(c, x), pl_eval(sigma_star(), pl_eval(min_one_2x(), x)));
  }
}

TEST(PLFunction, BelowPointwise) {
  const auto id = PLFunction::identity();
  EXPECT_TRUE(pl_below_pointwise(apply_term_pl(Term::sigma(), id), id));
  EXPECT_FALSE(pl_below_pointwise(PLFunction::constant(q(1)),
                                  PLFunction::constant(q(1, 4))));
  EXPECT_TRUE(pl_below_pointwise(PLFunction::constant(q(0)),
                                 PLFunction::constant(q(1, 4))));
  EXPECT_TRUE(pl_below_pointwise(PLFunction::constant(q(1)),
                                 PLFunction::constant(q(1, 2))));
  EXPECT_FALSE(pl_below_pointwise(id, sigma_star()));
}

TEST(PLFunction, FixpointSet) {
  using Interval = std::pair<Rational, Rational>;
  EXPECT_EQ(fixpoint_set(sigma_star()),
            (std::vector<Interval>{{q(0), q(0)}, {q(1, 2), q(1, 2)}, {q(1), q(1)}}));
  EXPECT_EQ(fixpoint_set(PLFunction::identity()),
            (std::vector<Interval>{{q(0), q(1)}}));
  EXPECT_EQ(fixpoint_set(min_one_2x()),
            (std::vector<Interval>{{q(0), q(0)}, {q(1), q(1)}}));
}

TEST(PLFunction, IterateSigma) {
  auto t = iterate_sigma(PLFunction::identity(), 5);
  EXPECT_FALSE(t.stabilized);
  ASSERT_EQ(t.steps.size(), 6u);
  // Each iterate is 0, then one steeper ramp, then 1.
  for (std::size_t k = 1; k < t.steps.size(); ++k) {
    EXPECT_TRUE(pl_below_pointwise(t.steps[k], t.steps[k - 1]));
    EXPECT_EQ(t.steps[k].pieces().size(), 3u);
  }
  auto fixed = iterate_sigma(PLFunction::constant(q(1, 2)), 5);
  EXPECT_TRUE(fixed.stabilized);
}

// Random McNaughton functions from random terms; pointwise ops agree with
// the standard algebra at random rationals.
TEST(PLProperties, OpsAgreePointwise) {
  Gen gen(42);
  const char* terms[] = {"X", "X + X", "~X", "X * X + X * X", "sigma(X)",
                         "sigma(X + X) & ~X", "(X + X + X) * ~(X * X)",
                         "X | ~X"};
  std::vector<PLFunction> fs;
  for (const char* t : terms) {
    fs.push_back(apply_term_pl(Term::parse(t), PLFunction::identity()));
  }
  for (const auto& f : fs) {
    EXPECT_TRUE(f.is_mcnaughton());
    for (const auto& g : fs) {
      auto o = pl_oplus(f, g), d = pl_odot(f, g), j = pl_join(f, g),
           m = pl_meet(f, g), c = compose(f, g);
      for (int i = 0; i < 25; ++i) {
        Rational x = gen.unit_rational();
        Rational fx = f(x), gx = g(x);
        EXPECT_EQ(o(x), standard::oplus(fx, gx));
        EXPECT_EQ(d(x), standard::odot(fx, gx));
        EXPECT_EQ(j(x), max(fx, gx));
        EXPECT_EQ(m(x), min(fx, gx));
        EXPECT_EQ(c(x), f(gx));
      }
    }
  }
}

}  // namespace
}  // namespace mvk
