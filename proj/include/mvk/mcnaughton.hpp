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

#include <cstddef>
#include <utility>
#include <vector>

#include "mvk/rational.hpp"
#include "mvk/term.hpp"

namespace mvk {

struct PLPoint {
  Rational x;
  Rational y;
  friend bool operator==(const PLPoint&, const PLPoint&) = default;
};

struct AffinePiece {
  Rational x0, x1;
  Rational slope, intercept;
};

/// Continuous piecewise-affine map [0,1] -> [0,1] given by its breakpoints.
///
/// Stored normalized: abscissae strictly increase from 0 to 1 and no
/// interior breakpoint is collinear with its neighbours, so equality of
/// representations is equality of functions. A function built through
/// the default constructor must be a McNaughton function (every piece has
/// integer slope and intercept); `rational()` lifts that requirement to
/// admit e.g. the constant 1/2. The pointwise operations preserve the
/// McNaughton property.
class PLFunction {
 public:
  explicit PLFunction(std::vector<PLPoint> points);
  static PLFunction rational(std::vector<PLPoint> points);

  static PLFunction identity();
  static PLFunction constant(const Rational& c);

  const std::vector<PLPoint>& points() const { return points_; }
  std::vector<AffinePiece> pieces() const;
  bool is_mcnaughton() const { return mcnaughton_; }

  /// Throws Error(kInvalidArgument) for x outside [0,1].
  Rational operator()(const Rational& x) const;

  friend bool operator==(const PLFunction& a, const PLFunction& b) {
    return a.points_ == b.points_;
  }

 private:
  PLFunction(std::vector<PLPoint> points, bool require_integer);

  std::vector<PLPoint> points_;
  bool mcnaughton_ = false;
};

PLFunction pl_oplus(const PLFunction& f, const PLFunction& g);
PLFunction pl_neg(const PLFunction& f);
PLFunction pl_odot(const PLFunction& f, const PLFunction& g);
PLFunction pl_join(const PLFunction& f, const PLFunction& g);
PLFunction pl_meet(const PLFunction& f, const PLFunction& g);

Rational pl_eval(const PLFunction& f, const Rational& x);

/// g o f, exact.
PLFunction compose(const PLFunction& g, const PLFunction& f);

/// f_tau by structural recursion over the pointwise operations.
PLFunction apply_term_pl(const Term& t, const PLFunction& f);

/// (pi_1)_sigma, built by expanding the sigma term over the identity.
PLFunction sigma_star();

/// Pointwise (maximal-ideal) form of the below order, decided exactly.
bool pl_below_pointwise(const PLFunction& f, const PLFunction& g);

/// Closed intervals [a,b] (a == b for isolated points) where f(x) = x.
std::vector<std::pair<Rational, Rational>> fixpoint_set(const PLFunction& f);

struct PLSigmaTrace {
  std::vector<PLFunction> steps;  // steps[0] = f
  bool stabilized = false;        // steps.back() is a sigma-fixpoint
};

/// Iterates f -> f_sigma at most `max_steps` times, stopping early at an
/// exact fixpoint. Iteration on Free_1 need not terminate, hence the bound.
PLSigmaTrace iterate_sigma(const PLFunction& f, std::size_t max_steps);

}  // namespace mvk
