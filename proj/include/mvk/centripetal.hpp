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
#include <vector>

#include "mvk/mv.hpp"
#include "mvk/spectra.hpp"

namespace mvk {

/// a -> a_sigma. Moves every coordinate strictly toward {0, 1/2, 1}.
MvElement game_step(const MvElement& a);

/// Orbit of an element under game_step up to its fixpoint.
///
/// steps[0] is the start, steps[k+1] = game_step(steps[k]), and
/// steps[n] == steps[n+1] is the first repetition; `steps` therefore holds
/// n + 2 entries.
struct GameTrace {
  MvElement start;
  std::vector<MvElement> steps;
  std::size_t n = 0;

  const MvElement& fixpoint() const { return steps[n]; }
};

GameTrace game_fixpoint(const MvElement& a);

/// {i : a_i = 1/2}
std::vector<SpectrumPoint> half_set(const MvElement& a);

/// All boolean r with below_order(r, a), in bitmask order.
std::vector<MvElement> central_cone(const MvElement& a);

struct MonotonicityCheck {
  bool applicable = false;  // half-sets equal and a below b
  bool holds = false;       // n(a) <= n(b), meaningful only when applicable
  std::size_t n_a = 0;
  std::size_t n_b = 0;
};

MonotonicityCheck check_monotonicity(const MvElement& a, const MvElement& b);

}  // namespace mvk
