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

#include "mvk/centripetal.hpp"

#include "mvk/term.hpp"

namespace mvk {
namespace {

const Term& sigma_term() {
  static const Term t = Term::sigma();
  return t;
}

}  // namespace

MvElement game_step(const MvElement& a) { return apply_term(sigma_term(), a); }

GameTrace game_fixpoint(const MvElement& a) {
  GameTrace trace{a, {a}, 0};
  for (;;) {
    MvElement next = game_step(trace.steps.back());
    bool fixed = next == trace.steps.back();
    trace.steps.push_back(std::move(next));
    if (fixed) break;
  }
  trace.n = trace.steps.size() - 2;
  return trace;
}

std::vector<SpectrumPoint> half_set(const MvElement& a) {
  std::vector<SpectrumPoint> out;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (2 * a.numerator(i) == a.algebra().denominator(i)) out.push_back({i});
  }
  return out;
}

std::vector<MvElement> central_cone(const MvElement& a) {
  std::vector<MvElement> out;
  for (auto& r : a.algebra().booleans()) {
    if (below_order(r, a)) out.push_back(std::move(r));
  }
  return out;
}

MonotonicityCheck check_monotonicity(const MvElement& a, const MvElement& b) {
  MonotonicityCheck check;
  if (half_set(a) != half_set(b) || !below_order(a, b)) return check;
  check.applicable = true;
  check.n_a = game_fixpoint(a).n;
  check.n_b = game_fixpoint(b).n;
  check.holds = check.n_a <= check.n_b;
  return check;
}

}  // namespace mvk
