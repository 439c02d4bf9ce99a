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

#include <algorithm>

#include "mvk/spectra.hpp"
#include "mvk/verifier.hpp"

namespace mvk::testing {

// Single-operation corruptions of the standard primitives. Each must be
// caught by at least one suite.

// Truncates at d - 1 instead of d.
inline verify::Primitives oplus_bound_mutant() {
  auto p = verify::Primitives::standard();
  p.oplus = [](const MvElement& a, const MvElement& b) {
    std::vector<std::int64_t> out(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) {
      const auto d = a.algebra().denominator(i);
      out[i] = std::min(d - 1, a.numerator(i) + b.numerator(i));
      out[i] = std::max<std::int64_t>(out[i], 0);
    }
    return a.algebra().from_numerators(std::move(out));
  };
  return p;
}

// not k = d - k + 1, clamped into the chain.
inline verify::Primitives neg_offset_mutant() {
  auto p = verify::Primitives::standard();
  p.neg = [](const MvElement& a) {
    std::vector<std::int64_t> out(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) {
      const auto d = a.algebra().denominator(i);
      out[i] = std::min(d, d - a.numerator(i) + 1);
    }
    return a.algebra().from_numerators(std::move(out));
  };
  return p;
}

// x below y replaced by y below x.
inline verify::Primitives below_flip_mutant() {
  auto p = verify::Primitives::standard();
  p.below = [](const MvElement& x, const MvElement& y) {
    return below_order(y, x);
  };
  return p;
}

}  // namespace mvk::testing
