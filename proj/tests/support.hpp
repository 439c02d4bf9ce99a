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

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mvk/mv.hpp"
#include "mvk/rational.hpp"

namespace mvk::testing {

inline MvElement el(std::vector<std::int64_t> dens,
                    std::vector<std::int64_t> nums) {
  return ChainProduct(std::move(dens)).from_numerators(std::move(nums));
}

inline Rational q(std::int64_t p, std::int64_t d = 1) { return {p, d}; }

// Seeded generators for property tests. Kept deliberately small so that
// shrinking is unnecessary: failures print the offending element.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  ChainProduct algebra(std::size_t max_rank = 3, std::int64_t max_den = 12) {
    std::vector<std::int64_t> dens(between(1, max_rank));
    for (auto& d : dens) d = between(1, max_den);
    return ChainProduct(std::move(dens));
  }

  MvElement element(const ChainProduct& alg) {
    std::vector<std::int64_t> nums(alg.rank());
    for (std::size_t i = 0; i < alg.rank(); ++i) {
      nums[i] = between(0, alg.denominator(i));
    }
    return alg.from_numerators(std::move(nums));
  }

  Rational unit_rational(std::int64_t max_den = 60) {
    std::int64_t d = between(1, max_den);
    return Rational(between(0, d), d);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline nlohmann::json load_oracle() {
  std::ifstream f(MVK_ORACLE_PATH);
  return nlohmann::json::parse(f);
}

inline MvElement from_json(const nlohmann::json& dens,
                           const nlohmann::json& nums) {
  return el(dens.get<std::vector<std::int64_t>>(),
            nums.get<std::vector<std::int64_t>>());
}

}  // namespace mvk::testing
