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
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvk/mv.hpp"

namespace mvk::verify {

/// The operations a suite treats as primitive. Every derived operation the
/// suites need (odot, join, meet, natural order, sigma) is rebuilt from
/// these, so substituting a corrupted primitive exercises the suites'
/// ability to catch it.
struct Primitives {
  std::function<MvElement(const MvElement&, const MvElement&)> oplus;
  std::function<MvElement(const MvElement&)> neg;
  std::function<bool(const MvElement&, const MvElement&)> below;

  static Primitives standard();
};

/// Which ChainProducts a sweep visits. Zero means "no bound" for the
/// optional limits. A nonempty `only` replaces the enumeration by exactly
/// those denominator lists.
struct SweepBounds {
  std::uint64_t max_carrier = 200;
  std::int64_t max_denominator = 0;
  std::size_t max_factors = 0;
  std::vector<std::vector<std::int64_t>> only = {};
};

/// One product per sorted denominator multiset d_1 <= ... <= d_m with
/// prod(d_i + 1) <= max_carrier, ordered by carrier size then
/// lexicographically; or the `only` list as given.
std::vector<ChainProduct> enumerate_algebras(const SweepBounds& bounds);

struct Counterexample {
  std::string property;
  std::vector<std::string> witnesses;  // element documents
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t instances = 0;
  std::optional<Counterexample> counterexample;
  std::vector<std::string> notes;
  double seconds = 0;
  /// Re-evaluates the failing predicate from scratch; true iff it still
  /// fails. Empty when the suite passed.
  std::function<bool()> confirm;

  bool passed() const { return !counterexample.has_value(); }
  std::string text() const;
  std::string json() const;
};

SuiteReport verify_mv_axioms(const SweepBounds& bounds,
                             const Primitives& ops = Primitives::standard());

/// Reflexivity and antisymmetry over pairs, transitivity over triples.
SuiteReport verify_partial_order(
    const SweepBounds& bounds, const Primitives& ops = Primitives::standard());

/// boolean <=> characteristic <=> below-minimal <=> coordinates in {0,1}.
SuiteReport verify_centrality_equivalences(
    const SweepBounds& bounds, const Primitives& ops = Primitives::standard());

/// sigma(a) below a on the sweep; strict motion away from 1/2 on every
/// chain L_d with d <= chain_max_denominator.
SuiteReport verify_sigma_props(const SweepBounds& bounds,
                               std::int64_t chain_max_denominator = 50,
                               const Primitives& ops = Primitives::standard());

/// Fixpoint iteration bound, n(p) characterisations, monotonicity of n and
/// the central cone facts, on the sweep plus every chain up to
/// chain_max_denominator.
SuiteReport verify_centripetal(const SweepBounds& bounds,
                               std::int64_t chain_max_denominator = 50,
                               const Primitives& ops = Primitives::standard());

/// Subset enumeration of every carrier of at most `max_carrier` (capped at
/// 16) elements: genuine ideals are exactly the coordinate-vanishing sets,
/// and prime <=> meet-irreducible <=> chain quotient <=> |Z| = 1.
SuiteReport verify_ideal_model(std::uint64_t max_carrier = 12,
                               const Primitives& ops = Primitives::standard());

/// Expands the sigma term symbolically and compares it with
/// min(1, max(0, 3x)) and min(1, max(0, 3x - 1)).
SuiteReport verify_sigma_closed_form();

/// Generated subalgebras are finite, closed, and agree with a naive
/// table-driven closure; `generator_sets` random sets per algebra.
SuiteReport verify_local_finiteness(
    const SweepBounds& bounds, std::size_t generator_sets = 100,
    std::uint64_t seed = 0x5eed,
    const Primitives& ops = Primitives::standard());

/// Zeroset and level-set indicators are boolean with exact zerosets.
SuiteReport verify_indicators(const SweepBounds& bounds,
                              const Primitives& ops = Primitives::standard());

struct LGroupBounds {
  std::int64_t max_abs = 5;
  std::size_t max_rank = 3;
  std::int64_t max_unit = 4;
};

/// Every extremal state of every group in range is discrete with image
/// generated by 1/d_i, normalized and additive.
SuiteReport verify_discrete_states(const LGroupBounds& bounds = {});

/// comparability_split against direct coordinate comparison for all h, k
/// with |h_i|, |k_i| <= max_abs.
SuiteReport verify_comparability(const LGroupBounds& bounds = {});

/// Absorption, sum recovery and uniqueness (exhaustive search) for every
/// 0 <= h <= 3u, plus good_sequence_order_test on [0, max_abs]^m.
SuiteReport verify_good_sequences(const LGroupBounds& bounds = {});

const std::vector<std::string>& suite_names();

/// Runs one named suite, or every suite in suite_names() order for "all".
/// Throws Error(kUnknownSuite).
std::vector<SuiteReport> run_suites(std::string_view name,
                                    std::uint64_t max_carrier);

}  // namespace mvk::verify
