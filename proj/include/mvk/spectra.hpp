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
#include <span>
#include <vector>

#include "mvk/mv.hpp"
#include "mvk/rational.hpp"

namespace mvk {

/// A point of the (prime = maximal) spectrum of a finite ChainProduct,
/// i.e. a 0-based coordinate index.
struct SpectrumPoint {
  std::size_t index;
  friend bool operator==(SpectrumPoint, SpectrumPoint) = default;
  friend auto operator<=>(SpectrumPoint, SpectrumPoint) = default;
};

/// An ideal of a finite ChainProduct. Every ideal is coordinate-induced:
/// its members are exactly the elements vanishing on the set Z.
class Ideal {
 public:
  Ideal(ChainProduct algebra, std::vector<bool> vanishing);

  const ChainProduct& algebra() const { return alg_; }
  bool vanishes_at(std::size_t i) const { return vanishing_[i]; }
  std::vector<SpectrumPoint> vanishing_set() const;
  bool contains(const MvElement& e) const;

  /// Z empty means the ideal is the whole algebra.
  bool is_proper() const;
  /// The quotient B/J, i.e. the product of the chains indexed by Z.
  /// Throws for the improper ideal (trivial quotient).
  ChainProduct quotient_algebra() const;
  MvElement project(const MvElement& e) const;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.alg_ == b.alg_ && a.vanishing_ == b.vanishing_;
  }

 private:
  ChainProduct alg_;
  std::vector<bool> vanishing_;
};

/// All 2^m ideals, ordered by the bitmask of Z (bit i = coordinate i).
std::vector<Ideal> enumerate_ideals(const ChainProduct& algebra);

/// Prime iff the quotient is a nontrivial chain iff |Z| = 1.
bool is_prime(const Ideal& ideal);

/// The image of `a` in the chain L_{d_i} sitting inside [0,1].
Rational quotient(const MvElement& a, SpectrumPoint p);

/// x below y: at every coordinate where y_i < 1 - y_i we need x_i <= y_i,
/// and where y_i > 1 - y_i we need x_i >= y_i. Coordinates with y_i = 1/2
/// are unconstrained.
bool below_order(const MvElement& x, const MvElement& y);

/// True iff no y != x satisfies below_order(y, x).
bool is_below_minimal(const MvElement& x);

/// Boolean element with value 0 exactly on W.
MvElement zeroset_indicator(const ChainProduct& algebra,
                            std::span<const SpectrumPoint> w);

/// Boolean element whose zeroset is {i : a_i = rho}. `rho` must lie in
/// [0,1].
MvElement level_set_indicator(const MvElement& a, const Rational& rho);

/// Boolean element with value 0 at p, 1 at q and 1 everywhere else.
/// Throws Error(kInvalidArgument) if p == q.
MvElement separating_element(const ChainProduct& algebra, SpectrumPoint p,
                             SpectrumPoint q);

/// Closure of gens + {0} under not and (+), sorted in carrier enumeration
/// order. All generators must belong to `algebra`.
std::vector<MvElement> generated_subalgebra(const ChainProduct& algebra,
                                            std::span<const MvElement> gens);

}  // namespace mvk
