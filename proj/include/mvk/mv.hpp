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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvk/rational.hpp"

namespace mvk {

class MvElement;

/// A finite product of Lukasiewicz chains L_{d_1} x ... x L_{d_m}.
///
/// Cheap to copy: the denominator list is shared. Two products compare
/// equal iff their denominator lists are equal, so elements of separately
/// constructed but identical algebras interoperate.
class ChainProduct {
 public:
  /// Throws InvariantError unless the list is nonempty and every d_i >= 1.
  explicit ChainProduct(std::vector<std::int64_t> denominators);

  std::size_t rank() const { return dens_->size(); }
  std::int64_t denominator(std::size_t i) const { return (*dens_)[i]; }
  std::span<const std::int64_t> denominators() const { return *dens_; }

  /// prod(d_i + 1), or nullopt if it does not fit in 64 bits.
  std::optional<std::uint64_t> carrier_size() const;
  /// 2^m, the size of the boolean skeleton; nullopt for m >= 64.
  std::optional<std::uint64_t> boolean_count() const;
  std::int64_t max_denominator() const;

  MvElement zero() const;
  MvElement one() const;
  /// Element with values k_i / d_i.
  MvElement from_numerators(std::vector<std::int64_t> numerators) const;
  /// Throws InvariantError if some value is not in the carrier of L_{d_i}.
  MvElement element(std::span<const Rational> values) const;

  /// Mixed-radix enumeration, last coordinate fastest. `index` must be
  /// below carrier_size().
  MvElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(const MvElement& e) const;
  /// Whole carrier in enumeration order. Throws if larger than `limit`.
  std::vector<MvElement> carrier(std::uint64_t limit = 1u << 22) const;
  /// All 2^m {0,1}-valued elements, ordered by bitmask (bit i = coord i).
  std::vector<MvElement> booleans() const;

  /// "L_2 x L_3"
  std::string str() const;

  friend bool operator==(const ChainProduct& a, const ChainProduct& b) {
    return a.dens_ == b.dens_ || *a.dens_ == *b.dens_;
  }

 private:
  std::shared_ptr<const std::vector<std::int64_t>> dens_;
};

/// An element of a ChainProduct: the value vector (k_1/d_1, ..., k_m/d_m),
/// stored as the integer numerators k_i in [0, d_i].
class MvElement {
 public:
  MvElement(ChainProduct algebra, std::vector<std::int64_t> numerators);

  const ChainProduct& algebra() const { return alg_; }
  std::size_t rank() const { return nums_.size(); }
  std::int64_t numerator(std::size_t i) const { return nums_[i]; }
  std::span<const std::int64_t> numerators() const { return nums_; }
  Rational value(std::size_t i) const;
  std::vector<Rational> values() const;

  /// "2/5" for rank one, "(1/2,1/3)" otherwise.
  std::string pretty() const;

  friend bool operator==(const MvElement& a, const MvElement& b) {
    return a.nums_ == b.nums_ && a.alg_ == b.alg_;
  }

 private:
  ChainProduct alg_;
  std::vector<std::int64_t> nums_;
};

/// Throws Error(kAlgebraMismatch) unless both elements live in equal
/// ChainProducts.
void require_same_algebra(const MvElement& a, const MvElement& b);

MvElement oplus(const MvElement& a, const MvElement& b);
MvElement neg(const MvElement& a);
/// a (.) b = not(not a (+) not b)
MvElement odot(const MvElement& a, const MvElement& b);
/// join(a, b) = not(not a (+) b) (+) b
MvElement join(const MvElement& a, const MvElement& b);
/// meet(a, b) = not(join(not a, not b))
MvElement meet(const MvElement& a, const MvElement& b);

/// a <= b iff not a (+) b = 1.
bool natural_leq(const MvElement& a, const MvElement& b);
/// (a (.) not b) (+) (b (.) not a)
MvElement chang_distance(const MvElement& a, const MvElement& b);

/// a (+) a = a
bool is_boolean(const MvElement& a);
/// meet(a, not a) = 0
bool is_characteristic(const MvElement& a);

/// Operations of the standard MV-algebra [0,1]. Arguments must lie in
/// [0,1].
namespace standard {
Rational oplus(const Rational& a, const Rational& b);
Rational neg(const Rational& a);
Rational odot(const Rational& a, const Rational& b);
}  // namespace standard

}  // namespace mvk

template <>
struct std::hash<mvk::MvElement> {
  std::size_t operator()(const mvk::MvElement& e) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto k : e.numerators()) {
      h ^= static_cast<std::size_t>(k) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};
