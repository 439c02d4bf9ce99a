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
#include <memory>
#include <span>
#include <vector>

#include "mvk/mv.hpp"
#include "mvk/rational.hpp"
#include "mvk/spectra.hpp"

namespace mvk {

class LGroupElement;

/// Z^m with the coordinatewise order and strong unit u = (d_1, ..., d_m).
class UnitalLGroup {
 public:
  /// Throws InvariantError unless m >= 1 and every d_i >= 1.
  explicit UnitalLGroup(std::vector<std::int64_t> unit);

  std::size_t rank() const { return unit_->size(); }
  std::span<const std::int64_t> unit() const { return *unit_; }
  LGroupElement unit_element() const;
  LGroupElement zero() const;
  LGroupElement element(std::vector<std::int64_t> coords) const;
  /// Gamma of this group, L_{d_1} x ... x L_{d_m}.
  const ChainProduct& unit_interval() const { return gamma_; }

  friend bool operator==(const UnitalLGroup& a, const UnitalLGroup& b) {
    return a.unit_ == b.unit_ || *a.unit_ == *b.unit_;
  }

 private:
  static std::vector<std::int64_t> checked(std::vector<std::int64_t> unit);

  std::shared_ptr<const std::vector<std::int64_t>> unit_;
  ChainProduct gamma_;
};

class LGroupElement {
 public:
  LGroupElement(UnitalLGroup group, std::vector<std::int64_t> coords);

  const UnitalLGroup& group() const { return group_; }
  std::size_t rank() const { return coords_.size(); }
  std::int64_t coord(std::size_t i) const { return coords_[i]; }
  std::span<const std::int64_t> coords() const { return coords_; }

  bool is_nonnegative() const;
  /// 0 <= g <= u
  bool in_unit_interval() const;

  friend LGroupElement operator+(const LGroupElement& a,
                                 const LGroupElement& b);
  friend LGroupElement operator-(const LGroupElement& a,
                                 const LGroupElement& b);
  friend LGroupElement operator*(std::int64_t k, const LGroupElement& a);
  friend LGroupElement join(const LGroupElement& a, const LGroupElement& b);
  friend LGroupElement meet(const LGroupElement& a, const LGroupElement& b);
  /// Coordinatewise order.
  friend bool operator<=(const LGroupElement& a, const LGroupElement& b);
  friend bool operator==(const LGroupElement& a, const LGroupElement& b) {
    return a.coords_ == b.coords_ && a.group_ == b.group_;
  }

  std::string pretty() const;

 private:
  UnitalLGroup group_;
  std::vector<std::int64_t> coords_;
};

/// Gamma: the unit interval of the group as an MV-algebra, L_{d_1} x ... .
ChainProduct gamma(const UnitalLGroup& group);
/// Unit-interval element g as the MV-element with values g_i / d_i.
MvElement to_mv(const LGroupElement& g);
LGroupElement from_mv(const UnitalLGroup& group, const MvElement& e);

/// x_1, x_2, ... in Gamma(G) with x_i (+) x_{i+1} = x_i whose group sum is
/// the represented element. No trailing zeros.
struct GoodSequence {
  std::vector<MvElement> entries;

  bool absorbs() const;
  LGroupElement sum(const UnitalLGroup& group) const;
  /// Copy padded with zeros to `length` entries.
  GoodSequence padded(std::size_t length, const ChainProduct& algebra) const;
};

/// x_i = ((h - (i-1)u) v 0) ^ u, for i = 1.. until zero. Requires h >= 0.
GoodSequence good_sequence_of(const LGroupElement& h);

/// General comparability witness for (h, k).
struct ComparabilitySplit {
  std::vector<SpectrumPoint> x1;  // h_i <= k_i
  std::vector<SpectrumPoint> x2;  // h_i > k_i
  MvElement e1;                   // zeroset x1
  MvElement e2;                   // zeroset x2
  std::int64_t shift = 0;         // m with h + m u, k + m u >= 0
};

/// Shifts h, k into the positive cone, takes their good sequences padded to
/// a common length n, and sets X_1 = intersection over i of the zerosets of
/// x_i (.) not y_i.
ComparabilitySplit comparability_split(const LGroupElement& h,
                                       const LGroupElement& k);

/// The state g -> g_i / d_i attached to a maximal ideal.
class ExtremalState {
 public:
  ExtremalState(UnitalLGroup group, SpectrumPoint point);

  Rational operator()(const LGroupElement& g) const;
  SpectrumPoint point() const { return point_; }
  /// Positive generator of the image subgroup s(Z^m), computed as the gcd
  /// of the images of the standard basis.
  Rational image_generator() const;
  /// The image is cyclic with generator 1/d_i.
  bool is_discrete() const;

 private:
  UnitalLGroup group_;
  SpectrumPoint point_;
};

ExtremalState extremal_state(const UnitalLGroup& group, SpectrumPoint point);

/// For each coordinate N: h_N <= k_N iff x_i(N) <= y_i(N) for all i, with
/// (x_i), (y_i) the good sequences of h, k padded to equal length. Requires
/// h, k >= 0.
bool good_sequence_order_test(const LGroupElement& h, const LGroupElement& k);

}  // namespace mvk
