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

#include "mvk/mv.hpp"

#include <algorithm>

#include "mvk/error.hpp"

namespace mvk {

ChainProduct::ChainProduct(std::vector<std::int64_t> denominators) {
  if (denominators.empty()) {
    throw InvariantError("nonempty product", "a chain product needs m >= 1");
  }
  for (auto d : denominators) {
    if (d < 1) {
      throw InvariantError("positive denominator",
                           "chain denominator " + std::to_string(d) + " < 1");
    }
  }
  dens_ = std::make_shared<const std::vector<std::int64_t>>(
      std::move(denominators));
}

std::optional<std::uint64_t> ChainProduct::carrier_size() const {
  std::uint64_t n = 1;
  for (auto d : *dens_) {
    auto f = static_cast<std::uint64_t>(d) + 1;
    if (__builtin_mul_overflow(n, f, &n)) return std::nullopt;
  }
  return n;
}

std::optional<std::uint64_t> ChainProduct::boolean_count() const {
  if (rank() >= 64) return std::nullopt;
  return std::uint64_t{1} << rank();
}

std::int64_t ChainProduct::max_denominator() const {
  return *std::max_element(dens_->begin(), dens_->end());
}

MvElement ChainProduct::zero() const {
  return MvElement(*this, std::vector<std::int64_t>(rank(), 0));
}

MvElement ChainProduct::one() const {
  return MvElement(*this, *dens_);
}

MvElement ChainProduct::from_numerators(
    std::vector<std::int64_t> numerators) const {
  return MvElement(*this, std::move(numerators));
}

MvElement ChainProduct::element(std::span<const Rational> values) const {
  if (values.size() != rank()) {
    throw InvariantError("element shape",
                         "expected " + std::to_string(rank()) +
                             " values, got " + std::to_string(values.size()));
  }
  std::vector<std::int64_t> nums(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    Rational scaled = values[i] * Rational(denominator(i));
    if (!scaled.is_integer() || values[i] < Rational(0) ||
        Rational(1) < values[i]) {
      throw InvariantError("carrier membership",
                           values[i].str() + " is not in L_" +
                               std::to_string(denominator(i)));
    }
    nums[i] = scaled.numerator_i64();
  }
  return MvElement(*this, std::move(nums));
}

MvElement ChainProduct::element_at(std::uint64_t index) const {
  std::vector<std::int64_t> nums(rank());
  for (std::size_t i = rank(); i-- > 0;) {
    auto radix = static_cast<std::uint64_t>(denominator(i)) + 1;
    nums[i] = static_cast<std::int64_t>(index % radix);
    index /= radix;
  }
  if (index != 0) {
    throw Error(ErrorKind::kInvalidArgument, "element index out of range");
  }
  return MvElement(*this, std::move(nums));
}

std::uint64_t ChainProduct::index_of(const MvElement& e) const {
  if (!(e.algebra() == *this)) {
    throw Error(ErrorKind::kAlgebraMismatch,
                "element of " + e.algebra().str() + " indexed in " + str());
  }
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    index = index * (static_cast<std::uint64_t>(denominator(i)) + 1) +
            static_cast<std::uint64_t>(e.numerator(i));
  }
  return index;
}

std::vector<MvElement> ChainProduct::carrier(std::uint64_t limit) const {
  auto n = carrier_size();
  if (!n || *n > limit) {
    throw Error(ErrorKind::kInvalidArgument,
                "carrier of " + str() + " too large to enumerate");
  }
  std::vector<MvElement> out;
  out.reserve(*n);
  std::vector<std::int64_t> nums(rank(), 0);
  for (std::uint64_t c = 0; c < *n; ++c) {
    out.emplace_back(*this, nums);
    for (std::size_t i = rank(); i-- > 0;) {
      if (nums[i] < denominator(i)) {
        ++nums[i];
        break;
      }
      nums[i] = 0;
    }
  }
  return out;
}

std::vector<MvElement> ChainProduct::booleans() const {
  auto count = boolean_count();
  if (!count || *count > (1u << 24)) {
    throw Error(ErrorKind::kInvalidArgument,
                "boolean skeleton of " + str() + " too large to enumerate");
  }
  std::vector<MvElement> out;
  out.reserve(*count);
  for (std::uint64_t mask = 0; mask < *count; ++mask) {
    std::vector<std::int64_t> nums(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      nums[i] = (mask >> i) & 1 ? denominator(i) : 0;
    }
    out.emplace_back(*this, std::move(nums));
  }
  return out;
}

std::string ChainProduct::str() const {
  std::string s;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (i) s += " x ";
    s += "L_" + std::to_string(denominator(i));
  }
  return s;
}

MvElement::MvElement(ChainProduct algebra, std::vector<std::int64_t> numerators)
    : alg_(std::move(algebra)), nums_(std::move(numerators)) {
  if (nums_.size() != alg_.rank()) {
    throw InvariantError("element shape",
                         "expected " + std::to_string(alg_.rank()) +
                             " coordinates, got " +
                             std::to_string(nums_.size()));
  }
  for (std::size_t i = 0; i < nums_.size(); ++i) {
    if (nums_[i] < 0 || nums_[i] > alg_.denominator(i)) {
      throw InvariantError("carrier membership",
                           std::to_string(nums_[i]) + "/" +
                               std::to_string(alg_.denominator(i)) +
                               " is outside [0,1]");
    }
  }
}

Rational MvElement::value(std::size_t i) const {
  return Rational(nums_[i], alg_.denominator(i));
}

std::vector<Rational> MvElement::values() const {
  std::vector<Rational> out;
  out.reserve(rank());
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(value(i));
  return out;
}

std::string MvElement::pretty() const {
  if (rank() == 1) return value(0).pretty();
  std::string s = "(";
  for (std::size_t i = 0; i < rank(); ++i) {
    if (i) s += ",";
    s += value(i).pretty();
  }
  return s + ")";
}

void require_same_algebra(const MvElement& a, const MvElement& b) {
  if (!(a.algebra() == b.algebra())) {
    throw Error(ErrorKind::kAlgebraMismatch,
                "incompatible carriers: " + a.algebra().str() + " vs " +
                    b.algebra().str());
  }
}

MvElement oplus(const MvElement& a, const MvElement& b) {
  require_same_algebra(a, b);
  std::vector<std::int64_t> out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    out[i] = std::min(a.algebra().denominator(i),
                      a.numerator(i) + b.numerator(i));
  }
  return MvElement(a.algebra(), std::move(out));
}

MvElement neg(const MvElement& a) {
  std::vector<std::int64_t> out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    out[i] = a.algebra().denominator(i) - a.numerator(i);
  }
  return MvElement(a.algebra(), std::move(out));
}

MvElement odot(const MvElement& a, const MvElement& b) {
  return neg(oplus(neg(a), neg(b)));
}

MvElement join(const MvElement& a, const MvElement& b) {
  return oplus(neg(oplus(neg(a), b)), b);
}

MvElement meet(const MvElement& a, const MvElement& b) {
  return neg(join(neg(a), neg(b)));
}

bool natural_leq(const MvElement& a, const MvElement& b) {
  return oplus(neg(a), b) == a.algebra().one();
}

MvElement chang_distance(const MvElement& a, const MvElement& b) {
  return oplus(odot(a, neg(b)), odot(b, neg(a)));
}

bool is_boolean(const MvElement& a) { return oplus(a, a) == a; }

bool is_characteristic(const MvElement& a) {
  return meet(a, neg(a)) == a.algebra().zero();
}

namespace standard {
namespace {

const Rational& unit(const Rational& a) {
  if (a.sign() < 0 || Rational(1) < a) {
    throw Error(ErrorKind::kInvalidArgument,
                a.str() + " is outside [0,1]");
  }
  return a;
}

}  // namespace

Rational oplus(const Rational& a, const Rational& b) {
  return min(Rational(1), unit(a) + unit(b));
}

Rational neg(const Rational& a) { return Rational(1) - unit(a); }

Rational odot(const Rational& a, const Rational& b) {
  return max(Rational(0), unit(a) + unit(b) - Rational(1));
}

}  // namespace standard
}  // namespace mvk
