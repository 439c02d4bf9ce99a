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

#include "mvk/lgroup.hpp"

#include <algorithm>

#include "mvk/error.hpp"

namespace mvk {
namespace {

void require_same_group(const LGroupElement& a, const LGroupElement& b) {
  if (!(a.group() == b.group())) {
    throw Error(ErrorKind::kAlgebraMismatch,
                "elements of different unital l-groups");
  }
}

template <typename Fn>
LGroupElement zip(const LGroupElement& a, const LGroupElement& b, Fn fn) {
  require_same_group(a, b);
  std::vector<std::int64_t> out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    out[i] = fn(a.coord(i), b.coord(i));
  }
  return LGroupElement(a.group(), std::move(out));
}

}  // namespace

UnitalLGroup::UnitalLGroup(std::vector<std::int64_t> unit)
    : unit_(std::make_shared<const std::vector<std::int64_t>>(
          checked(std::move(unit)))),
      gamma_(*unit_) {}

std::vector<std::int64_t> UnitalLGroup::checked(
    std::vector<std::int64_t> unit) {
  if (unit.empty()) {
    throw InvariantError("nonempty product", "an l-group needs rank >= 1");
  }
  for (auto d : unit) {
    if (d < 1) {
      throw InvariantError("strong unit",
                           "unit coordinate " + std::to_string(d) + " < 1");
    }
  }
  return unit;
}

LGroupElement UnitalLGroup::unit_element() const {
  return LGroupElement(*this, *unit_);
}

LGroupElement UnitalLGroup::zero() const {
  return LGroupElement(*this, std::vector<std::int64_t>(rank(), 0));
}

LGroupElement UnitalLGroup::element(std::vector<std::int64_t> coords) const {
  return LGroupElement(*this, std::move(coords));
}

LGroupElement::LGroupElement(UnitalLGroup group,
                             std::vector<std::int64_t> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
  if (coords_.size() != group_.rank()) {
    throw InvariantError("element shape",
                         "expected " + std::to_string(group_.rank()) +
                             " coordinates, got " +
                             std::to_string(coords_.size()));
  }
}

bool LGroupElement::is_nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](std::int64_t c) { return c >= 0; });
}

bool LGroupElement::in_unit_interval() const {
  for (std::size_t i = 0; i < rank(); ++i) {
    if (coords_[i] < 0 || coords_[i] > group_.unit()[i]) return false;
  }
  return true;
}

LGroupElement operator+(const LGroupElement& a, const LGroupElement& b) {
  return zip(a, b, [](auto x, auto y) { return x + y; });
}

LGroupElement operator-(const LGroupElement& a, const LGroupElement& b) {
  return zip(a, b, [](auto x, auto y) { return x - y; });
}

LGroupElement operator*(std::int64_t k, const LGroupElement& a) {
  std::vector<std::int64_t> out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out[i] = k * a.coord(i);
  return LGroupElement(a.group(), std::move(out));
}

LGroupElement join(const LGroupElement& a, const LGroupElement& b) {
  return zip(a, b, [](auto x, auto y) { return std::max(x, y); });
}

LGroupElement meet(const LGroupElement& a, const LGroupElement& b) {
  return zip(a, b, [](auto x, auto y) { return std::min(x, y); });
}

bool operator<=(const LGroupElement& a, const LGroupElement& b) {
  require_same_group(a, b);
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (a.coord(i) > b.coord(i)) return false;
  }
  return true;
}

std::string LGroupElement::pretty() const {
  std::string s = "(";
  for (std::size_t i = 0; i < rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

ChainProduct gamma(const UnitalLGroup& group) { return group.unit_interval(); }

MvElement to_mv(const LGroupElement& g) {
  if (!g.in_unit_interval()) {
    throw Error(ErrorKind::kInvalidArgument,
                g.pretty() + " is outside the unit interval [0,u]");
  }
  return MvElement(gamma(g.group()),
                   std::vector<std::int64_t>(g.coords().begin(),
                                             g.coords().end()));
}

LGroupElement from_mv(const UnitalLGroup& group, const MvElement& e) {
  if (!(e.algebra() == gamma(group))) {
    throw Error(ErrorKind::kAlgebraMismatch,
                "element of " + e.algebra().str() + " is not in Gamma(G)");
  }
  return LGroupElement(group, std::vector<std::int64_t>(
                                  e.numerators().begin(),
                                  e.numerators().end()));
}

bool GoodSequence::absorbs() const {
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    if (!(oplus(entries[i], entries[i + 1]) == entries[i])) return false;
  }
  return true;
}

LGroupElement GoodSequence::sum(const UnitalLGroup& group) const {
  LGroupElement total = group.zero();
  for (const auto& x : entries) total = total + from_mv(group, x);
  return total;
}

GoodSequence GoodSequence::padded(std::size_t length,
                                  const ChainProduct& algebra) const {
  GoodSequence out = *this;
  while (out.entries.size() < length) out.entries.push_back(algebra.zero());
  return out;
}

GoodSequence good_sequence_of(const LGroupElement& h) {
  if (!h.is_nonnegative()) {
    throw Error(ErrorKind::kInvalidArgument,
                "good sequences need h >= 0, got " + h.pretty());
  }
  const UnitalLGroup& g = h.group();
  const LGroupElement u = g.unit_element();
  const LGroupElement zero = g.zero();
  GoodSequence seq;
  for (std::int64_t i = 0;; ++i) {
    LGroupElement x = meet(join(h - i * u, zero), u);
    if (x == zero) break;
    seq.entries.push_back(to_mv(x));
  }
  return seq;
}

ComparabilitySplit comparability_split(const LGroupElement& h,
                                       const LGroupElement& k) {
  require_same_group(h, k);
  const UnitalLGroup& g = h.group();
  const std::size_t m = g.rank();
  const auto u = g.unit();
  // Smallest s >= 0 with h + s u >= 0 and k + s u >= 0.
  std::int64_t shift = 0;
  for (std::size_t c = 0; c < m; ++c) {
    std::int64_t lo = std::min(h.coord(c), k.coord(c));
    if (lo < 0) shift = std::max(shift, (-lo + u[c] - 1) / u[c]);
  }
  // Entry i of the good sequence of a >= 0 at coordinate c is
  // ((a_c - i u_c) v 0) ^ u_c; both sequences are zero from index n on.
  auto entry = [&](std::int64_t a, std::int64_t i, std::size_t c) {
    return std::clamp<std::int64_t>(a - i * u[c], 0, u[c]);
  };
  std::int64_t n = 0;
  for (std::size_t c = 0; c < m; ++c) {
    std::int64_t top = std::max(h.coord(c), k.coord(c)) + shift * u[c];
    n = std::max(n, (top + u[c] - 1) / u[c]);
  }
  std::vector<SpectrumPoint> x1, x2;
  for (std::size_t c = 0; c < m; ++c) {
    const std::int64_t hc = h.coord(c) + shift * u[c];
    const std::int64_t kc = k.coord(c) + shift * u[c];
    bool in_x1 = true;
    for (std::int64_t i = 0; i < n && in_x1; ++i) {
      // x_i (.) not y_i in Gamma: max(0, x + (u - y) - u)
      in_x1 = std::max<std::int64_t>(0, entry(hc, i, c) - entry(kc, i, c)) ==
              0;
    }
    (in_x1 ? x1 : x2).push_back({c});
  }
  const ChainProduct& alg = g.unit_interval();
  MvElement e1 = zeroset_indicator(alg, x1);
  MvElement e2 = zeroset_indicator(alg, x2);
  return ComparabilitySplit{std::move(x1), std::move(x2), std::move(e1),
                            std::move(e2), shift};
}

ExtremalState::ExtremalState(UnitalLGroup group, SpectrumPoint point)
    : group_(std::move(group)), point_(point) {
  if (point_.index >= group_.rank()) {
    throw Error(ErrorKind::kInvalidArgument,
                "no extremal state at coordinate " +
                    std::to_string(point_.index));
  }
}

Rational ExtremalState::operator()(const LGroupElement& g) const {
  if (!(g.group() == group_)) {
    throw Error(ErrorKind::kAlgebraMismatch, "state applied to foreign group");
  }
  return Rational(g.coord(point_.index), group_.unit()[point_.index]);
}

Rational ExtremalState::image_generator() const {
  Rational gen(0);
  for (std::size_t j = 0; j < group_.rank(); ++j) {
    std::vector<std::int64_t> basis(group_.rank(), 0);
    basis[j] = 1;
    gen = gcd(gen, (*this)(group_.element(std::move(basis))));
  }
  return gen;
}

bool ExtremalState::is_discrete() const {
  // A subgroup of Q generated by finitely many elements is cyclic; check
  // that its generator is the expected 1/d_i.
  Rational gen = image_generator();
  return gen.sign() > 0 &&
         gen == Rational(1, group_.unit()[point_.index]);
}

ExtremalState extremal_state(const UnitalLGroup& group, SpectrumPoint point) {
  return ExtremalState(group, point);
}

bool good_sequence_order_test(const LGroupElement& h, const LGroupElement& k) {
  require_same_group(h, k);
  const ChainProduct alg = gamma(h.group());
  GoodSequence xs = good_sequence_of(h);
  GoodSequence ys = good_sequence_of(k);
  std::size_t n = std::max(xs.entries.size(), ys.entries.size());
  xs = xs.padded(n, alg);
  ys = ys.padded(n, alg);
  for (std::size_t c = 0; c < h.rank(); ++c) {
    bool entrywise = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (xs.entries[i].numerator(c) > ys.entries[i].numerator(c)) {
        entrywise = false;
      }
    }
    if ((h.coord(c) <= k.coord(c)) != entrywise) return false;
  }
  return true;
}

}  // namespace mvk
