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

#include "mvk/spectra.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "mvk/error.hpp"

namespace mvk {
namespace {

void check_point(const ChainProduct& alg, SpectrumPoint p) {
  if (p.index >= alg.rank()) {
    throw Error(ErrorKind::kInvalidArgument,
                "spectrum point " + std::to_string(p.index) +
                    " out of range for " + alg.str());
  }
}

}  // namespace

Ideal::Ideal(ChainProduct algebra, std::vector<bool> vanishing)
    : alg_(std::move(algebra)), vanishing_(std::move(vanishing)) {
  if (vanishing_.size() != alg_.rank()) {
    throw InvariantError("ideal shape", "vanishing set has wrong length");
  }
}

std::vector<SpectrumPoint> Ideal::vanishing_set() const {
  std::vector<SpectrumPoint> out;
  for (std::size_t i = 0; i < vanishing_.size(); ++i) {
    if (vanishing_[i]) out.push_back({i});
  }
  return out;
}

bool Ideal::contains(const MvElement& e) const {
  if (!(e.algebra() == alg_)) {
    throw Error(ErrorKind::kAlgebraMismatch, "element not in ideal's algebra");
  }
  for (std::size_t i = 0; i < vanishing_.size(); ++i) {
    if (vanishing_[i] && e.numerator(i) != 0) return false;
  }
  return true;
}

bool Ideal::is_proper() const {
  return std::find(vanishing_.begin(), vanishing_.end(), true) !=
         vanishing_.end();
}

ChainProduct Ideal::quotient_algebra() const {
  std::vector<std::int64_t> dens;
  for (std::size_t i = 0; i < vanishing_.size(); ++i) {
    if (vanishing_[i]) dens.push_back(alg_.denominator(i));
  }
  if (dens.empty()) {
    throw Error(ErrorKind::kInvalidArgument,
                "quotient by the improper ideal is trivial");
  }
  return ChainProduct(std::move(dens));
}

MvElement Ideal::project(const MvElement& e) const {
  ChainProduct q = quotient_algebra();
  std::vector<std::int64_t> nums;
  for (std::size_t i = 0; i < vanishing_.size(); ++i) {
    if (vanishing_[i]) nums.push_back(e.numerator(i));
  }
  return MvElement(q, std::move(nums));
}

std::vector<Ideal> enumerate_ideals(const ChainProduct& algebra) {
  if (algebra.rank() > 24) {
    throw Error(ErrorKind::kInvalidArgument,
                "too many coordinates to enumerate ideals");
  }
  std::vector<Ideal> out;
  std::uint64_t count = std::uint64_t{1} << algebra.rank();
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<bool> z(algebra.rank());
    for (std::size_t i = 0; i < algebra.rank(); ++i) z[i] = (mask >> i) & 1;
    out.emplace_back(algebra, std::move(z));
  }
  return out;
}

bool is_prime(const Ideal& ideal) {
  return ideal.vanishing_set().size() == 1;
}

Rational quotient(const MvElement& a, SpectrumPoint p) {
  check_point(a.algebra(), p);
  return a.value(p.index);
}

bool below_order(const MvElement& x, const MvElement& y) {
  require_same_algebra(x, y);
  for (std::size_t i = 0; i < y.rank(); ++i) {
    // compare y_i against 1 - y_i, i.e. 2k against d
    std::int64_t twice = 2 * y.numerator(i);
    std::int64_t d = y.algebra().denominator(i);
    if (twice < d && x.numerator(i) > y.numerator(i)) return false;
    if (twice > d && x.numerator(i) < y.numerator(i)) return false;
  }
  return true;
}

bool is_below_minimal(const MvElement& x) {
  // The order is a product of per-coordinate conditions, so some y != x
  // lies below x iff one coordinate admits a second value.
  for (std::size_t i = 0; i < x.rank(); ++i) {
    std::int64_t k = x.numerator(i);
    std::int64_t d = x.algebra().denominator(i);
    if (2 * k < d && k > 0) return false;
    if (2 * k > d && k < d) return false;
    if (2 * k == d) return false;  // d >= 2 here, any other value works
  }
  return true;
}

MvElement zeroset_indicator(const ChainProduct& algebra,
                            std::span<const SpectrumPoint> w) {
  std::vector<std::int64_t> nums(algebra.denominators().begin(),
                                 algebra.denominators().end());
  for (auto p : w) {
    check_point(algebra, p);
    nums[p.index] = 0;
  }
  return algebra.from_numerators(std::move(nums));
}

MvElement level_set_indicator(const MvElement& a, const Rational& rho) {
  if (rho < Rational(0) || Rational(1) < rho) {
    throw Error(ErrorKind::kInvalidArgument,
                "level " + rho.str() + " is outside [0,1]");
  }
  std::vector<SpectrumPoint> w;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (a.value(i) == rho) w.push_back({i});
  }
  return zeroset_indicator(a.algebra(), w);
}

MvElement separating_element(const ChainProduct& algebra, SpectrumPoint p,
                             SpectrumPoint q) {
  check_point(algebra, p);
  check_point(algebra, q);
  if (p == q) {
    throw Error(ErrorKind::kInvalidArgument,
                "cannot separate a spectrum point from itself");
  }
  SpectrumPoint w[] = {p};
  return zeroset_indicator(algebra, w);
}

std::vector<MvElement> generated_subalgebra(const ChainProduct& algebra,
                                            std::span<const MvElement> gens) {
  using Nums = std::vector<std::int64_t>;
  const std::size_t m = algebra.rank();
  for (const auto& g : gens) {
    if (!(g.algebra() == algebra)) {
      throw Error(ErrorKind::kAlgebraMismatch,
                  "generator " + g.pretty() + " is not in " + algebra.str());
    }
  }
  // Members are kept as flat numerator rows. Membership is a bitmap over
  // carrier indices when the carrier is small enough, a tree set otherwise.
  constexpr std::uint64_t kBitmapLimit = std::uint64_t{1} << 24;
  const auto carrier = algebra.carrier_size();
  const bool bitmap = carrier && *carrier <= kBitmapLimit;
  std::vector<bool> seen_bits(bitmap ? *carrier : 0);
  std::set<Nums> seen_set;
  std::vector<std::uint64_t> stride(m, 1);
  for (std::size_t c = m; c-- > 1;) {
    stride[c - 1] = stride[c] * static_cast<std::uint64_t>(
                                    algebra.denominator(c) + 1);
  }
  Nums rows;
  std::size_t count = 0;
  Nums tmp(m);
  auto add = [&] {
    if (bitmap) {
      std::uint64_t idx = 0;
      for (std::size_t c = 0; c < m; ++c) {
        idx += static_cast<std::uint64_t>(tmp[c]) * stride[c];
      }
      if (seen_bits[idx]) return;
      seen_bits[idx] = true;
    } else if (!seen_set.insert(tmp).second) {
      return;
    }
    rows.insert(rows.end(), tmp.begin(), tmp.end());
    ++count;
  };
  std::fill(tmp.begin(), tmp.end(), 0);
  add();
  for (const auto& g : gens) {
    std::copy(g.numerators().begin(), g.numerators().end(), tmp.begin());
    add();
  }
  // Saturate: each new member is combined with every earlier one.
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t c = 0; c < m; ++c) {
      tmp[c] = algebra.denominator(c) - rows[i * m + c];
    }
    add();
    for (std::size_t j = 0; j <= i; ++j) {
      for (std::size_t c = 0; c < m; ++c) {
        tmp[c] = std::min(algebra.denominator(c),
                          rows[i * m + c] + rows[j * m + c]);
      }
      add();
    }
  }
  std::vector<Nums> sorted(count);
  for (std::size_t i = 0; i < count; ++i) {
    sorted[i].assign(rows.begin() + i * m, rows.begin() + (i + 1) * m);
  }
  std::sort(sorted.begin(), sorted.end());
  std::vector<MvElement> out;
  out.reserve(count);
  for (auto& nums : sorted) out.push_back(algebra.from_numerators(nums));
  return out;
}

}  // namespace mvk
