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

#include "mvk/mcnaughton.hpp"

#include <algorithm>

#include "mvk/error.hpp"

namespace mvk {
namespace {

bool collinear(const PLPoint& a, const PLPoint& b, const PLPoint& c) {
  return (b.y - a.y) * (c.x - a.x) == (c.y - a.y) * (b.x - a.x);
}

std::vector<Rational> merged_abscissae(const PLFunction& f,
                                       const PLFunction& g) {
  std::vector<Rational> xs;
  xs.reserve(f.points().size() + g.points().size());
  for (const auto& p : f.points()) xs.push_back(p.x);
  for (const auto& p : g.points()) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

void sort_unique(std::vector<Rational>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

// Adds the zeros of the affine function h strictly inside each interval of
// `xs`. `h` is affine between consecutive entries.
template <typename H>
void add_sign_changes(std::vector<Rational>& xs, H&& h) {
  std::vector<Rational> roots;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const Rational& a = xs[i];
    const Rational& b = xs[i + 1];
    Rational ha = h(a);
    Rational hb = h(b);
    if (ha.sign() * hb.sign() < 0) {
      roots.push_back(a + (b - a) * ha / (ha - hb));
    }
  }
  xs.insert(xs.end(), roots.begin(), roots.end());
  sort_unique(xs);
}

template <typename Op, typename H>
PLFunction pointwise(const PLFunction& f, const PLFunction& g, Op op, H h) {
  std::vector<Rational> xs = merged_abscissae(f, g);
  add_sign_changes(xs, [&](const Rational& x) { return h(f(x), g(x)); });
  std::vector<PLPoint> pts;
  pts.reserve(xs.size());
  for (const auto& x : xs) pts.push_back({x, op(f(x), g(x))});
  PLFunction out = PLFunction::rational(std::move(pts));
  if (f.is_mcnaughton() && g.is_mcnaughton() && !out.is_mcnaughton()) {
    throw InvariantError("integer coefficients",
                         "pointwise operation left the McNaughton class");
  }
  return out;
}

Rational sum_minus_one(const Rational& a, const Rational& b) {
  return a + b - Rational(1);
}
Rational difference(const Rational& a, const Rational& b) { return a - b; }

}  // namespace

PLFunction::PLFunction(std::vector<PLPoint> points)
    : PLFunction(std::move(points), true) {}

PLFunction PLFunction::rational(std::vector<PLPoint> points) {
  return PLFunction(std::move(points), false);
}

PLFunction::PLFunction(std::vector<PLPoint> points, bool require_integer) {
  if (points.size() < 2) {
    throw InvariantError("breakpoints", "need at least the endpoints 0 and 1");
  }
  if (points.front().x != Rational(0) || points.back().x != Rational(1)) {
    throw InvariantError("breakpoints", "abscissae must start at 0, end at 1");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i && !(points[i - 1].x < points[i].x)) {
      throw InvariantError("breakpoints",
                           "abscissae must be strictly increasing");
    }
    if (points[i].y < Rational(0) || Rational(1) < points[i].y) {
      throw InvariantError("range in [0,1]",
                           "ordinate " + points[i].y.str() + " at x=" +
                               points[i].x.str());
    }
  }
  for (auto& p : points) {
    while (points_.size() >= 2 &&
           collinear(points_[points_.size() - 2], points_.back(), p)) {
      points_.pop_back();
    }
    points_.push_back(std::move(p));
  }
  mcnaughton_ = true;
  for (const auto& piece : pieces()) {
    if (!piece.slope.is_integer() || !piece.intercept.is_integer()) {
      mcnaughton_ = false;
      if (require_integer) {
        throw InvariantError("integer coefficients",
                             "piece on [" + piece.x0.str() + "," +
                                 piece.x1.str() + "] has slope " +
                                 piece.slope.str() + ", intercept " +
                                 piece.intercept.str());
      }
    }
  }
}

PLFunction PLFunction::identity() {
  return PLFunction({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}});
}

PLFunction PLFunction::constant(const Rational& c) {
  return rational({{Rational(0), c}, {Rational(1), c}});
}

std::vector<AffinePiece> PLFunction::pieces() const {
  std::vector<AffinePiece> out;
  out.reserve(points_.size() - 1);
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    const auto& a = points_[i];
    const auto& b = points_[i + 1];
    Rational slope = (b.y - a.y) / (b.x - a.x);
    out.push_back({a.x, b.x, slope, a.y - slope * a.x});
  }
  return out;
}

Rational PLFunction::operator()(const Rational& x) const {
  if (x < Rational(0) || Rational(1) < x) {
    throw Error(ErrorKind::kInvalidArgument,
                "x = " + x.str() + " is outside [0,1]");
  }
  auto it = std::lower_bound(
      points_.begin(), points_.end(), x,
      [](const PLPoint& p, const Rational& v) { return p.x < v; });
  if (it->x == x) return it->y;
  const PLPoint& b = *it;
  const PLPoint& a = *(it - 1);
  return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

Rational pl_eval(const PLFunction& f, const Rational& x) { return f(x); }

PLFunction pl_neg(const PLFunction& f) {
  std::vector<PLPoint> pts;
  pts.reserve(f.points().size());
  for (const auto& p : f.points()) pts.push_back({p.x, Rational(1) - p.y});
  return PLFunction::rational(std::move(pts));
}

PLFunction pl_oplus(const PLFunction& f, const PLFunction& g) {
  return pointwise(f, g, standard::oplus, sum_minus_one);
}

PLFunction pl_odot(const PLFunction& f, const PLFunction& g) {
  return pointwise(f, g, standard::odot, sum_minus_one);
}

PLFunction pl_join(const PLFunction& f, const PLFunction& g) {
  return pointwise(
      f, g, [](const Rational& a, const Rational& b) { return max(a, b); },
      difference);
}

PLFunction pl_meet(const PLFunction& f, const PLFunction& g) {
  return pointwise(
      f, g, [](const Rational& a, const Rational& b) { return min(a, b); },
      difference);
}

PLFunction compose(const PLFunction& g, const PLFunction& f) {
  std::vector<Rational> xs;
  for (const auto& p : f.points()) xs.push_back(p.x);
  const auto& fp = f.points();
  for (std::size_t i = 0; i + 1 < fp.size(); ++i) {
    const Rational& fa = fp[i].y;
    const Rational& fb = fp[i + 1].y;
    if (fa == fb) continue;
    Rational lo = min(fa, fb);
    Rational hi = max(fa, fb);
    for (const auto& q : g.points()) {
      if (lo < q.x && q.x < hi) {
        xs.push_back(fp[i].x +
                     (fp[i + 1].x - fp[i].x) * (q.x - fa) / (fb - fa));
      }
    }
  }
  sort_unique(xs);
  std::vector<PLPoint> pts;
  pts.reserve(xs.size());
  for (const auto& x : xs) pts.push_back({x, g(f(x))});
  PLFunction out = PLFunction::rational(std::move(pts));
  if (f.is_mcnaughton() && g.is_mcnaughton() && !out.is_mcnaughton()) {
    throw InvariantError("integer coefficients",
                         "composition left the McNaughton class");
  }
  return out;
}

PLFunction apply_term_pl(const Term& t, const PLFunction& f) {
  return t.evaluate(f, pl_neg, pl_oplus);
}

PLFunction sigma_star() {
  static const PLFunction s = apply_term_pl(Term::sigma(),
                                            PLFunction::identity());
  return s;
}

bool pl_below_pointwise(const PLFunction& f, const PLFunction& g) {
  std::vector<Rational> xs = merged_abscissae(f, g);
  const Rational half(1, 2);
  add_sign_changes(xs, [&](const Rational& x) { return g(x) - half; });
  add_sign_changes(xs, [&](const Rational& x) { return f(x) - g(x); });
  auto holds_at = [&](const Rational& x) {
    Rational gx = g(x);
    Rational fx = f(x);
    if (gx < half && gx < fx) return false;
    if (half < gx && fx < gx) return false;
    return true;
  };
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!holds_at(xs[i])) return false;
    if (i + 1 < xs.size() && !holds_at((xs[i] + xs[i + 1]) / Rational(2))) {
      return false;
    }
  }
  return true;
}

std::vector<std::pair<Rational, Rational>> fixpoint_set(const PLFunction& f) {
  std::vector<std::pair<Rational, Rational>> out;
  auto push = [&](const Rational& a, const Rational& b) {
    if (!out.empty() && !(out.back().second < a)) {
      out.back().second = max(out.back().second, b);
      return;
    }
    out.emplace_back(a, b);
  };
  for (const auto& piece : f.pieces()) {
    if (piece.slope == Rational(1)) {
      if (piece.intercept.sign() == 0) push(piece.x0, piece.x1);
      continue;
    }
    Rational x = piece.intercept / (Rational(1) - piece.slope);
    if (!(x < piece.x0) && !(piece.x1 < x)) push(x, x);
  }
  return out;
}

PLSigmaTrace iterate_sigma(const PLFunction& f, std::size_t max_steps) {
  PLSigmaTrace trace;
  trace.steps.push_back(f);
  const Term sigma = Term::sigma();
  for (std::size_t k = 0; k < max_steps; ++k) {
    PLFunction next = apply_term_pl(sigma, trace.steps.back());
    if (next == trace.steps.back()) {
      trace.stabilized = true;
      return trace;
    }
    trace.steps.push_back(std::move(next));
  }
  trace.stabilized = apply_term_pl(sigma, trace.steps.back()) ==
                     trace.steps.back();
  return trace;
}

}  // namespace mvk
