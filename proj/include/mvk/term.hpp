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

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>

#include "mvk/mv.hpp"
#include "mvk/rational.hpp"

namespace mvk {

/// One-variable MV-term over {X, not, (+)}.
///
/// The derived connectives (.), join and meet are desugared when the term is
/// built, so evaluation only ever sees the three primitive constructors.
/// Subterms are shared, which keeps iterated substitutions such as
/// sigma(sigma(...)) linear in size.
class Term {
 public:
  enum class Kind { kVar, kNeg, kOplus };

  static Term var();
  static Term neg(const Term& t);
  static Term oplus(const Term& a, const Term& b);
  static Term odot(const Term& a, const Term& b);
  static Term join(const Term& a, const Term& b);
  static Term meet(const Term& a, const Term& b);

  /// sigma = (X (.) (X (+) X)) (+) (X (.) X)
  static Term sigma();

  /// Grammar (loosest first): '|' join, '&' meet, '+' oplus, '*' odot,
  /// prefix '~' negation, atoms 'X', '(' expr ')', 'sigma(' expr ')'.
  /// Throws ParseError with the offending byte offset.
  static Term parse(std::string_view text);

  /// Replaces every occurrence of X by `x`.
  Term substitute(const Term& x) const;

  Kind kind() const { return node_->kind; }
  Term left() const;
  Term right() const;
  /// Number of distinct shared nodes.
  std::size_t node_count() const;

  /// Fully desugared rendering in the parse grammar: X, ~t, (a + b).
  std::string str() const;

  friend bool operator==(const Term& a, const Term& b);

  /// Structural evaluation a_X = a, a_{~t} = not a_t,
  /// a_{t1 + t2} = a_{t1} (+) a_{t2}, memoized over shared nodes.
  template <typename T, typename NegFn, typename OplusFn>
  T evaluate(const T& x, NegFn&& neg_fn, OplusFn&& oplus_fn) const {
    std::unordered_map<const Node*, T> memo;
    return eval_node<T>(node_.get(), x, neg_fn, oplus_fn, memo);
  }

 private:
  struct Node {
    Kind kind;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  template <typename T, typename NegFn, typename OplusFn>
  static T eval_node(const Node* n, const T& x, NegFn& neg_fn,
                     OplusFn& oplus_fn,
                     std::unordered_map<const Node*, T>& memo) {
    if (n->kind == Kind::kVar) return x;
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    T result = n->kind == Kind::kNeg
                   ? neg_fn(eval_node<T>(n->left.get(), x, neg_fn, oplus_fn,
                                         memo))
                   : oplus_fn(eval_node<T>(n->left.get(), x, neg_fn,
                                           oplus_fn, memo),
                              eval_node<T>(n->right.get(), x, neg_fn,
                                           oplus_fn, memo));
    memo.emplace(n, result);
    return result;
  }

  std::shared_ptr<const Node> node_;
};

/// a_tau inside the algebra of `a`.
MvElement apply_term(const Term& t, const MvElement& a);
/// tau evaluated in the standard MV-algebra [0,1]; `x` must lie in [0,1].
Rational apply_term(const Term& t, const Rational& x);

}  // namespace mvk
