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

#include "mvk/term.hpp"

#include <cctype>
#include <unordered_set>

#include "mvk/error.hpp"

namespace mvk {

Term Term::var() {
  static const auto x = std::make_shared<const Node>(Node{Kind::kVar, {}, {}});
  return Term(x);
}

Term Term::neg(const Term& t) {
  return Term(std::make_shared<const Node>(Node{Kind::kNeg, t.node_, {}}));
}

Term Term::oplus(const Term& a, const Term& b) {
  return Term(
      std::make_shared<const Node>(Node{Kind::kOplus, a.node_, b.node_}));
}

Term Term::odot(const Term& a, const Term& b) {
  return neg(oplus(neg(a), neg(b)));
}

Term Term::join(const Term& a, const Term& b) {
  return oplus(neg(oplus(neg(a), b)), b);
}

Term Term::meet(const Term& a, const Term& b) {
  return neg(join(neg(a), neg(b)));
}

Term Term::sigma() {
  Term x = var();
  return oplus(odot(x, oplus(x, x)), odot(x, x));
}

Term Term::left() const {
  if (!node_->left) {
    throw Error(ErrorKind::kInvalidArgument, "variable has no children");
  }
  return Term(node_->left);
}

Term Term::right() const {
  if (!node_->right) {
    throw Error(ErrorKind::kInvalidArgument, "term has no right child");
  }
  return Term(node_->right);
}

Term Term::substitute(const Term& x) const {
  std::unordered_map<const Node*, std::shared_ptr<const Node>> memo;
  auto rec = [&](auto& self, const std::shared_ptr<const Node>& n)
      -> std::shared_ptr<const Node> {
    if (n->kind == Kind::kVar) return x.node_;
    if (auto it = memo.find(n.get()); it != memo.end()) return it->second;
    auto l = self(self, n->left);
    auto r = n->right ? self(self, n->right) : nullptr;
    auto out = std::make_shared<const Node>(Node{n->kind, l, r});
    memo.emplace(n.get(), out);
    return out;
  };
  return Term(rec(rec, node_));
}

std::size_t Term::node_count() const {
  std::unordered_set<const Node*> seen;
  std::vector<const Node*> stack{node_.get()};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (!n || !seen.insert(n).second) continue;
    stack.push_back(n->left.get());
    stack.push_back(n->right.get());
  }
  return seen.size();
}

std::string Term::str() const {
  switch (kind()) {
    case Kind::kVar:
      return "X";
    case Kind::kNeg:
      return "~" + left().str();
    case Kind::kOplus:
      return "(" + left().str() + " + " + right().str() + ")";
  }
  return {};
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::kVar:
      return true;
    case Term::Kind::kNeg:
      return a.left() == b.left();
    case Term::Kind::kOplus:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term parse() {
    Term t = parse_join();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(pos_, what);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Term parse_join() {
    Term t = parse_meet();
    while (accept('|')) t = Term::join(t, parse_meet());
    return t;
  }

  Term parse_meet() {
    Term t = parse_sum();
    while (accept('&')) t = Term::meet(t, parse_sum());
    return t;
  }

  Term parse_sum() {
    Term t = parse_product();
    while (accept('+')) t = Term::oplus(t, parse_product());
    return t;
  }

  Term parse_product() {
    Term t = parse_unary();
    while (accept('*')) t = Term::odot(t, parse_unary());
    return t;
  }

  Term parse_unary() {
    if (accept('~') || accept('!')) return Term::neg(parse_unary());
    return parse_atom();
  }

  Term parse_atom() {
    skip_ws();
    if (accept('(')) {
      Term t = parse_join();
      expect(')');
      return t;
    }
    if (accept('X') || accept('x')) return Term::var();
    if (text_.substr(pos_, 5) == "sigma") {
      pos_ += 5;
      expect('(');
      Term inner = parse_join();
      expect(')');
      return Term::sigma().substitute(inner);
    }
    fail(pos_ < text_.size() ? "unexpected character" : "unexpected end");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Term Term::parse(std::string_view text) { return TermParser(text).parse(); }

MvElement apply_term(const Term& t, const MvElement& a) {
  return t.evaluate(
      a, [](const MvElement& e) { return neg(e); },
      [](const MvElement& l, const MvElement& r) { return oplus(l, r); });
}

Rational apply_term(const Term& t, const Rational& x) {
  if (x < Rational(0) || Rational(1) < x) {
    throw Error(ErrorKind::kInvalidArgument,
                x.str() + " is outside the standard MV-algebra [0,1]");
  }
  return t.evaluate(
      x, [](const Rational& v) { return standard::neg(v); },
      [](const Rational& l, const Rational& r) {
        return standard::oplus(l, r);
      });
}

}  // namespace mvk
