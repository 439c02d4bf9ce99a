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

#include "mvk/verifier.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mvk/centripetal.hpp"
#include "mvk/document.hpp"
#include "mvk/error.hpp"
#include "mvk/lgroup.hpp"
#include "mvk/mcnaughton.hpp"
#include "mvk/spectra.hpp"
#include "mvk/term.hpp"

namespace mvk::verify {
namespace {

using Clock = std::chrono::steady_clock;
using Index = std::uint32_t;

std::vector<std::string> docs(std::initializer_list<MvElement> elems) {
  std::vector<std::string> out;
  for (const auto& e : elems) out.push_back(to_document(e));
  return out;
}

std::vector<std::string> docs(std::initializer_list<LGroupElement> elems) {
  std::vector<std::string> out;
  for (const auto& e : elems) out.push_back(to_document(e));
  return out;
}

// Accumulates one suite run. The first recorded failure wins; suites stop
// scanning once `failed()` is true, so the reported counterexample is the
// first in enumeration order.
class Run {
 public:
  explicit Run(std::string name) : start_(Clock::now()) {
    report_.suite = std::move(name);
  }

  void count(std::uint64_t n = 1) { report_.instances += n; }
  void note(std::string s) { report_.notes.push_back(std::move(s)); }
  bool failed() const { return report_.counterexample.has_value(); }

  void fail(std::string property, std::vector<std::string> witnesses,
            std::string detail, std::function<bool()> confirm) {
    if (failed()) return;
    report_.counterexample =
        Counterexample{std::move(property), std::move(witnesses),
                       std::move(detail)};
    report_.confirm = std::move(confirm);
  }

  SuiteReport finish() {
    report_.seconds =
        std::chrono::duration<double>(Clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  SuiteReport report_;
  Clock::time_point start_;
};

// Operation tables of one algebra under a set of primitives, indexed by
// carrier enumeration order.
struct Tables {
  std::vector<MvElement> elems;
  std::vector<Index> neg;
  std::vector<Index> op;  // n * n
  Index zero = 0;
  Index one = 0;

  std::size_t size() const { return elems.size(); }
  Index oplus(Index a, Index b) const { return op[a * size() + b]; }
  Index odot(Index a, Index b) const { return neg[oplus(neg[a], neg[b])]; }
  Index join(Index a, Index b) const {
    return oplus(neg[oplus(neg[a], b)], b);
  }
  Index meet(Index a, Index b) const { return neg[join(neg[a], neg[b])]; }
  bool leq(Index a, Index b) const { return oplus(neg[a], b) == one; }
  Index sigma(Index x) const {
    return oplus(odot(x, oplus(x, x)), odot(x, x));
  }
};

Tables build_tables(const ChainProduct& alg, const Primitives& ops) {
  Tables t;
  t.elems = alg.carrier();
  const std::size_t n = t.elems.size();
  t.neg.resize(n);
  t.op.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    t.neg[a] = static_cast<Index>(alg.index_of(ops.neg(t.elems[a])));
    for (std::size_t b = 0; b < n; ++b) {
      t.op[a * n + b] =
          static_cast<Index>(alg.index_of(ops.oplus(t.elems[a], t.elems[b])));
    }
  }
  t.zero = static_cast<Index>(alg.index_of(alg.zero()));
  t.one = static_cast<Index>(alg.index_of(alg.one()));
  return t;
}

// Row-major bit matrix of the below relation: row x holds {y : x below y}.
struct Relation {
  std::size_t n = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> bits;

  bool test(std::size_t x, std::size_t y) const {
    return (bits[x * words + y / 64] >> (y % 64)) & 1;
  }
};

Relation below_relation(const std::vector<MvElement>& elems,
                        const Primitives& ops) {
  Relation r;
  r.n = elems.size();
  r.words = (r.n + 63) / 64;
  r.bits.assign(r.n * r.words, 0);
  for (std::size_t x = 0; x < r.n; ++x) {
    for (std::size_t y = 0; y < r.n; ++y) {
      if (ops.below(elems[x], elems[y])) {
        r.bits[x * r.words + y / 64] |= std::uint64_t{1} << (y % 64);
      }
    }
  }
  return r;
}

MvElement sigma_via(const Primitives& ops, const MvElement& x) {
  static const Term sigma = Term::sigma();
  return sigma.evaluate(x, ops.neg, ops.oplus);
}

bool all_coords_in(const MvElement& e, bool allow_half) {
  for (std::size_t i = 0; i < e.rank(); ++i) {
    std::int64_t k = e.numerator(i);
    std::int64_t d = e.algebra().denominator(i);
    if (k == 0 || k == d) continue;
    if (allow_half && 2 * k == d) continue;
    return false;
  }
  return true;
}

std::uint64_t half_mask(const MvElement& e) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < e.rank(); ++i) {
    if (2 * e.numerator(i) == e.algebra().denominator(i)) {
      mask |= std::uint64_t{1} << i;
    }
  }
  return mask;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void enumerate_rec(const SweepBounds& bounds, std::vector<std::int64_t>& cur,
                   std::uint64_t carrier, std::vector<ChainProduct>& out) {
  if (!cur.empty()) out.emplace_back(cur);
  if (bounds.max_factors && cur.size() >= bounds.max_factors) return;
  std::int64_t lo = cur.empty() ? 1 : cur.back();
  for (std::int64_t d = lo;; ++d) {
    if (bounds.max_denominator && d > bounds.max_denominator) break;
    std::uint64_t next = carrier * static_cast<std::uint64_t>(d + 1);
    if (next > bounds.max_carrier) break;
    cur.push_back(d);
    enumerate_rec(bounds, cur, next, out);
    cur.pop_back();
  }
}

std::vector<ChainProduct> with_chains(std::vector<ChainProduct> algs,
                                      std::int64_t chain_max) {
  for (std::int64_t d = 1; d <= chain_max; ++d) {
    ChainProduct c({d});
    if (std::find(algs.begin(), algs.end(), c) == algs.end()) {
      algs.push_back(c);
    }
  }
  return algs;
}

std::string count_note(std::size_t algebras, const char* what,
                       std::uint64_t n) {
  return std::to_string(algebras) + " algebras, " + std::to_string(n) + " " +
         what;
}

}  // namespace

Primitives Primitives::standard() {
  return Primitives{
      [](const MvElement& a, const MvElement& b) { return mvk::oplus(a, b); },
      [](const MvElement& a) { return mvk::neg(a); },
      [](const MvElement& x, const MvElement& y) {
        return below_order(x, y);
      }};
}

std::vector<ChainProduct> enumerate_algebras(const SweepBounds& bounds) {
  std::vector<ChainProduct> out;
  if (!bounds.only.empty()) {
    for (const auto& dens : bounds.only) out.emplace_back(dens);
    return out;
  }
  std::vector<std::int64_t> cur;
  enumerate_rec(bounds, cur, 1, out);
  std::stable_sort(out.begin(), out.end(),
                   [](const ChainProduct& a, const ChainProduct& b) {
                     auto ca = *a.carrier_size();
                     auto cb = *b.carrier_size();
                     if (ca != cb) return ca < cb;
                     return std::lexicographical_compare(
                         a.denominators().begin(), a.denominators().end(),
                         b.denominators().begin(), b.denominators().end());
                   });
  return out;
}

std::string SuiteReport::text() const {
  std::ostringstream os;
  os << (passed() ? "[PASS] " : "[FAIL] ") << suite << ": " << instances
     << " instances, ";
  os.setf(std::ios::fixed);
  os.precision(3);
  os << seconds << " s\n";
  for (const auto& n : notes) os << "  note: " << n << "\n";
  if (counterexample) {
    os << "  counterexample (" << counterexample->property << ")\n";
    for (const auto& w : counterexample->witnesses) os << "    " << w << "\n";
    if (!counterexample->detail.empty()) {
      os << "  detail: " << counterexample->detail << "\n";
    }
  }
  return os.str();
}

std::string SuiteReport::json() const {
  nlohmann::ordered_json j;
  j["kind"] = "suite_report";
  j["suite"] = suite;
  j["passed"] = passed();
  j["instances"] = instances;
  j["seconds"] = seconds;
  j["notes"] = notes;
  if (counterexample) {
    nlohmann::ordered_json c;
    c["property"] = counterexample->property;
    nlohmann::ordered_json ws = nlohmann::ordered_json::array();
    for (const auto& w : counterexample->witnesses) {
      ws.push_back(nlohmann::ordered_json::parse(w));
    }
    c["witnesses"] = std::move(ws);
    c["detail"] = counterexample->detail;
    j["counterexample"] = std::move(c);
  }
  return j.dump();
}

SuiteReport verify_mv_axioms(const SweepBounds& bounds,
                             const Primitives& ops) {
  Run run("mv-axioms");
  auto algs = enumerate_algebras(bounds);
  for (const auto& alg : algs) {
    const Tables t = build_tables(alg, ops);
    const std::size_t n = t.size();
    const auto& e = t.elems;
    const Index top = t.neg[t.zero];
    const MvElement zero = alg.zero();
    for (Index x = 0; x < n && !run.failed(); ++x) {
      if (t.neg[t.neg[x]] != x) {
        run.fail("not not x = x", docs({e[x]}), "",
                 [ops, a = e[x]] { return !(ops.neg(ops.neg(a)) == a); });
      } else if (t.oplus(x, t.zero) != x) {
        run.fail("x + 0 = x", docs({e[x]}), "", [ops, a = e[x], zero] {
          return !(ops.oplus(a, zero) == a);
        });
      } else if (t.oplus(top, x) != top) {
        run.fail("not 0 + x = not 0", docs({e[x]}), "", [ops, a = e[x], zero] {
          return !(ops.oplus(ops.neg(zero), a) == ops.neg(zero));
        });
      }
    }
    for (Index x = 0; x < n && !run.failed(); ++x) {
      for (Index y = 0; y < n && !run.failed(); ++y) {
        if (t.oplus(x, y) != t.oplus(y, x)) {
          run.fail("x + y = y + x", docs({e[x], e[y]}), "",
                   [ops, a = e[x], b = e[y]] {
                     return !(ops.oplus(a, b) == ops.oplus(b, a));
                   });
        } else if (t.oplus(t.neg[t.oplus(t.neg[x], y)], y) !=
                   t.oplus(t.neg[t.oplus(t.neg[y], x)], x)) {
          run.fail("not(not x + y) + y = not(not y + x) + x",
                   docs({e[x], e[y]}), "", [ops, a = e[x], b = e[y]] {
                     auto l = ops.oplus(ops.neg(ops.oplus(ops.neg(a), b)), b);
                     auto r = ops.oplus(ops.neg(ops.oplus(ops.neg(b), a)), a);
                     return !(l == r);
                   });
        }
      }
    }
    for (Index x = 0; x < n && !run.failed(); ++x) {
      for (Index y = 0; y < n && !run.failed(); ++y) {
        const Index xy = t.oplus(x, y);
        for (Index z = 0; z < n; ++z) {
          if (t.oplus(xy, z) != t.oplus(x, t.oplus(y, z))) {
            run.fail("(x + y) + z = x + (y + z)", docs({e[x], e[y], e[z]}),
                     "", [ops, a = e[x], b = e[y], c = e[z]] {
                       return !(ops.oplus(ops.oplus(a, b), c) ==
                                ops.oplus(a, ops.oplus(b, c)));
                     });
            break;
          }
        }
      }
    }
    run.count(n + n * n + n * n * n);
    if (run.failed()) break;
  }
  run.note(std::to_string(algs.size()) + " algebras");
  return run.finish();
}

SuiteReport verify_partial_order(const SweepBounds& bounds,
                                 const Primitives& ops) {
  Run run("partial-order");
  auto algs = enumerate_algebras(bounds);
  std::uint64_t pairs = 0;
  for (const auto& alg : algs) {
    const auto elems = alg.carrier();
    const std::size_t n = elems.size();
    const Relation r = below_relation(elems, ops);
    for (std::size_t x = 0; x < n && !run.failed(); ++x) {
      if (!r.test(x, x)) {
        run.fail("reflexivity", docs({elems[x]}), "",
                 [ops, a = elems[x]] { return !ops.below(a, a); });
      }
    }
    for (std::size_t x = 0; x < n && !run.failed(); ++x) {
      for (std::size_t y = x + 1; y < n && !run.failed(); ++y) {
        if (r.test(x, y) && r.test(y, x)) {
          run.fail("antisymmetry", docs({elems[x], elems[y]}),
                   "x below y and y below x with x != y",
                   [ops, a = elems[x], b = elems[y]] {
                     return ops.below(a, b) && ops.below(b, a) && !(a == b);
                   });
        }
      }
    }
    // x below y and y below z imply x below z: row(y) must be inside row(x).
    for (std::size_t x = 0; x < n && !run.failed(); ++x) {
      for (std::size_t y = 0; y < n && !run.failed(); ++y) {
        if (!r.test(x, y)) continue;
        for (std::size_t w = 0; w < r.words; ++w) {
          std::uint64_t missing =
              r.bits[y * r.words + w] & ~r.bits[x * r.words + w];
          if (missing) {
            std::size_t z = w * 64 + std::countr_zero(missing);
            run.fail("transitivity", docs({elems[x], elems[y], elems[z]}),
                     "x below y, y below z, but not x below z",
                     [ops, a = elems[x], b = elems[y], c = elems[z]] {
                       return ops.below(a, b) && ops.below(b, c) &&
                              !ops.below(a, c);
                     });
            break;
          }
        }
      }
    }
    pairs += n * n;
    run.count(n * n * n);
    if (run.failed()) break;
  }
  run.note(count_note(algs.size(), "pairs", pairs));
  return run.finish();
}

SuiteReport verify_centrality_equivalences(const SweepBounds& bounds,
                                           const Primitives& ops) {
  Run run("centrality");
  auto algs = enumerate_algebras(bounds);
  std::uint64_t central = 0;
  for (const auto& alg : algs) {
    const Tables t = build_tables(alg, ops);
    const auto& e = t.elems;
    const std::size_t n = t.size();
    const Relation r = below_relation(e, ops);
    for (Index x = 0; x < n && !run.failed(); ++x) {
      bool boolean = t.oplus(x, x) == x;
      bool characteristic = t.meet(x, t.neg[x]) == t.zero;
      bool minimal = true;
      for (std::size_t y = 0; y < n && minimal; ++y) {
        if (y != x && r.test(y, x)) minimal = false;
      }
      bool two_valued = all_coords_in(e[x], false);
      bool core_boolean = is_boolean(e[x]);
      bool core_char = is_characteristic(e[x]);
      bool core_minimal = is_below_minimal(e[x]);
      bool agree = boolean == characteristic && boolean == minimal &&
                   boolean == two_valued && boolean == core_boolean &&
                   boolean == core_char && boolean == core_minimal;
      if (!agree) {
        std::string detail = "x+x=x: " + yes_no(boolean) +
                             ", x^~x=0: " + yes_no(characteristic) +
                             ", below-minimal: " + yes_no(minimal) +
                             ", {0,1}-valued: " + yes_no(two_valued);
        run.fail("boolean <=> characteristic <=> below-minimal <=> "
                 "{0,1}-valued",
                 docs({e[x]}), detail, [ops, a = e[x], alg] {
                   bool b = ops.oplus(a, a) == a;
                   auto na = ops.neg(a);
                   auto j = ops.oplus(ops.neg(ops.oplus(ops.neg(na), a)), a);
                   // meet(a, not a) = not join(not a, a)
                   bool c = ops.neg(j) == alg.zero();
                   bool m = true;
                   for (const auto& y : alg.carrier()) {
                     if (!(y == a) && ops.below(y, a)) m = false;
                   }
                   bool v = all_coords_in(a, false);
                   return !(b == c && b == m && b == v);
                 });
      }
      central += two_valued;
    }
    run.count(n);
    if (run.failed()) break;
  }
  run.note(count_note(algs.size(), "central elements", central));
  return run.finish();
}

SuiteReport verify_sigma_props(const SweepBounds& bounds,
                               std::int64_t chain_max_denominator,
                               const Primitives& ops) {
  Run run("sigma-props");
  auto algs = enumerate_algebras(bounds);
  for (const auto& alg : algs) {
    for (const auto& x : alg.carrier()) {
      MvElement s = sigma_via(ops, x);
      if (!ops.below(s, x)) {
        run.fail("sigma(x) below x", docs({x, s}), "", [ops, x] {
          return !ops.below(sigma_via(ops, x), x);
        });
      } else if (!(s == game_step(x))) {
        run.fail("sigma term agrees with game_step", docs({x, s}), "",
                 [ops, x] { return !(sigma_via(ops, x) == game_step(x)); });
      }
      run.count();
      if (run.failed()) return run.finish();
    }
  }
  std::uint64_t strict = 0;
  for (std::int64_t d = 1; d <= chain_max_denominator; ++d) {
    ChainProduct chain({d});
    const Tables t = build_tables(chain, ops);
    auto lt = [&](Index a, Index b) { return a != b && t.leq(a, b); };
    for (Index x = 0; x < t.size(); ++x) {
      const Index s = t.sigma(x);
      const MvElement& e = t.elems[x];
      if (lt(t.zero, x) && lt(x, t.neg[x]) && !lt(s, x)) {
        run.fail("0 < x < not x implies sigma(x) < x", docs({e}), "",
                 [ops, e] {
                   auto s = sigma_via(ops, e);
                   return !(ops.oplus(ops.neg(s), e) == e.algebra().one() &&
                            !(s == e));
                 });
      } else if (lt(t.neg[x], x) && lt(x, t.one) && !lt(x, s)) {
        run.fail("not x < x < 1 implies sigma(x) > x", docs({e}), "",
                 [ops, e] {
                   auto s = sigma_via(ops, e);
                   return !(ops.oplus(ops.neg(e), s) == e.algebra().one() &&
                            !(s == e));
                 });
      } else if (s != x) {
        ++strict;
      }
      run.count();
      if (run.failed()) return run.finish();
    }
  }
  run.note(std::to_string(algs.size()) + " algebras; chains up to L_" +
           std::to_string(chain_max_denominator) + ", " +
           std::to_string(strict) + " strictly moved chain elements");
  return run.finish();
}

SuiteReport verify_centripetal(const SweepBounds& bounds,
                               std::int64_t chain_max_denominator,
                               const Primitives& ops) {
  Run run("centripetal");
  auto algs = with_chains(enumerate_algebras(bounds), chain_max_denominator);
  std::uint64_t monotone_pairs = 0;
  std::size_t max_n = 0;
  for (const auto& alg : algs) {
    const auto elems = alg.carrier();
    const std::size_t count = elems.size();
    const std::size_t bound = static_cast<std::size_t>(alg.max_denominator());
    const auto booleans = alg.booleans();
    std::vector<std::size_t> steps(count);
    std::vector<std::uint64_t> halves(count);
    for (std::size_t x = 0; x < count && !run.failed(); ++x) {
      const MvElement& a = elems[x];
      // Iterate sigma through the primitives, checking each step is below
      // its predecessor.
      MvElement cur = a;
      std::size_t n = 0;
      for (;; ++n) {
        MvElement next = sigma_via(ops, cur);
        if (next == cur) break;
        if (!ops.below(next, cur)) {
          run.fail("trace steps descend in the below order",
                   docs({a, cur, next}), "", [ops, cur] {
                     return !ops.below(sigma_via(ops, cur), cur);
                   });
          break;
        }
        if (n + 1 > bound) break;
        cur = std::move(next);
      }
      if (run.failed()) break;
      steps[x] = n;
      halves[x] = half_mask(a);
      max_n = std::max(max_n, n);
      const GameTrace trace = game_fixpoint(a);
      const MvElement& fix = trace.fixpoint();
      if (n > bound) {
        run.fail("stabilizes within max(d_i) steps", docs({a}),
                 "still moving after " + std::to_string(bound) + " steps",
                 [ops, a, bound] {
                   MvElement c = a;
                   for (std::size_t i = 0; i <= bound; ++i) {
                     MvElement nx = sigma_via(ops, c);
                     if (nx == c) return false;
                     c = nx;
                   }
                   return true;
                 });
      } else if (trace.n != n || !(fix == cur)) {
        run.fail("game_fixpoint matches sigma iteration", docs({a, fix}),
                 "n = " + std::to_string(trace.n) + " vs " +
                     std::to_string(n),
                 [a, n] { return game_fixpoint(a).n != n; });
      } else if ((all_coords_in(a, false) ||
                  halves[x] == (std::uint64_t{1} << a.rank()) - 1 ||
                  (a.rank() == 64 && ~halves[x] == 0)) &&
                 n != 0) {
        run.fail("central or self-dual implies n = 0", docs({a}),
                 "n = " + std::to_string(n),
                 [a] { return game_fixpoint(a).n != 0; });
      } else if (n == 0 && !all_coords_in(a, true)) {
        run.fail("n = 0 implies values in {0, 1/2, 1}", docs({a}), "",
                 [a] {
                   return game_fixpoint(a).n == 0 && !all_coords_in(a, true);
                 });
      } else if (!all_coords_in(fix, true)) {
        run.fail("fixpoint values in {0, 1/2, 1}", docs({a, fix}), "", [a] {
          return !all_coords_in(game_fixpoint(a).fixpoint(), true);
        });
      }
      if (run.failed()) break;

      // Central cone by brute force over the boolean skeleton.
      std::vector<MvElement> cone;
      for (const auto& r : booleans) {
        if (ops.below(r, a)) cone.push_back(r);
      }
      const auto core_cone = central_cone(a);
      auto in_cone = [&](const MvElement& v) {
        return std::find(cone.begin(), cone.end(), v) != cone.end();
      };
      const MvElement ff_plus = ops.oplus(fix, fix);
      const MvElement ff_times =
          ops.neg(ops.oplus(ops.neg(fix), ops.neg(fix)));
      auto cone_of = [ops](const MvElement& p) {
        std::vector<MvElement> c;
        for (const auto& r : p.algebra().booleans()) {
          if (ops.below(r, p)) c.push_back(r);
        }
        return c;
      };
      if (cone != core_cone) {
        run.fail("central_cone matches brute-force enumeration", docs({a}),
                 "", [a, cone_of] { return cone_of(a) != central_cone(a); });
      } else if (cone.empty()) {
        run.fail("central cone nonempty", docs({a}), "",
                 [a, cone_of] { return cone_of(a).empty(); });
      } else if ((cone.size() == 1) != (halves[x] == 0)) {
        run.fail("central cone singleton iff half-set empty", docs({a}),
                 "cone size " + std::to_string(cone.size()),
                 [a, cone_of] {
                   return (cone_of(a).size() == 1) != half_set(a).empty();
                 });
      } else if (cone.size() == 1 && !(cone.front() == fix)) {
        run.fail("singleton central cone is the fixpoint",
                 docs({a, cone.front(), fix}), "", [a, cone_of] {
                   auto c = cone_of(a);
                   return c.size() == 1 &&
                          !(c.front() == game_fixpoint(a).fixpoint());
                 });
      } else if (halves[x] != 0 &&
                 (ff_plus == ff_times || !in_cone(ff_plus) ||
                  !in_cone(ff_times))) {
        run.fail("f+f and f.f are distinct members of the central cone",
                 docs({a, ff_plus, ff_times}), "", [a, ops, cone_of] {
                   auto f = game_fixpoint(a).fixpoint();
                   auto p = ops.oplus(f, f);
                   auto t = ops.neg(ops.oplus(ops.neg(f), ops.neg(f)));
                   auto c = cone_of(a);
                   auto has = [&](const MvElement& v) {
                     return std::find(c.begin(), c.end(), v) != c.end();
                   };
                   return p == t || !has(p) || !has(t);
                 });
      }
    }
    if (run.failed()) break;

    // Monotonicity of n over pairs with equal half-sets.
    const Relation r = below_relation(elems, ops);
    for (std::size_t x = 0; x < count && !run.failed(); ++x) {
      for (std::size_t y = 0; y < count; ++y) {
        if (halves[x] != halves[y] || !r.test(x, y)) continue;
        ++monotone_pairs;
        if (steps[x] > steps[y]) {
          run.fail("a below b with equal half-sets implies n(a) <= n(b)",
                   docs({elems[x], elems[y]}),
                   "n(a) = " + std::to_string(steps[x]) +
                       ", n(b) = " + std::to_string(steps[y]),
                   [a = elems[x], b = elems[y]] {
                     auto c = check_monotonicity(a, b);
                     return c.applicable && !c.holds;
                   });
          break;
        }
      }
    }
    run.count(count);
    if (run.failed()) break;
  }
  run.note(std::to_string(algs.size()) + " algebras, " +
           std::to_string(monotone_pairs) + " monotonicity pairs, max n = " +
           std::to_string(max_n));
  return run.finish();
}

SuiteReport verify_ideal_model(std::uint64_t max_carrier,
                               const Primitives& ops) {
  Run run("ideal-model");
  max_carrier = std::min<std::uint64_t>(max_carrier, 16);
  auto algs = enumerate_algebras({max_carrier, 0, 0, {}});
  std::uint64_t total_ideals = 0;
  std::uint64_t total_primes = 0;
  for (const auto& alg : algs) {
    const Tables t = build_tables(alg, ops);
    const std::size_t n = t.size();
    using Mask = std::uint32_t;
    const Mask full = (Mask{1} << n) - 1;
    std::vector<Mask> down(n, 0);
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        if (t.leq(y, x)) down[x] |= Mask{1} << y;
      }
    }
    auto has = [](Mask m, Index i) { return (m >> i) & 1; };
    std::vector<Mask> genuine;
    for (Mask s = 0; s <= full; ++s) {
      if (!has(s, t.zero)) continue;
      bool ok = true;
      for (Index x = 0; x < n && ok; ++x) {
        if (!has(s, x)) continue;
        if ((down[x] & ~s) != 0) ok = false;
        for (Index y = 0; y < n && ok; ++y) {
          if (has(s, y) && !has(s, t.oplus(x, y))) ok = false;
        }
      }
      if (ok) genuine.push_back(s);
      if (s == full) break;
    }
    std::vector<Mask> coordinate;
    std::map<Mask, Ideal> by_mask;
    for (const auto& ideal : enumerate_ideals(alg)) {
      Mask m = 0;
      for (Index x = 0; x < n; ++x) {
        if (ideal.contains(t.elems[x])) m |= Mask{1} << x;
      }
      coordinate.push_back(m);
      by_mask.emplace(m, ideal);
    }
    std::sort(coordinate.begin(), coordinate.end());
    if (genuine != coordinate) {
      run.fail("ideals are exactly the coordinate-vanishing sets",
               docs({alg.zero()}),
               std::to_string(genuine.size()) + " ideals by enumeration vs " +
                   std::to_string(coordinate.size()) + " coordinate ideals",
               [ops, alg] {
                 return verify_ideal_model(*alg.carrier_size(), ops).passed() ==
                        false;
               });
      break;
    }
    for (Mask j : genuine) {
      const bool proper = j != full;
      bool irreducible = proper;
      for (Mask h : genuine) {
        for (Mask k : genuine) {
          if ((h & k) == j && h != j && k != j) irreducible = false;
        }
      }
      bool chain = proper;
      for (Index x = 0; x < n && chain; ++x) {
        for (Index y = 0; y < n && chain; ++y) {
          if (!has(j, t.odot(x, t.neg[y])) && !has(j, t.odot(y, t.neg[x]))) {
            chain = false;
          }
        }
      }
      const Ideal& ideal = by_mask.at(j);
      const bool prime = is_prime(ideal);
      const bool singleton = ideal.vanishing_set().size() == 1;
      if (!(prime == irreducible && prime == chain && prime == singleton)) {
        std::vector<std::string> w;
        for (Index x = 0; x < n; ++x) {
          if (has(j, x)) w.push_back(to_document(t.elems[x]));
        }
        run.fail("prime <=> meet-irreducible <=> chain quotient <=> |Z| = 1",
                 std::move(w),
                 "prime: " + yes_no(prime) + ", irreducible: " +
                     yes_no(irreducible) + ", chain quotient: " +
                     yes_no(chain) + ", singleton: " + yes_no(singleton),
                 [ideal, irreducible, chain] {
                   bool p = is_prime(ideal);
                   return !(p == irreducible && p == chain);
                 });
        break;
      }
      total_primes += prime;
    }
    total_ideals += genuine.size();
    run.count(std::uint64_t{full} + 1);
    if (run.failed()) break;
  }
  run.note(std::to_string(algs.size()) + " algebras, " +
           std::to_string(total_ideals) + " ideals, " +
           std::to_string(total_primes) + " prime");
  return run.finish();
}

SuiteReport verify_sigma_closed_form() {
  Run run("sigma-closed-form");
  const Rational zero(0), one(1), third(1, 3), two_thirds(2, 3), half(1, 2);
  const PLFunction term = sigma_star();
  const PLFunction shifted({{zero, zero}, {third, zero}, {two_thirds, one},
                            {one, one}});                   // min(1,max(0,3x-1))
  const PLFunction printed({{zero, zero}, {third, one}, {one, one}});  // 3x
  run.count(3);
  auto render = [](const PLFunction& f) { return to_document(f); };
  if (!(term == shifted)) {
    run.fail("sigma term = min(1, max(0, 3x - 1))", {render(term)}, "",
             [shifted] { return !(sigma_star() == shifted); });
    return run.finish();
  }
  run.note("sigma term expands to min(1, max(0, 3x - 1)): " + render(term));
  if (term == printed) {
    run.fail("sigma term differs from min(1, max(0, 3x))", {render(term)}, "",
             [printed] { return sigma_star() == printed; });
    return run.finish();
  }
  run.note("min(1, max(0, 3x)) differs: at x = 1/2 it gives " +
           printed(half).pretty() + ", the term gives " +
           term(half).pretty());
  auto fix = fixpoint_set(term);
  const std::vector<std::pair<Rational, Rational>> expected = {
      {zero, zero}, {half, half}, {one, one}};
  if (fix != expected) {
    std::string got;
    for (const auto& [a, b] : fix) got += "[" + a.str() + "," + b.str() + "]";
    run.fail("fixpoints of sigma are exactly {0, 1/2, 1}", {render(term)},
             got, [expected] { return fixpoint_set(sigma_star()) != expected; });
    return run.finish();
  }
  run.note("fixpoint set {0, 1/2, 1}");
  return run.finish();
}

SuiteReport verify_local_finiteness(const SweepBounds& bounds,
                                    std::size_t generator_sets,
                                    std::uint64_t seed,
                                    const Primitives& ops) {
  Run run("local-finiteness");
  auto algs = enumerate_algebras(bounds);
  std::uint64_t total_size = 0;
  for (std::size_t ai = 0; ai < algs.size() && !run.failed(); ++ai) {
    const auto& alg = algs[ai];
    const Tables t = build_tables(alg, ops);
    const std::size_t n = t.size();
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * (ai + 1));
    for (std::size_t set = 0; set < generator_sets && !run.failed(); ++set) {
      std::vector<Index> gen_idx(rng() % 4);
      for (auto& g : gen_idx) g = static_cast<Index>(rng() % n);
      std::vector<MvElement> gens;
      for (auto g : gen_idx) gens.push_back(t.elems[g]);

      const auto sub = generated_subalgebra(alg, gens);
      std::vector<bool> in_sub(n, false);
      for (const auto& s : sub) in_sub[alg.index_of(s)] = true;

      // Naive closure through the tables: every new member is combined
      // with every member so far.
      std::vector<bool> naive(n, false);
      std::vector<Index> members;
      auto add = [&](Index a) {
        if (!naive[a]) {
          naive[a] = true;
          members.push_back(a);
        }
      };
      add(t.zero);
      for (auto g : gen_idx) add(g);
      for (std::size_t next = 0; next < members.size(); ++next) {
        const Index a = members[next];
        add(t.neg[a]);
        for (std::size_t j = 0; j <= next; ++j) {
          add(t.oplus(a, members[j]));
          add(t.oplus(members[j], a));
        }
      }
      auto confirm = [alg, gens] {
        auto s = generated_subalgebra(alg, gens);
        for (const auto& a : s) {
          if (std::find(s.begin(), s.end(), neg(a)) == s.end()) return true;
          for (const auto& b : s) {
            if (std::find(s.begin(), s.end(), oplus(a, b)) == s.end()) {
              return true;
            }
          }
        }
        return false;
      };
      if (in_sub != naive) {
        std::vector<std::string> w;
        for (const auto& g : gens) w.push_back(to_document(g));
        run.fail("generated subalgebra equals naive closure", std::move(w),
                 std::to_string(sub.size()) + " elements", confirm);
        break;
      }
      std::vector<Index> sub_idx;
      for (Index a = 0; a < n; ++a) {
        if (in_sub[a]) sub_idx.push_back(a);
      }
      bool closed = in_sub[t.zero] && in_sub[t.one];
      for (auto g : gen_idx) closed = closed && in_sub[g];
      for (Index a : sub_idx) {
        if (!closed) break;
        closed = in_sub[t.neg[a]];
        for (Index b : sub_idx) {
          if (!closed) break;
          closed = in_sub[t.oplus(a, b)] && in_sub[t.odot(a, b)] &&
                   in_sub[t.join(a, b)] && in_sub[t.meet(a, b)];
        }
      }
      if (!closed) {
        std::vector<std::string> w;
        for (const auto& g : gens) w.push_back(to_document(g));
        run.fail("generated subalgebra contains 0, 1, generators and is "
                 "closed under all operations",
                 std::move(w), "", confirm);
        break;
      }
      total_size += sub.size();
      run.count();
    }
  }
  run.note(std::to_string(algs.size()) + " algebras, " +
           std::to_string(generator_sets) + " generator sets each, " +
           std::to_string(total_size) + " subalgebra elements in total");
  return run.finish();
}

SuiteReport verify_indicators(const SweepBounds& bounds,
                              const Primitives& ops) {
  Run run("indicators");
  auto algs = enumerate_algebras(bounds);
  for (const auto& alg : algs) {
    const std::size_t m = alg.rank();
    auto boolean_with_zeroset = [&ops](const MvElement& b,
                                       const std::vector<bool>& zeros) {
      if (!(ops.oplus(b, b) == b)) return false;
      for (std::size_t i = 0; i < b.rank(); ++i) {
        if ((b.numerator(i) == 0) != zeros[i]) return false;
      }
      return true;
    };
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<SpectrumPoint> w;
      std::vector<bool> zeros(m);
      for (std::size_t i = 0; i < m; ++i) {
        zeros[i] = (mask >> i) & 1;
        if (zeros[i]) w.push_back({i});
      }
      MvElement b = zeroset_indicator(alg, w);
      if (!boolean_with_zeroset(b, zeros)) {
        run.fail("zeroset indicator is boolean with zeroset W", docs({b}), "",
                 [alg, w, zeros, boolean_with_zeroset] {
                   return !boolean_with_zeroset(zeroset_indicator(alg, w),
                                                zeros);
                 });
        return run.finish();
      }
      run.count();
    }
    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = 0; q < m; ++q) {
        if (p == q) continue;
        MvElement s = separating_element(alg, {p}, {q});
        bool ok = ops.oplus(s, s) == s && s.numerator(p) == 0 &&
                  s.numerator(q) == alg.denominator(q);
        if (ok && m == 2) {
          ok = separating_element(alg, {q}, {p}) == ops.neg(s);
        }
        if (!ok) {
          run.fail("separating element is boolean, 0 at p and 1 at q",
                   docs({s}), "p = " + std::to_string(p) +
                                  ", q = " + std::to_string(q),
                   [alg, p, q] {
                     auto e = separating_element(alg, {p}, {q});
                     return !(is_boolean(e) && e.numerator(p) == 0 &&
                              e.numerator(q) == alg.denominator(q));
                   });
          return run.finish();
        }
        run.count();
      }
    }
    const Rational outside(1, alg.max_denominator() + 1);
    for (const auto& a : alg.carrier()) {
      std::vector<Rational> levels = a.values();
      levels.push_back(Rational(0));
      levels.push_back(Rational(1));
      levels.push_back(Rational(1, 2));
      if (alg.max_denominator() > 1) levels.push_back(outside);
      for (const auto& rho : levels) {
        std::vector<bool> zeros(m);
        for (std::size_t i = 0; i < m; ++i) zeros[i] = a.value(i) == rho;
        MvElement b = level_set_indicator(a, rho);
        if (!boolean_with_zeroset(b, zeros)) {
          run.fail("level-set indicator is boolean with zeroset a^-1(rho)",
                   docs({a, b}), "rho = " + rho.str(),
                   [a, rho, zeros, boolean_with_zeroset] {
                     return !boolean_with_zeroset(level_set_indicator(a, rho),
                                                  zeros);
                   });
          return run.finish();
        }
        run.count();
      }
    }
  }
  run.note(std::to_string(algs.size()) + " algebras");
  return run.finish();
}

namespace {

// Every unit vector with 1 <= u_i <= max_unit and rank <= max_rank; sorted
// tuples only when `sorted` (coordinate permutations are isomorphisms).
std::vector<UnitalLGroup> enumerate_groups(const LGroupBounds& b,
                                           bool sorted) {
  std::vector<UnitalLGroup> out;
  for (std::size_t m = 1; m <= b.max_rank; ++m) {
    std::vector<std::int64_t> u(m, 1);
    for (;;) {
      if (!sorted || std::is_sorted(u.begin(), u.end())) out.emplace_back(u);
      std::size_t i = m;
      while (i > 0 && u[i - 1] == b.max_unit) u[--i] = 1;
      if (i == 0) break;
      ++u[i - 1];
    }
  }
  return out;
}

// Calls fn(vector) for every integer vector in [lo, hi]^m.
template <typename Fn>
void for_each_box(std::size_t m, std::int64_t lo, std::int64_t hi, Fn&& fn) {
  std::vector<std::int64_t> v(m, lo);
  for (;;) {
    if (!fn(v)) return;
    std::size_t i = m;
    while (i > 0 && v[i - 1] == hi) v[--i] = lo;
    if (i == 0) return;
    ++v[i - 1];
  }
}

}  // namespace

SuiteReport verify_discrete_states(const LGroupBounds& bounds) {
  Run run("discrete-states");
  auto groups = enumerate_groups(bounds, false);
  for (const auto& g : groups) {
    for (std::size_t i = 0; i < g.rank(); ++i) {
      ExtremalState s = extremal_state(g, {i});
      const Rational expected(1, g.unit()[i]);
      const auto witness = docs({g.unit_element()});
      if (!(s.image_generator() == expected) || !s.is_discrete()) {
        run.fail("state image is the cyclic group generated by 1/d_i",
                 witness, "coordinate " + std::to_string(i) + ", generator " +
                              s.image_generator().str(),
                 [g, i] { return !extremal_state(g, {i}).is_discrete(); });
        return run.finish();
      }
      if (!(s(g.unit_element()) == Rational(1))) {
        run.fail("state is normalized at the unit", witness, "",
                 [g, i] {
                   return !(extremal_state(g, {i})(g.unit_element()) ==
                            Rational(1));
                 });
        return run.finish();
      }
      bool ok = true;
      for_each_box(g.rank(), -1, 1, [&](const std::vector<std::int64_t>& h) {
        for_each_box(g.rank(), -1, 1, [&](const std::vector<std::int64_t>& k) {
          auto a = g.element(h);
          auto b = g.element(k);
          if (!(s(a + b) == s(a) + s(b)) || (a <= b && s(b) < s(a))) {
            run.fail("state is additive and monotone", docs({a, b}), "",
                     [g, i, a, b] {
                       auto st = extremal_state(g, {i});
                       return !(st(a + b) == st(a) + st(b)) ||
                              (a <= b && st(b) < st(a));
                     });
            ok = false;
          }
          run.count();
          return ok;
        });
        return ok;
      });
      if (!ok) return run.finish();
    }
  }
  run.note(std::to_string(groups.size()) + " groups");
  return run.finish();
}

SuiteReport verify_comparability(const LGroupBounds& bounds) {
  Run run("comparability");
  auto groups = enumerate_groups(bounds, true);
  const std::int64_t a = bounds.max_abs;
  for (const auto& g : groups) {
    const std::size_t m = g.rank();
    const auto u = g.unit();
    bool ok = true;
    for_each_box(m, -a, a, [&](const std::vector<std::int64_t>& hv) {
      const LGroupElement h = g.element(hv);
      for_each_box(m, -a, a, [&](const std::vector<std::int64_t>& kv) {
        const LGroupElement k = g.element(kv);
        const ComparabilitySplit split = comparability_split(h, k);
        std::vector<bool> in_x1(m, false);
        for (auto p : split.x1) in_x1[p.index] = true;
        bool good = split.x1.size() + split.x2.size() == m;
        for (std::size_t c = 0; c < m && good; ++c) {
          const bool leq = hv[c] <= kv[c];
          const std::int64_t e1 = split.e1.numerator(c);
          const std::int64_t e2 = split.e2.numerator(c);
          good = in_x1[c] == leq &&                  // X1 = {h <= k}
                 (e1 == 0 || e1 == u[c]) &&          // e1 boolean
                 (e2 == 0 || e2 == u[c]) &&          // e2 boolean
                 (e1 == 0) == in_x1[c] &&            // zeroset(e1) = X1
                 (e2 == 0) == !in_x1[c] &&           // zeroset(e2) = X2
                 (in_x1[c] ? hv[c] <= kv[c] : hv[c] > kv[c]);
        }
        if (!good) {
          run.fail("comparability split matches coordinate comparison",
                   docs({h, k}), "",
                   [h, k] {
                     auto s = comparability_split(h, k);
                     for (auto p : s.x1) {
                       if (h.coord(p.index) > k.coord(p.index)) return true;
                     }
                     for (auto p : s.x2) {
                       if (h.coord(p.index) <= k.coord(p.index)) return true;
                     }
                     return !is_boolean(s.e1) || !is_boolean(s.e2) ||
                            !(s.e1 == neg(s.e2));
                   });
          ok = false;
        }
        run.count();
        return ok;
      });
      return ok;
    });
    if (!ok) break;
  }
  run.note(std::to_string(groups.size()) +
           " groups (sorted units), |h_i|, |k_i| <= " + std::to_string(a));
  return run.finish();
}

namespace {

// Every good sequence without zero entries summing to h, by backtracking
// over the unit interval.
void all_good_sequences(const UnitalLGroup& g,
                        const std::vector<MvElement>& carrier,
                        std::vector<std::int64_t>& remaining,
                        std::vector<MvElement>& prefix,
                        std::vector<std::vector<MvElement>>& out,
                        std::size_t max_len) {
  if (std::all_of(remaining.begin(), remaining.end(),
                  [](std::int64_t r) { return r == 0; })) {
    out.push_back(prefix);
    return;
  }
  if (prefix.size() == max_len) return;
  for (const auto& x : carrier) {
    bool fits = false;
    bool ok = true;
    for (std::size_t c = 0; c < g.rank() && ok; ++c) {
      if (x.numerator(c) > remaining[c]) ok = false;
      if (x.numerator(c) != 0) fits = true;
    }
    if (!ok || !fits) continue;
    if (!prefix.empty() && !(oplus(prefix.back(), x) == prefix.back())) {
      continue;
    }
    for (std::size_t c = 0; c < g.rank(); ++c) remaining[c] -= x.numerator(c);
    prefix.push_back(x);
    all_good_sequences(g, carrier, remaining, prefix, out, max_len);
    prefix.pop_back();
    for (std::size_t c = 0; c < g.rank(); ++c) remaining[c] += x.numerator(c);
  }
}

}  // namespace

SuiteReport verify_good_sequences(const LGroupBounds& bounds) {
  Run run("good-sequences");
  auto groups = enumerate_groups(bounds, true);
  std::uint64_t searched = 0;
  for (const auto& g : groups) {
    const std::size_t m = g.rank();
    const auto carrier = g.unit_interval().carrier();
    std::int64_t hi = 3 * *std::max_element(g.unit().begin(), g.unit().end());
    bool ok = true;
    for_each_box(m, 0, hi, [&](const std::vector<std::int64_t>& hv) {
      for (std::size_t c = 0; c < m; ++c) {
        if (hv[c] > 3 * g.unit()[c]) return true;
      }
      const LGroupElement h = g.element(hv);
      const GoodSequence seq = good_sequence_of(h);
      if (!seq.absorbs() || !(seq.sum(g) == h)) {
        run.fail("good sequence absorbs and sums to h", docs({h}), "", [h] {
          auto s = good_sequence_of(h);
          return !s.absorbs() || !(s.sum(h.group()) == h);
        });
        ok = false;
        return ok;
      }
      std::vector<std::int64_t> remaining = hv;
      std::vector<MvElement> prefix;
      std::vector<std::vector<MvElement>> found;
      all_good_sequences(g, carrier, remaining, prefix, found, 4);
      ++searched;
      if (found.size() != 1 || found.front() != seq.entries) {
        run.fail("good sequence is unique", docs({h}),
                 std::to_string(found.size()) + " candidate sequences", [h] {
                   const auto& grp = h.group();
                   auto car = grp.unit_interval().carrier();
                   std::vector<std::int64_t> rem(h.coords().begin(),
                                                 h.coords().end());
                   std::vector<MvElement> pre;
                   std::vector<std::vector<MvElement>> all;
                   all_good_sequences(grp, car, rem, pre, all, 4);
                   return all.size() != 1 ||
                          all.front() != good_sequence_of(h).entries;
                 });
        ok = false;
      }
      run.count();
      return ok;
    });
    if (!ok) break;
    const std::int64_t a = bounds.max_abs;
    for_each_box(m, 0, a, [&](const std::vector<std::int64_t>& hv) {
      for_each_box(m, 0, a, [&](const std::vector<std::int64_t>& kv) {
        auto h = g.element(hv);
        auto k = g.element(kv);
        if (!good_sequence_order_test(h, k)) {
          run.fail("h <= k iff good sequences compare entrywise",
                   docs({h, k}), "",
                   [h, k] { return !good_sequence_order_test(h, k); });
          ok = false;
        }
        run.count();
        return ok;
      });
      return ok;
    });
    if (!ok) break;
  }
  run.note(std::to_string(groups.size()) + " groups, " +
           std::to_string(searched) + " exhaustive uniqueness searches");
  return run.finish();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "mv-axioms",       "partial-order",     "centrality",
      "sigma-props",     "centripetal",       "ideal-model",
      "sigma-closed-form", "local-finiteness", "indicators",
      "discrete-states", "comparability",     "good-sequences"};
  return names;
}

namespace {

SuiteReport run_one(const std::string& name, std::uint64_t max_carrier) {
  const SweepBounds sweep{max_carrier, 0, 0, {}};
  if (name == "mv-axioms") return verify_mv_axioms(sweep);
  if (name == "partial-order") return verify_partial_order(sweep);
  if (name == "centrality") return verify_centrality_equivalences(sweep);
  if (name == "sigma-props") return verify_sigma_props(sweep);
  if (name == "centripetal") return verify_centripetal(sweep);
  if (name == "ideal-model") {
    return verify_ideal_model(std::min<std::uint64_t>(max_carrier, 12));
  }
  if (name == "sigma-closed-form") return verify_sigma_closed_form();
  if (name == "local-finiteness") return verify_local_finiteness(sweep);
  if (name == "indicators") return verify_indicators(sweep);
  if (name == "discrete-states") return verify_discrete_states();
  if (name == "comparability") return verify_comparability();
  if (name == "good-sequences") return verify_good_sequences();
  throw Error(ErrorKind::kUnknownSuite, "unknown suite '" + name + "'");
}

}  // namespace

std::vector<SuiteReport> run_suites(std::string_view name,
                                    std::uint64_t max_carrier) {
  if (max_carrier < 2) {
    throw Error(ErrorKind::kInvalidArgument, "max carrier must be >= 2");
  }
  std::vector<SuiteReport> out;
  if (name != "all") {
    out.push_back(run_one(std::string(name), max_carrier));
    return out;
  }
  for (const auto& n : suite_names()) out.push_back(run_one(n, max_carrier));
  return out;
}

}  // namespace mvk::verify
