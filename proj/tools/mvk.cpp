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

// Command line front end over the C API in mvk/mvk.h.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mvk/mvk.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct Failure {
  std::string message;
};

void check(mvk_status s) {
  if (s != MVK_OK) throw Failure{mvk_last_error()};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Doc = std::unique_ptr<mvk_document, Deleter<mvk_document, mvk_document_free>>;
using Alg = std::unique_ptr<mvk_algebra, Deleter<mvk_algebra, mvk_algebra_free>>;
using Elem = std::unique_ptr<mvk_element, Deleter<mvk_element, mvk_element_free>>;
using Func = std::unique_ptr<mvk_plfunc, Deleter<mvk_plfunc, mvk_plfunc_free>>;
using Trace = std::unique_ptr<mvk_trace, Deleter<mvk_trace, mvk_trace_free>>;
using List = std::unique_ptr<mvk_element_list,
                             Deleter<mvk_element_list, mvk_element_list_free>>;
using Reports =
    std::unique_ptr<mvk_reports, Deleter<mvk_reports, mvk_reports_free>>;
using LElem = std::unique_ptr<mvk_lgroup_element,
                              Deleter<mvk_lgroup_element,
                                      mvk_lgroup_element_free>>;

std::string take(char* s) {
  std::string out = s ? s : "";
  mvk_string_free(s);
  return out;
}

template <typename Fn>
std::string str_of(Fn fn) {
  char* s = nullptr;
  check(fn(&s));
  return take(s);
}

Doc read_doc(const std::string& path) {
  mvk_document* d = nullptr;
  check(mvk_document_read_file(path.c_str(), &d));
  return Doc(d);
}

Elem element_of(const mvk_document* d) {
  mvk_element* e = nullptr;
  check(mvk_document_element(d, &e));
  return Elem(e);
}

std::string pretty(const mvk_element* e) {
  return str_of([&](char** s) { return mvk_element_pretty(e, s); });
}

Json element_json(const mvk_element* e) {
  return Json::parse(
      str_of([&](char** s) { return mvk_element_serialize(e, s); }));
}

bool json_out = false;

void emit(const std::string& text, const Json& j) {
  if (json_out) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
}

Json algebra_counts(const mvk_algebra* a, std::string& text) {
  std::uint64_t carrier = 0, booleans = 0;
  check(mvk_algebra_carrier_size(a, &carrier));
  check(mvk_algebra_boolean_count(a, &booleans));
  const std::size_t primes = mvk_algebra_rank(a);
  Json dens = Json::array();
  for (std::size_t i = 0; i < primes; ++i) {
    dens.push_back(mvk_algebra_denominator(a, i));
  }
  text += str_of([&](char** s) { return mvk_algebra_describe(a, s); }) +
          "\ncarrier " + std::to_string(carrier) + ", booleans " +
          std::to_string(booleans) + ", primes " + std::to_string(primes);
  Json j;
  j["denominators"] = dens;
  j["carrier"] = carrier;
  j["booleans"] = booleans;
  j["primes"] = primes;
  return j;
}

int cmd_info(const std::string& path) {
  Doc d = read_doc(path);
  const std::string kind = mvk_document_kind(d.get());
  Json j;
  j["kind"] = "info";
  j["document"] = kind;
  std::string text;
  if (kind == "chain_product" || kind == "element") {
    if (kind == "element") {
      Elem e = element_of(d.get());
      text = "element " + pretty(e.get()) + " of ";
      j["element"] = element_json(e.get());
    }
    mvk_algebra* a = nullptr;
    check(mvk_document_algebra(d.get(), &a));
    Alg alg(a);
    j.update(algebra_counts(alg.get(), text));
  } else if (kind == "pl1") {
    mvk_plfunc* f = nullptr;
    check(mvk_document_plfunc(d.get(), &f));
    Func fn(f);
    Json doc = Json::parse(
        str_of([&](char** s) { return mvk_plfunc_serialize(fn.get(), s); }));
    const std::size_t pieces = mvk_plfunc_piece_count(fn.get());
    text = "pl1, " + std::to_string(pieces) + " affine pieces, points";
    for (const auto& p : doc["points"]) {
      text += " (" + p[0].get<std::string>() + "," +
              p[1].get<std::string>() + ")";
    }
    j["pieces"] = pieces;
    j["function"] = doc;
  } else {
    mvk_lgroup_element* g = nullptr;
    check(mvk_document_lgroup_element(d.get(), &g));
    LElem ge(g);
    Json doc = Json::parse(
        str_of([&](char** s) { return mvk_document_serialize(d.get(), s); }));
    text = "lgroup_element " +
           str_of([&](char** s) { return mvk_lgroup_element_pretty(g, s); }) +
           ", unit " + doc["unit"].dump();
    j["element"] = doc;
  }
  emit(text, j);
  return kExitPass;
}

int cmd_fixpoint(const std::string& path) {
  Doc d = read_doc(path);
  Elem e = element_of(d.get());
  mvk_trace* t = nullptr;
  check(mvk_trace_new(e.get(), &t));
  Trace trace(t);
  const std::size_t n = mvk_trace_n(t);
  std::string text;
  Json steps = Json::array();
  for (std::size_t i = 0; i <= n; ++i) {
    mvk_element* s = nullptr;
    check(mvk_trace_step(t, i, &s));
    Elem step(s);
    if (i) text += " → ";
    text += pretty(step.get());
    steps.push_back(element_json(step.get()));
  }
  text += "; n=" + std::to_string(n);
  Json j;
  j["kind"] = "trace";
  j["steps"] = steps;
  j["n"] = n;
  emit(text, j);
  return kExitPass;
}

int cmd_center(const std::string& path) {
  Doc d = read_doc(path);
  Elem e = element_of(d.get());
  mvk_element_list* l = nullptr;
  check(mvk_central_cone(e.get(), &l));
  List cone(l);
  const std::size_t size = mvk_element_list_size(l);
  std::string members;
  Json jc = Json::array();
  for (std::size_t i = 0; i < size; ++i) {
    mvk_element* r = nullptr;
    check(mvk_element_list_get(l, i, &r));
    Elem member(r);
    if (i) members += ",";
    members += pretty(member.get());
    jc.push_back(element_json(member.get()));
  }
  mvk_trace* t = nullptr;
  check(mvk_trace_new(e.get(), &t));
  Trace trace(t);
  mvk_element* f = nullptr;
  check(mvk_trace_step(t, mvk_trace_n(t), &f));
  Elem fix(f);
  mvk_element *p = nullptr, *q = nullptr;
  check(mvk_element_oplus(f, f, &p));
  Elem plus(p);
  check(mvk_element_odot(f, f, &q));
  Elem times(q);
  const bool singleton = size == 1;
  std::string text = "C_p = {" + members + "}, " +
                     (singleton ? "singleton" : "non-singleton") +
                     "\nfixpoint " + pretty(f) + "\nfixpoint ⊕ fixpoint " +
                     pretty(p) + "\nfixpoint ⊙ fixpoint " + pretty(q);
  Json j;
  j["kind"] = "central_cone";
  j["cone"] = jc;
  j["singleton"] = singleton;
  j["fixpoint"] = element_json(f);
  j["fixpoint_oplus_fixpoint"] = element_json(p);
  j["fixpoint_odot_fixpoint"] = element_json(q);
  emit(text, j);
  return kExitPass;
}

int cmd_order(const std::string& path_x, const std::string& path_y) {
  Doc dx = read_doc(path_x);
  Doc dy = read_doc(path_y);
  Elem x = element_of(dx.get());
  Elem y = element_of(dy.get());
  int xy = 0, yx = 0, nxy = 0, nyx = 0;
  check(mvk_element_below(x.get(), y.get(), &xy));
  check(mvk_element_below(y.get(), x.get(), &yx));
  check(mvk_element_natural_leq(x.get(), y.get(), &nxy));
  check(mvk_element_natural_leq(y.get(), x.get(), &nyx));
  mvk_element* dist = nullptr;
  check(mvk_element_chang_distance(x.get(), y.get(), &dist));
  Elem distance(dist);
  auto yn = [](int b) { return b ? std::string("yes") : std::string("no"); };
  std::string text = "x ⊑ y: " + yn(xy) + "\ny ⊑ x: " + yn(yx) +
                     "\nx ≤ y: " + yn(nxy) + "\ny ≤ x: " + yn(nyx) +
                     "\ndistance " + pretty(dist);
  Json j;
  j["kind"] = "order";
  j["x_below_y"] = xy == 1;
  j["y_below_x"] = yx == 1;
  j["x_leq_y"] = nxy == 1;
  j["y_leq_x"] = nyx == 1;
  j["distance"] = element_json(dist);
  emit(text, j);
  return kExitPass;
}

int cmd_verify(const std::string& suite, std::uint64_t max_carrier) {
  mvk_reports* r = nullptr;
  check(mvk_verify(suite.c_str(), max_carrier, &r));
  Reports reports(r);
  const std::size_t n = mvk_reports_count(r);
  bool all = true;
  Json arr = Json::array();
  std::string text;
  for (std::size_t i = 0; i < n; ++i) {
    all = all && mvk_reports_passed(r, i);
    text += str_of([&](char** s) { return mvk_reports_text(r, i, s); });
    arr.push_back(Json::parse(
        str_of([&](char** s) { return mvk_reports_json(r, i, s); })));
  }
  if (n > 1) {
    text += all ? "all " + std::to_string(n) + " suites passed"
                : "verification FAILED";
  } else if (!text.empty() && text.back() == '\n') {
    text.pop_back();
  }
  Json j;
  j["kind"] = "verification";
  j["passed"] = all;
  j["reports"] = arr;
  emit(text, j);
  return all ? kExitPass : kExitCounterexample;
}

bool ends_with(const std::string& s, const std::string& tail) {
  return s.size() >= tail.size() &&
         s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

int cmd_plot(const std::string& source, const std::string& term,
             std::size_t grid, const std::string& out) {
  if (out.empty()) throw Failure{"plot needs --out"};
  if (!term.empty()) {
    if (!source.empty()) {
      throw Failure{"give either a function source or --term, not both"};
    }
    if (!ends_with(out, ".ppm")) {
      throw Failure{"density plots are written as .ppm"};
    }
    check(mvk_plot_density(term.c_str(), grid, out.c_str()));
  } else {
    if (source.empty()) throw Failure{"plot needs a function source or --term"};
    mvk_plfunc* f = nullptr;
    if (source == "sigma") {
      check(mvk_plfunc_sigma(&f));
    } else {
      Doc d = read_doc(source);
      check(mvk_document_plfunc(d.get(), &f));
    }
    Func fn(f);
    const char* format = ends_with(out, ".svg") ? "svg" : "ppm";
    check(mvk_plot_graph(f, format, out.c_str()));
  }
  Json j;
  j["kind"] = "plot";
  j["path"] = out;
  emit("wrote " + out, j);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite MV-algebras of dimension-map type: games, orders, "
               "plots and verification"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "object-notation"}))
      ->capture_default_str();

  std::string file, file2, suite, source, term, out;
  std::uint64_t max_carrier = 200;
  std::size_t grid = 256;

  auto* info = app.add_subcommand("info", "Summarize a document");
  info->add_option("file", file, "Document")->required();
  auto* fixpoint =
      app.add_subcommand("fixpoint", "Iterate the game map to its fixpoint");
  fixpoint->add_option("file", file, "Element document")->required();
  auto* center = app.add_subcommand("center", "Central cone of an element");
  center->add_option("file", file, "Element document")->required();
  auto* order = app.add_subcommand("order", "Compare two elements");
  order->add_option("x", file, "Element document")->required();
  order->add_option("y", file2, "Element document")->required();
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name or 'all'")->required();
  verify->add_option("--max-carrier", max_carrier, "Largest carrier swept")
      ->capture_default_str();
  auto* plot = app.add_subcommand(
      "plot", "Graph a PL function (SVG/PPM) or density-plot a term (PPM)");
  plot->add_option("source", source, "'sigma' or a pl1 document");
  plot->add_option("--term", term, "Term in X applied to |x + y - 1|");
  plot->add_option("--grid", grid, "Density grid size")->capture_default_str();
  plot->add_option("--out", out, "Output path (.svg or .ppm)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }
  json_out = format == "object-notation";

  try {
    if (info->parsed()) return cmd_info(file);
    if (fixpoint->parsed()) return cmd_fixpoint(file);
    if (center->parsed()) return cmd_center(file);
    if (order->parsed()) return cmd_order(file, file2);
    if (verify->parsed()) return cmd_verify(suite, max_carrier);
    if (plot->parsed()) return cmd_plot(source, term, grid, out);
  } catch (const Failure& f) {
    std::cerr << "mvk: " << f.message << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
