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

#include "mvk/mvk.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iterator>
#include <new>
#include <sstream>

#include "mvk/centripetal.hpp"
#include "mvk/document.hpp"
#include "mvk/error.hpp"
#include "mvk/plot.hpp"
#include "mvk/spectra.hpp"
#include "mvk/verifier.hpp"

struct mvk_document {
  mvk::Document value;
};
struct mvk_algebra {
  mvk::ChainProduct value;
};
struct mvk_element {
  mvk::MvElement value;
};
struct mvk_plfunc {
  mvk::PLFunction value;
};
struct mvk_lgroup_element {
  mvk::LGroupElement value;
};
struct mvk_trace {
  mvk::GameTrace value;
};
struct mvk_element_list {
  std::vector<mvk::MvElement> value;
};
struct mvk_reports {
  std::vector<mvk::verify::SuiteReport> value;
};

namespace {

thread_local std::string last_error;

mvk_status status_of(mvk::ErrorKind kind) {
  switch (kind) {
    case mvk::ErrorKind::kInvalidArgument:
      return MVK_E_INVALID_ARGUMENT;
    case mvk::ErrorKind::kAlgebraMismatch:
      return MVK_E_ALGEBRA_MISMATCH;
    case mvk::ErrorKind::kInvariant:
      return MVK_E_INVARIANT;
    case mvk::ErrorKind::kParse:
      return MVK_E_PARSE;
    case mvk::ErrorKind::kIo:
      return MVK_E_IO;
    case mvk::ErrorKind::kUnknownSuite:
      return MVK_E_UNKNOWN_SUITE;
  }
  return MVK_E_INTERNAL;
}

// Runs fn, translating exceptions into a status and the thread's last error.
template <typename Fn>
mvk_status guard(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return MVK_OK;
  } catch (const mvk::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  return MVK_E_INTERNAL;
}

void require(const void* p, const char* what) {
  if (p == nullptr) {
    throw mvk::Error(mvk::ErrorKind::kInvalidArgument,
                     std::string(what) + " must not be null");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename T>
const T& held(const mvk_document* doc) {
  require(doc, "document");
  if (const T* v = std::get_if<T>(&doc->value)) return *v;
  throw mvk::Error(mvk::ErrorKind::kInvalidArgument,
                   "document is a " +
                       std::string(mvk::kind_name(mvk::kind_of(doc->value))));
}

template <typename Op>
mvk_status binary(const mvk_element* a, const mvk_element* b,
                  mvk_element** out, Op op) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new mvk_element{op(a->value, b->value)};
  });
}

template <typename Pred>
mvk_status predicate(const mvk_element* a, const mvk_element* b, int* out,
                     Pred pred) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = pred(a->value, b->value) ? 1 : 0;
  });
}

void write_file(const char* path, const std::string& bytes) {
  require(path, "path");
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f || !f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()))) {
    throw mvk::Error(mvk::ErrorKind::kIo,
                     std::string("cannot write '") + path + "'");
  }
}

}  // namespace

extern "C" {

const char* mvk_last_error(void) { return last_error.c_str(); }

void mvk_string_free(char* s) { std::free(s); }

mvk_status mvk_document_parse(const char* text, size_t length,
                              mvk_document** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new mvk_document{mvk::parse_document({text, length})};
  });
}

mvk_status mvk_document_read_file(const char* path, mvk_document** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    std::ifstream f(path, std::ios::binary);
    if (!f) {
      throw mvk::Error(mvk::ErrorKind::kIo,
                       std::string("cannot read '") + path + "'");
    }
    std::string text((std::istreambuf_iterator<char>(f)),
                     std::istreambuf_iterator<char>());
    *out = new mvk_document{mvk::parse_document(text)};
  });
}

void mvk_document_free(mvk_document* doc) { delete doc; }

const char* mvk_document_kind(const mvk_document* doc) {
  if (!doc) return "";
  return mvk::kind_name(mvk::kind_of(doc->value)).data();
}

mvk_status mvk_document_serialize(const mvk_document* doc, char** out) {
  return guard([&] {
    require(doc, "document");
    require(out, "out");
    *out = dup(mvk::to_document(doc->value));
  });
}

mvk_status mvk_document_algebra(const mvk_document* doc, mvk_algebra** out) {
  return guard([&] {
    require(doc, "document");
    require(out, "out");
    if (const auto* e = std::get_if<mvk::MvElement>(&doc->value)) {
      *out = new mvk_algebra{e->algebra()};
    } else {
      *out = new mvk_algebra{held<mvk::ChainProduct>(doc)};
    }
  });
}

mvk_status mvk_document_element(const mvk_document* doc, mvk_element** out) {
  return guard([&] {
    require(out, "out");
    *out = new mvk_element{held<mvk::MvElement>(doc)};
  });
}

mvk_status mvk_document_plfunc(const mvk_document* doc, mvk_plfunc** out) {
  return guard([&] {
    require(out, "out");
    *out = new mvk_plfunc{held<mvk::PLFunction>(doc)};
  });
}

mvk_status mvk_document_lgroup_element(const mvk_document* doc,
                                       mvk_lgroup_element** out) {
  return guard([&] {
    require(out, "out");
    *out = new mvk_lgroup_element{held<mvk::LGroupElement>(doc)};
  });
}

mvk_status mvk_algebra_new(const int64_t* denominators, size_t rank,
                           mvk_algebra** out) {
  return guard([&] {
    require(out, "out");
    if (rank > 0) require(denominators, "denominators");
    *out = new mvk_algebra{mvk::ChainProduct(
        std::vector<std::int64_t>(denominators, denominators + rank))};
  });
}

void mvk_algebra_free(mvk_algebra* alg) { delete alg; }

size_t mvk_algebra_rank(const mvk_algebra* alg) {
  return alg ? alg->value.rank() : 0;
}

int64_t mvk_algebra_denominator(const mvk_algebra* alg, size_t i) {
  if (!alg || i >= alg->value.rank()) return 0;
  return alg->value.denominator(i);
}

mvk_status mvk_algebra_carrier_size(const mvk_algebra* alg, uint64_t* out) {
  return guard([&] {
    require(alg, "algebra");
    require(out, "out");
    auto n = alg->value.carrier_size();
    if (!n) {
      throw mvk::Error(mvk::ErrorKind::kInvalidArgument,
                       "carrier size exceeds 64 bits");
    }
    *out = *n;
  });
}

mvk_status mvk_algebra_boolean_count(const mvk_algebra* alg, uint64_t* out) {
  return guard([&] {
    require(alg, "algebra");
    require(out, "out");
    auto n = alg->value.boolean_count();
    if (!n) {
      throw mvk::Error(mvk::ErrorKind::kInvalidArgument,
                       "boolean count exceeds 64 bits");
    }
    *out = *n;
  });
}

mvk_status mvk_algebra_describe(const mvk_algebra* alg, char** out) {
  return guard([&] {
    require(alg, "algebra");
    require(out, "out");
    *out = dup(alg->value.str());
  });
}

mvk_status mvk_element_new(const mvk_algebra* alg, const int64_t* numerators,
                           size_t rank, mvk_element** out) {
  return guard([&] {
    require(alg, "algebra");
    require(out, "out");
    if (rank > 0) require(numerators, "numerators");
    *out = new mvk_element{alg->value.from_numerators(
        std::vector<std::int64_t>(numerators, numerators + rank))};
  });
}

void mvk_element_free(mvk_element* e) { delete e; }

mvk_status mvk_element_algebra(const mvk_element* e, mvk_algebra** out) {
  return guard([&] {
    require(e, "element");
    require(out, "out");
    *out = new mvk_algebra{e->value.algebra()};
  });
}

size_t mvk_element_rank(const mvk_element* e) {
  return e ? e->value.rank() : 0;
}

int64_t mvk_element_numerator(const mvk_element* e, size_t i) {
  if (!e || i >= e->value.rank()) return 0;
  return e->value.numerator(i);
}

mvk_status mvk_element_pretty(const mvk_element* e, char** out) {
  return guard([&] {
    require(e, "element");
    require(out, "out");
    *out = dup(e->value.pretty());
  });
}

mvk_status mvk_element_serialize(const mvk_element* e, char** out) {
  return guard([&] {
    require(e, "element");
    require(out, "out");
    *out = dup(mvk::to_document(e->value));
  });
}

mvk_status mvk_element_oplus(const mvk_element* a, const mvk_element* b,
                             mvk_element** out) {
  return binary(a, b, out, [](auto& x, auto& y) { return mvk::oplus(x, y); });
}

mvk_status mvk_element_odot(const mvk_element* a, const mvk_element* b,
                            mvk_element** out) {
  return binary(a, b, out, [](auto& x, auto& y) { return mvk::odot(x, y); });
}

mvk_status mvk_element_join(const mvk_element* a, const mvk_element* b,
                            mvk_element** out) {
  return binary(a, b, out, [](auto& x, auto& y) { return mvk::join(x, y); });
}

mvk_status mvk_element_meet(const mvk_element* a, const mvk_element* b,
                            mvk_element** out) {
  return binary(a, b, out, [](auto& x, auto& y) { return mvk::meet(x, y); });
}

mvk_status mvk_element_neg(const mvk_element* a, mvk_element** out) {
  return guard([&] {
    require(a, "a");
    require(out, "out");
    *out = new mvk_element{mvk::neg(a->value)};
  });
}

mvk_status mvk_element_chang_distance(const mvk_element* a,
                                      const mvk_element* b,
                                      mvk_element** out) {
  return binary(a, b, out,
                [](auto& x, auto& y) { return mvk::chang_distance(x, y); });
}

mvk_status mvk_element_below(const mvk_element* a, const mvk_element* b,
                             int* out) {
  return predicate(a, b, out,
                   [](auto& x, auto& y) { return mvk::below_order(x, y); });
}

mvk_status mvk_element_natural_leq(const mvk_element* a, const mvk_element* b,
                                   int* out) {
  return predicate(a, b, out,
                   [](auto& x, auto& y) { return mvk::natural_leq(x, y); });
}

mvk_status mvk_element_equal(const mvk_element* a, const mvk_element* b,
                             int* out) {
  return predicate(a, b, out, [](auto& x, auto& y) {
    mvk::require_same_algebra(x, y);
    return x == y;
  });
}

int mvk_element_is_boolean(const mvk_element* e) {
  return e && mvk::is_boolean(e->value) ? 1 : 0;
}

mvk_status mvk_trace_new(const mvk_element* start, mvk_trace** out) {
  return guard([&] {
    require(start, "start");
    require(out, "out");
    *out = new mvk_trace{mvk::game_fixpoint(start->value)};
  });
}

void mvk_trace_free(mvk_trace* t) { delete t; }

size_t mvk_trace_n(const mvk_trace* t) { return t ? t->value.n : 0; }

mvk_status mvk_trace_step(const mvk_trace* t, size_t i, mvk_element** out) {
  return guard([&] {
    require(t, "trace");
    require(out, "out");
    if (i > t->value.n) {
      throw mvk::Error(mvk::ErrorKind::kInvalidArgument,
                       "trace step " + std::to_string(i) + " beyond n = " +
                           std::to_string(t->value.n));
    }
    *out = new mvk_element{t->value.steps[i]};
  });
}

mvk_status mvk_central_cone(const mvk_element* a, mvk_element_list** out) {
  return guard([&] {
    require(a, "a");
    require(out, "out");
    *out = new mvk_element_list{mvk::central_cone(a->value)};
  });
}

void mvk_element_list_free(mvk_element_list* list) { delete list; }

size_t mvk_element_list_size(const mvk_element_list* list) {
  return list ? list->value.size() : 0;
}

mvk_status mvk_element_list_get(const mvk_element_list* list, size_t i,
                                mvk_element** out) {
  return guard([&] {
    require(list, "list");
    require(out, "out");
    if (i >= list->value.size()) {
      throw mvk::Error(mvk::ErrorKind::kInvalidArgument,
                       "list index out of range");
    }
    *out = new mvk_element{list->value[i]};
  });
}

mvk_status mvk_plfunc_sigma(mvk_plfunc** out) {
  return guard([&] {
    require(out, "out");
    *out = new mvk_plfunc{mvk::sigma_star()};
  });
}

void mvk_plfunc_free(mvk_plfunc* f) { delete f; }

size_t mvk_plfunc_piece_count(const mvk_plfunc* f) {
  return f ? f->value.points().size() - 1 : 0;
}

mvk_status mvk_plfunc_eval(const mvk_plfunc* f, const char* x, char** out) {
  return guard([&] {
    require(f, "function");
    require(x, "x");
    require(out, "out");
    *out = dup(mvk::pl_eval(f->value, mvk::Rational::parse(x)).str());
  });
}

mvk_status mvk_plfunc_serialize(const mvk_plfunc* f, char** out) {
  return guard([&] {
    require(f, "function");
    require(out, "out");
    *out = dup(mvk::to_document(f->value));
  });
}

void mvk_lgroup_element_free(mvk_lgroup_element* g) { delete g; }

mvk_status mvk_lgroup_element_pretty(const mvk_lgroup_element* g,
                                     char** out) {
  return guard([&] {
    require(g, "element");
    require(out, "out");
    *out = dup(g->value.pretty());
  });
}

mvk_status mvk_plot_graph(const mvk_plfunc* f, const char* format,
                          const char* path) {
  return guard([&] {
    require(f, "function");
    require(format, "format");
    const std::string fmt = format;
    if (fmt == "svg") {
      write_file(path, mvk::plot::graph_svg(f->value));
    } else if (fmt == "ppm") {
      write_file(path, mvk::plot::graph_ppm(f->value));
    } else {
      throw mvk::Error(mvk::ErrorKind::kInvalidArgument,
                       "unknown plot format '" + fmt + "'");
    }
  });
}

mvk_status mvk_plot_density(const char* term, size_t grid, const char* path) {
  return guard([&] {
    require(term, "term");
    write_file(path, mvk::plot::density_ppm(mvk::Term::parse(term), grid));
  });
}

size_t mvk_suite_count(void) { return mvk::verify::suite_names().size(); }

const char* mvk_suite_name(size_t i) {
  const auto& names = mvk::verify::suite_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

mvk_status mvk_verify(const char* suite, uint64_t max_carrier,
                      mvk_reports** out) {
  return guard([&] {
    require(suite, "suite");
    require(out, "out");
    *out = new mvk_reports{mvk::verify::run_suites(suite, max_carrier)};
  });
}

void mvk_reports_free(mvk_reports* r) { delete r; }

size_t mvk_reports_count(const mvk_reports* r) {
  return r ? r->value.size() : 0;
}

int mvk_reports_passed(const mvk_reports* r, size_t i) {
  return r && i < r->value.size() && r->value[i].passed() ? 1 : 0;
}

mvk_status mvk_reports_text(const mvk_reports* r, size_t i, char** out) {
  return guard([&] {
    require(r, "reports");
    require(out, "out");
    if (i >= r->value.size()) {
      throw mvk::Error(mvk::ErrorKind::kInvalidArgument,
                       "report index out of range");
    }
    *out = dup(r->value[i].text());
  });
}

mvk_status mvk_reports_json(const mvk_reports* r, size_t i, char** out) {
  return guard([&] {
    require(r, "reports");
    require(out, "out");
    if (i >= r->value.size()) {
      throw mvk::Error(mvk::ErrorKind::kInvalidArgument,
                       "report index out of range");
    }
    *out = dup(r->value[i].json());
  });
}

}  // extern "C"
