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

#include <string>
#include <string_view>
#include <variant>

#include "mvk/lgroup.hpp"
#include "mvk/mcnaughton.hpp"
#include "mvk/mv.hpp"

namespace mvk {

// Text documents, one JSON object each, discriminated by "kind":
//
//   {"kind":"chain_product","denominators":[2,3,5]}
//   {"kind":"element","denominators":[2,3],"values":["1/2","1/3"]}
//   {"kind":"pl1","points":[["0/1","0/1"],["1/1","1/1"]]}
//   {"kind":"lgroup_element","unit":[2,3],"coords":[1,2]}
//
// Rationals are "p/q" strings in lowest terms. "denominators" is optional
// on input for elements; when absent each coordinate lives in the smallest
// chain containing its value. pl1 documents may carry
// "class":"rational" to admit non-integer pieces.

enum class DocumentKind { kChainProduct, kElement, kPL1, kLGroupElement };

using Document = std::variant<ChainProduct, MvElement, PLFunction,
                              LGroupElement>;

/// Throws ParseError (malformed JSON, with byte offset) or InvariantError
/// (well-formed JSON describing an invalid value).
Document parse_document(std::string_view text);

DocumentKind kind_of(const Document& doc);
std::string_view kind_name(DocumentKind kind);

std::string to_document(const ChainProduct& algebra);
std::string to_document(const MvElement& element);
std::string to_document(const PLFunction& f);
std::string to_document(const LGroupElement& g);
std::string to_document(const Document& doc);

}  // namespace mvk
