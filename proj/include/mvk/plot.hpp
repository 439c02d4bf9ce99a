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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mvk/mcnaughton.hpp"
#include "mvk/term.hpp"

namespace mvk::plot {

/// SVG graph of f on the unit square. The exact breakpoints are carried in
/// a data-points attribute ("x,y x,y ..." with p/q rationals) next to the
/// rendered polyline. Output depends only on f and size.
std::string graph_svg(const PLFunction& f, int size = 512);

/// Binary PPM (P6) graph of f: white background, black axes box, the graph
/// drawn as straight segments between breakpoints.
std::string graph_ppm(const PLFunction& f, int size = 256);

/// Built-in two-variable generator for density plots, |x + y - 1|.
double generator(double x, double y);

/// Row-major grid x grid gray levels of t applied to the generator. Column i
/// samples x = i / (grid - 1); row j samples y = 1 - j / (grid - 1), so the
/// top row is y = 1. Gray level is round(255 v).
std::vector<std::uint8_t> density_gray(const Term& t, std::size_t grid);

/// density_gray as a binary PPM (P6).
std::string density_ppm(const Term& t, std::size_t grid);

}  // namespace mvk::plot
