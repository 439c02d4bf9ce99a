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

#include <gtest/gtest.h>

#include <regex>

#include "mvk/error.hpp"
#include "mvk/plot.hpp"
#include "support.hpp"

namespace mvk {
namespace {

using testing::q;

std::string data_points(const std::string& svg) {
  std::smatch m;
  EXPECT_TRUE(std::regex_search(svg, m, std::regex("data-points=\"([^\"]*)\"")));
  return m[1];
}

TEST(GraphSvg, SigmaBreakpoints) {
  auto svg = plot::graph_svg(sigma_star());
  EXPECT_EQ(data_points(svg), "0/1,0/1 1/3,0/1 2/3,1/1 1/1,1/1");
  EXPECT_EQ(svg, plot::graph_svg(sigma_star()));
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
}

TEST(GraphSvg, ConstantHalfIsHorizontal) {
  auto svg = plot::graph_svg(PLFunction::constant(q(1, 2)));
  EXPECT_EQ(data_points(svg), "0/1,1/2 1/1,1/2");
  std::smatch m;
  ASSERT_TRUE(std::regex_search(
      svg, m, std::regex(" points=\"([0-9.]+),([0-9.]+) ([0-9.]+),([0-9.]+)\"")));
  EXPECT_EQ(m[2], m[4]);
}

TEST(GraphPpm, HeaderAndDeterminism) {
  auto ppm = plot::graph_ppm(sigma_star(), 100);
  const std::string header = "P6\n100 100\n255\n";
  ASSERT_EQ(ppm.rfind(header, 0), 0u);
  EXPECT_EQ(ppm.size(), header.size() + 100u * 100u * 3u);
  EXPECT_EQ(ppm, plot::graph_ppm(sigma_star(), 100));
  EXPECT_THROW(plot::graph_ppm(sigma_star(), 10), Error);
}

TEST(GraphPpm, CurvePixelsLieOnTheGraph) {
  // The bottom-left margin corner is (0,0) and sigma* is 0 up to 1/3, so
  // the bottom row of the plot area is black from the left edge.
  const int size = 100, margin = 16, hi = size - 1 - margin;
  auto ppm = plot::graph_ppm(sigma_star(), size);
  const std::size_t header = std::string("P6\n100 100\n255\n").size();
  auto px = [&](int x, int y) {
    return static_cast<unsigned char>(ppm[header + (std::size_t(y) * size + x) * 3]);
  };
  EXPECT_EQ(px(margin, hi), 0);
  EXPECT_EQ(px(margin + 10, hi), 0);
  EXPECT_EQ(px(hi, margin), 0);
  EXPECT_EQ(px(margin + 5, margin + 5), 255);
}

double grey_fraction(const std::vector<std::uint8_t>& g) {
  std::size_t grey = 0;
  for (auto v : g) grey += v != 0 && v != 255;
  return static_cast<double>(grey) / static_cast<double>(g.size());
}

TEST(Density, GeneratorValues) {
  auto g = plot::density_gray(Term::var(), 3);
  // Rows run from y = 1 down to y = 0; columns from x = 0.
  EXPECT_EQ(g, (std::vector<std::uint8_t>{0, 128, 255, 128, 0, 128, 255, 128, 0}));
}

TEST(Density, GreyZoneThinsUnderSigma) {
  Term t = Term::var();
  double previous = grey_fraction(plot::density_gray(t, 256));
  EXPECT_GT(previous, 0.9);
  for (int i = 0; i < 4; ++i) {
    t = t.substitute(Term::sigma());
    double now = grey_fraction(plot::density_gray(t, 256));
    EXPECT_LT(now, previous);
    previous = now;
  }
  EXPECT_LT(previous, 0.05);
}

TEST(Density, PpmLayout) {
  auto ppm = plot::density_ppm(Term::parse("sigma(sigma(X))"), 256);
  const std::string header = "P6\n256 256\n255\n";
  ASSERT_EQ(ppm.rfind(header, 0), 0u);
  EXPECT_EQ(ppm.size(), header.size() + 256u * 256u * 3u);
  EXPECT_EQ(ppm, plot::density_ppm(Term::parse("sigma(sigma(X))"), 256));
  EXPECT_THROW(plot::density_ppm(Term::var(), 1), Error);
}

}  // namespace
}  // namespace mvk
