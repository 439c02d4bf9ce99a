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

#include "mvk/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "mvk/error.hpp"

namespace mvk::plot {
namespace {

constexpr int kMargin = 16;

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

void check_size(int size) {
  if (size < 2 * kMargin + 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "plot size must be at least " +
                    std::to_string(2 * kMargin + 2));
  }
}

class Raster {
 public:
  Raster(int w, int h) : w_(w), h_(h), rgb_(std::size_t(w) * h * 3, 255) {}

  void set(int x, int y, std::uint8_t v) {
    if (x < 0 || y < 0 || x >= w_ || y >= h_) return;
    std::size_t at = (std::size_t(y) * w_ + x) * 3;
    rgb_[at] = rgb_[at + 1] = rgb_[at + 2] = v;
  }

  void line(int x0, int y0, int x1, int y1, std::uint8_t v) {
    int dx = std::abs(x1 - x0), sx = x0 < x1 ? 1 : -1;
    int dy = -std::abs(y1 - y0), sy = y0 < y1 ? 1 : -1;
    int err = dx + dy;
    for (;;) {
      set(x0, y0, v);
      if (x0 == x1 && y0 == y1) break;
      int e2 = 2 * err;
      if (e2 >= dy) { err += dy; x0 += sx; }
      if (e2 <= dx) { err += dx; y0 += sy; }
    }
  }

  std::string ppm() const {
    std::string out = "P6\n" + std::to_string(w_) + " " + std::to_string(h_) +
                      "\n255\n";
    out.append(rgb_.begin(), rgb_.end());
    return out;
  }

 private:
  int w_, h_;
  std::vector<char> rgb_;
};

}  // namespace

std::string graph_svg(const PLFunction& f, int size) {
  check_size(size);
  const double span = size - 2 * kMargin;
  auto px = [&](const Rational& x) { return kMargin + x.to_double() * span; };
  auto py = [&](const Rational& y) {
    return kMargin + (1 - y.to_double()) * span;
  };
  std::string exact, drawn;
  for (const auto& p : f.points()) {
    if (!exact.empty()) {
      exact += ' ';
      drawn += ' ';
    }
    exact += p.x.str() + "," + p.y.str();
    drawn += fixed(px(p.x)) + "," + fixed(py(p.y));
  }
  const std::string s = std::to_string(size);
  const std::string m = std::to_string(kMargin);
  const std::string w = fixed(span);
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + s +
         "\" height=\"" + s + "\" viewBox=\"0 0 " + s + " " + s + "\">\n";
  out += "  <rect x=\"0\" y=\"0\" width=\"" + s + "\" height=\"" + s +
         "\" fill=\"#ffffff\"/>\n";
  out += "  <rect x=\"" + m + "\" y=\"" + m + "\" width=\"" + w +
         "\" height=\"" + w +
         "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  out += "  <polyline class=\"graph\" data-points=\"" + exact +
         "\" points=\"" + drawn +
         "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
  out += "</svg>\n";
  return out;
}

std::string graph_ppm(const PLFunction& f, int size) {
  check_size(size);
  const int lo = kMargin, hi = size - 1 - kMargin;
  Raster r(size, size);
  r.line(lo, lo, hi, lo, 160);
  r.line(hi, lo, hi, hi, 160);
  r.line(hi, hi, lo, hi, 160);
  r.line(lo, hi, lo, lo, 160);
  auto px = [&](const Rational& x) {
    return static_cast<int>(std::lround(lo + x.to_double() * (hi - lo)));
  };
  auto py = [&](const Rational& y) {
    return static_cast<int>(std::lround(hi - y.to_double() * (hi - lo)));
  };
  const auto& pts = f.points();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    r.line(px(pts[i].x), py(pts[i].y), px(pts[i + 1].x), py(pts[i + 1].y), 0);
  }
  return r.ppm();
}

double generator(double x, double y) { return std::fabs(x + y - 1); }

std::vector<std::uint8_t> density_gray(const Term& t, std::size_t grid) {
  if (grid < 2) {
    throw Error(ErrorKind::kInvalidArgument, "grid must be >= 2");
  }
  auto neg = [](double a) { return 1 - a; };
  auto oplus = [](double a, double b) { return std::min(1.0, a + b); };
  std::vector<std::uint8_t> out(grid * grid);
  const double step = 1.0 / static_cast<double>(grid - 1);
  for (std::size_t j = 0; j < grid; ++j) {
    const double y = 1 - static_cast<double>(j) * step;
    for (std::size_t i = 0; i < grid; ++i) {
      const double x = static_cast<double>(i) * step;
      double v = t.evaluate(generator(x, y), neg, oplus);
      v = std::clamp(v, 0.0, 1.0);
      out[j * grid + i] = static_cast<std::uint8_t>(std::lround(255 * v));
    }
  }
  return out;
}

std::string density_ppm(const Term& t, std::size_t grid) {
  const auto gray = density_gray(t, grid);
  std::string out = "P6\n" + std::to_string(grid) + " " +
                    std::to_string(grid) + "\n255\n";
  out.reserve(out.size() + gray.size() * 3);
  for (auto g : gray) out.append(3, static_cast<char>(g));
  return out;
}

}  // namespace mvk::plot
