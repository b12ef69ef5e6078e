// Copyright 2026 The binpack Authors.
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

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

#include "binpack/io.hpp"

namespace binpack {

namespace {

constexpr std::array<const char*, 10> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd", "#8c564b",
                                                  "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8"};
constexpr double kMargin = 20.0;
constexpr double kGap = 20.0;
constexpr double kBarHeight = 40.0;
constexpr double kTarget = 300.0;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

const char* color_of(int category) {
  const int n = static_cast<int>(kPalette.size());
  return kPalette[((category % n) + n) % n];
}

class Canvas {
 public:
  void bin(int j, double x, double y, double w, double h) {
    body_ += "<rect class=\"bin\" data-bin=\"" + std::to_string(j) + "\" x=\"" + fmt(x) + "\" y=\"" + fmt(y) +
             "\" width=\"" + fmt(w) + "\" height=\"" + fmt(h) +
             "\" fill=\"none\" stroke=\"red\" stroke-width=\"1.5\"/>\n";
    extend(x + w, y + h);
  }

  void item(int i, int j, int category, double x, double y, double w, double h) {
    body_ += "<rect class=\"item\" data-item=\"" + std::to_string(i) + "\" data-bin=\"" + std::to_string(j) +
             "\" x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" width=\"" + fmt(w) + "\" height=\"" + fmt(h) +
             "\" fill=\"" + color_of(category) + "\" fill-opacity=\"0.7\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    body_ += "<text class=\"label\" x=\"" + fmt(x + w / 2) + "\" y=\"" + fmt(y + h / 2) +
             "\" font-size=\"9\" text-anchor=\"middle\" dominant-baseline=\"middle\">" + std::to_string(category) +
             "</text>\n";
    extend(x + w, y + h);
  }

  void caption(double x, double y, const std::string& text) {
    body_ += "<text class=\"caption\" x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" font-size=\"11\">" + text +
             "</text>\n";
  }

  std::string finish() const {
    const double w = max_x_ + kMargin;
    const double h = max_y_ + kMargin;
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w) + "\" height=\"" + fmt(h) +
           "\" viewBox=\"0 0 " + fmt(w) + " " + fmt(h) + "\">\n" + body_ + "</svg>\n";
  }

 private:
  void extend(double x, double y) {
    max_x_ = std::max(max_x_, x);
    max_y_ = std::max(max_y_, y);
  }

  std::string body_;
  double max_x_ = 0;
  double max_y_ = 0;
};

int placed_count(const Instance& inst, const Solution& s) {
  return std::min(inst.num_items(), static_cast<int>(s.items.size()));
}

bool drawable(const Instance& inst, const Placement& p) { return p.bin >= 0 && p.bin < inst.num_bins(); }

// Draws one projection of every item in bin j onto axes (h_axis, v_axis).
// The vertical axis points up.
void projection(Canvas& canvas, const Instance& inst, const Solution& s, int j, int h_axis, int v_axis,
                double left, double top, double scale) {
  const Bin& b = inst.bin(j);
  const double bw = static_cast<double>(b.dim(h_axis)) * scale;
  const double bh = static_cast<double>(b.dim(v_axis)) * scale;
  const double offset = h_axis == 0 ? static_cast<double>(inst.x_offset(j)) : 0.0;
  canvas.bin(j, left, top, bw, bh);
  for (int i = 0; i < placed_count(inst, s); ++i) {
    const Placement& p = s.items[i];
    if (!drawable(inst, p) || p.bin != j) continue;
    const double x = left + (p.position[h_axis] - offset) * scale;
    const double w = p.size[h_axis] * scale;
    const double h = p.size[v_axis] * scale;
    const double y = top + bh - p.position[v_axis] * scale - h;
    canvas.item(i, j, inst.item(i).category, x, y, w, h);
  }
}

}  // namespace

std::string render_svg(const Instance& inst, const Solution& s) {
  const int d = inst.dimensionality();
  Length largest = 1;
  for (const Bin& b : inst.bins()) {
    for (int a = 0; a < d; ++a) largest = std::max(largest, b.dim(a));
  }
  const double scale = kTarget / static_cast<double>(largest);
  Canvas canvas;

  if (d == 1) {
    double top = kMargin;
    for (int j = 0; j < inst.num_bins(); ++j) {
      const double bw = static_cast<double>(inst.bin(j).length) * scale;
      canvas.caption(kMargin, top - 4, "bin " + std::to_string(j));
      canvas.bin(j, kMargin, top, bw, kBarHeight);
      for (int i = 0; i < placed_count(inst, s); ++i) {
        const Placement& p = s.items[i];
        if (!drawable(inst, p) || p.bin != j) continue;
        const double x = kMargin + (p.position[0] - static_cast<double>(inst.x_offset(j))) * scale;
        canvas.item(i, j, inst.item(i).category, x, top, p.size[0] * scale, kBarHeight);
      }
      top += kBarHeight + kGap;
    }
  } else if (d == 2) {
    double left = kMargin;
    for (int j = 0; j < inst.num_bins(); ++j) {
      canvas.caption(left, kMargin - 4, "bin " + std::to_string(j));
      projection(canvas, inst, s, j, 0, 1, left, kMargin, scale);
      left += static_cast<double>(inst.bin(j).length) * scale + kGap;
    }
  } else {
    double top = kMargin;
    for (int j = 0; j < inst.num_bins(); ++j) {
      const Bin& b = inst.bin(j);
      const double l = static_cast<double>(b.length) * scale;
      const double w = static_cast<double>(b.width) * scale;
      const double h = static_cast<double>(b.height) * scale;
      double left = kMargin;
      canvas.caption(left, top - 4, "bin " + std::to_string(j) + " top");
      projection(canvas, inst, s, j, 0, 1, left, top, scale);
      left += l + kGap;
      canvas.caption(left, top - 4, "bin " + std::to_string(j) + " front");
      projection(canvas, inst, s, j, 0, 2, left, top, scale);
      left += l + kGap;
      canvas.caption(left, top - 4, "bin " + std::to_string(j) + " side");
      projection(canvas, inst, s, j, 1, 2, left, top, scale);
      top += std::max({w, h}) + 2 * kGap;
    }
  }
  return canvas.finish();
}

}  // namespace binpack
