// Copyright 2026 The trajadapt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "trajadapt/render.hpp"

#include <algorithm>
#include <cstdio>

namespace trajadapt {

namespace {

struct Bounds {
  double min_x, max_x, min_y, max_y;
  void add(double x, double y) {
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Trajectory& original,
                       const std::optional<Trajectory>& adapted,
                       const Scene& scene, const SvgOptions& opt) {
  Bounds b{original.front().x, original.front().x, original.front().y,
           original.front().y};
  for (const auto& w : original.waypoints()) b.add(w.x, w.y);
  if (adapted) {
    for (const auto& w : adapted->waypoints()) b.add(w.x, w.y);
  }
  for (const auto& o : scene.objects()) b.add(o.position.x, o.position.y);

  // Equal scale on both axes, centered.
  const double span =
      std::max({b.max_x - b.min_x, b.max_y - b.min_y, 1e-9});
  const double scale =
      std::min(opt.width, opt.height) - 2.0 * opt.margin;
  const double cx = 0.5 * (b.min_x + b.max_x);
  const double cy = 0.5 * (b.min_y + b.max_y);
  auto px = [&](double x) { return opt.width / 2.0 - (x - cx) / span * scale; };
  auto py = [&](double y) { return opt.height / 2.0 - (y - cy) / span * scale; };

  auto polyline = [&](const Trajectory& t, const char* color,
                      const char* cls) {
    std::string pts;
    for (const auto& w : t.waypoints()) {
      if (!pts.empty()) pts += ' ';
      pts += fmt(px(w.x)) + "," + fmt(py(w.y));
    }
    return std::string("  <polyline class=\"") + cls + "\" fill=\"none\" stroke=\"" +
           color + "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
  };

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(opt.width) + "\" height=\"" +
                    std::to_string(opt.height) + "\" viewBox=\"0 0 " +
                    std::to_string(opt.width) + " " +
                    std::to_string(opt.height) + "\">\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "  <text x=\"8\" y=\"16\" font-size=\"12\" fill=\"#444\">top view "
         "(XY), +X left, +Y up</text>\n";
  svg += polyline(original, "blue", "original");
  if (adapted) svg += polyline(*adapted, "red", "adapted");
  for (const auto& o : scene.objects()) {
    const double x = px(o.position.x);
    const double y = py(o.position.y);
    svg += "  <circle class=\"object\" cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) +
           "\" r=\"5\" fill=\"black\"/>\n";
    svg += "  <text x=\"" + fmt(x + 7) + "\" y=\"" + fmt(y - 7) +
           "\" font-size=\"12\">" + escape(o.label) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace trajadapt
