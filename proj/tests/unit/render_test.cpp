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

#include <regex>
#include <string>

#include <gtest/gtest.h>

#include "trajadapt/render.hpp"

namespace trajadapt {
namespace {

std::string points_of(const std::string& svg, const std::string& cls) {
  const std::regex re("class=\"" + cls + "\"[^>]*points=\"([^\"]*)\"");
  std::smatch m;
  return std::regex_search(svg, m, re) ? m[1].str() : std::string();
}

const Trajectory kTraj({{0, 0, 0, 1}, {1, 5, 0, 1}, {0, 10, 0, 1}});

TEST(RenderTest, IdentityDrawsCoincidentPolylines) {
  const std::string svg = render_svg(kTraj, kTraj, Scene());
  EXPECT_NE(svg.find("stroke=\"blue\""), std::string::npos);
  EXPECT_NE(svg.find("stroke=\"red\""), std::string::npos);
  const std::string a = points_of(svg, "original");
  ASSERT_FALSE(a.empty());
  EXPECT_EQ(a, points_of(svg, "adapted"));
}

TEST(RenderTest, WithoutAdaptedOnlyOriginal) {
  const std::string svg = render_svg(kTraj, std::nullopt, Scene());
  EXPECT_FALSE(points_of(svg, "original").empty());
  EXPECT_EQ(svg.find("class=\"adapted\""), std::string::npos);
}

TEST(RenderTest, ObjectsAreLabelledAndEscaped) {
  const std::string svg =
      render_svg(kTraj, std::nullopt, Scene({{"box", {2, 2, 0}}, {"a<b", {3, 3, 0}}}));
  EXPECT_NE(svg.find(">box</text>"), std::string::npos);
  EXPECT_NE(svg.find(">a&lt;b</text>"), std::string::npos);
  EXPECT_EQ(svg.find("a<b"), std::string::npos);
}

TEST(RenderTest, PointsStayInsideCanvas) {
  SvgOptions opt;
  const Trajectory far({{-500, 3, 0, 1}, {800, -90, 4, 1}});
  const std::string svg = render_svg(far, kTraj, Scene({{"x", {10, 1000, 0}}}), opt);
  const std::regex num(R"((-?\d+\.\d+),(-?\d+\.\d+))");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), num); it != std::sregex_iterator();
       ++it) {
    const double x = std::stod((*it)[1]);
    const double y = std::stod((*it)[2]);
    EXPECT_GE(x, 0);
    EXPECT_LE(x, opt.width);
    EXPECT_GE(y, 0);
    EXPECT_LE(y, opt.height);
  }
}

}  // namespace
}  // namespace trajadapt
