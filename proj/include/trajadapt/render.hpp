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

#ifndef TRAJADAPT_RENDER_HPP_
#define TRAJADAPT_RENDER_HPP_

#include <optional>
#include <string>

#include "trajadapt/trajectory.hpp"

namespace trajadapt {

struct SvgOptions {
  int width = 640;
  int height = 640;
  int margin = 40;
};

/// Top-down (XY) plot: original polyline in blue, adapted in red, scene
/// objects as labeled markers. +X points left in the world frame, so the
/// horizontal axis is mirrored to keep "left" on the left of the image.
std::string render_svg(const Trajectory& original,
                       const std::optional<Trajectory>& adapted,
                       const Scene& scene, const SvgOptions& options = {});

}  // namespace trajadapt

#endif  // TRAJADAPT_RENDER_HPP_
