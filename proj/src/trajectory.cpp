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

#include "trajadapt/trajectory.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_set>

namespace trajadapt {

namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

Trajectory::Trajectory(std::vector<Waypoint> waypoints)
    : waypoints_(std::move(waypoints)) {
  if (waypoints_.size() < 2) {
    throw std::invalid_argument("trajectory needs at least 2 waypoints, got " +
                                std::to_string(waypoints_.size()));
  }
  for (std::size_t i = 0; i < waypoints_.size(); ++i) {
    if (!waypoints_[i].valid()) {
      throw std::invalid_argument(
          "waypoint " + std::to_string(i) +
          " is invalid (components must be finite and speed >= 0)");
    }
  }
}

std::vector<Vec3> Trajectory::positions() const {
  std::vector<Vec3> out;
  out.reserve(waypoints_.size());
  for (const auto& w : waypoints_) out.push_back(w.position());
  return out;
}

Scene::Scene(std::vector<SceneObject> objects,
             std::optional<std::string> description)
    : objects_(std::move(objects)), description_(std::move(description)) {
  std::unordered_set<std::string> seen;
  for (const auto& obj : objects_) {
    if (obj.label.empty()) {
      throw std::invalid_argument("scene object label must be nonempty");
    }
    if (!obj.position.finite()) {
      throw std::invalid_argument("scene object '" + obj.label +
                                  "' has a non-finite position");
    }
    if (!seen.insert(lowercase(obj.label)).second) {
      throw std::invalid_argument("duplicate scene object label '" +
                                  obj.label + "'");
    }
  }
}

std::optional<Vec3> Scene::find(std::string_view label) const {
  const std::string key = lowercase(label);
  for (const auto& obj : objects_) {
    if (lowercase(obj.label) == key) return obj.position;
  }
  return std::nullopt;
}

std::string_view to_string(BlendMode mode) {
  switch (mode) {
    case BlendMode::kUniform:
      return "uniform";
    case BlendMode::kFixStart:
      return "fix_start";
    case BlendMode::kFixGoal:
      return "fix_goal";
    case BlendMode::kFixBoth:
      return "fix_both";
  }
  return "uniform";
}

std::optional<BlendMode> parse_blend_mode(std::string_view name) {
  if (name == "uniform") return BlendMode::kUniform;
  if (name == "fix_start") return BlendMode::kFixStart;
  if (name == "fix_goal") return BlendMode::kFixGoal;
  if (name == "fix_both") return BlendMode::kFixBoth;
  return std::nullopt;
}

}  // namespace trajadapt
