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

#ifndef TRAJADAPT_TRAJECTORY_HPP_
#define TRAJADAPT_TRAJECTORY_HPP_

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace trajadapt {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Vec3 operator*(double s, const Vec3& a) {
    return {s * a.x, s * a.y, s * a.z};
  }
  friend Vec3 operator*(const Vec3& a, double s) { return s * a; }
  friend bool operator==(const Vec3&, const Vec3&) = default;

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }
  bool finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }
};

inline double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

/// A position in the world frame (meters) with a scalar path speed (m/s).
struct Waypoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double v = 0.0;

  Vec3 position() const { return {x, y, z}; }
  void set_position(const Vec3& p) {
    x = p.x;
    y = p.y;
    z = p.z;
  }
  bool valid() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z) &&
           std::isfinite(v) && v >= 0.0;
  }
  friend bool operator==(const Waypoint&, const Waypoint&) = default;
};

/// Ordered, validated sequence of at least two waypoints. Immutable once
/// constructed; transforms return new trajectories.
class Trajectory {
 public:
  /// Throws std::invalid_argument if fewer than two waypoints are given or
  /// any waypoint is non-finite or has negative speed.
  explicit Trajectory(std::vector<Waypoint> waypoints);

  std::span<const Waypoint> waypoints() const { return waypoints_; }
  std::size_t size() const { return waypoints_.size(); }
  const Waypoint& operator[](std::size_t i) const { return waypoints_[i]; }
  const Waypoint& front() const { return waypoints_.front(); }
  const Waypoint& back() const { return waypoints_.back(); }

  std::vector<Vec3> positions() const;

  friend bool operator==(const Trajectory&, const Trajectory&) = default;

 private:
  std::vector<Waypoint> waypoints_;
};

struct SceneObject {
  std::string label;
  Vec3 position;

  friend bool operator==(const SceneObject&, const SceneObject&) = default;
};

/// Labeled objects plus an optional prose description of the environment.
class Scene {
 public:
  Scene() = default;
  /// Throws std::invalid_argument on empty or duplicate labels and
  /// non-finite positions.
  explicit Scene(std::vector<SceneObject> objects,
                 std::optional<std::string> description = std::nullopt);

  std::span<const SceneObject> objects() const { return objects_; }
  const std::optional<std::string>& description() const {
    return description_;
  }
  /// Case-insensitive label lookup.
  std::optional<Vec3> find(std::string_view label) const;

  friend bool operator==(const Scene&, const Scene&) = default;

 private:
  std::vector<SceneObject> objects_;
  std::optional<std::string> description_;
};

enum class BlendMode { kUniform, kFixStart, kFixGoal, kFixBoth };

std::string_view to_string(BlendMode mode);
/// Accepts "uniform", "fix_start", "fix_goal", "fix_both".
std::optional<BlendMode> parse_blend_mode(std::string_view name);

}  // namespace trajadapt

#endif  // TRAJADAPT_TRAJECTORY_HPP_
