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

#include "trajadapt/script/builtins.hpp"

#include <array>

namespace trajadapt::script {

namespace {

using enum BuiltinId;

constexpr std::array kBuiltins = {
    BuiltinInfo{kGetTrajectory, "get_trajectory", 0, 0, "get_trajectory()",
                "returns the trajectory as a list of [x, y, z, velocity] "
                "lists (a fresh copy)"},
    BuiltinInfo{kDetectObjects, "detect_objects", 1, 1,
                "detect_objects(object_name)",
                "returns [x, y, z] coordinates if the object is present, "
                "else returns None"},
    BuiltinInfo{kLen, "len", 1, 1, "len(x)", "length of a list or string"},
    BuiltinInfo{kRange, "range", 1, 3, "range(stop) / range(start, stop[, step])",
                "list of integers; in a for loop it is iterated lazily"},
    BuiltinInfo{kAbs, "abs", 1, 1, "abs(x)", "absolute value"},
    BuiltinInfo{kMin, "min", 1, kVariadic, "min(a, b, ...) / min(list)",
                "smallest number"},
    BuiltinInfo{kMax, "max", 1, kVariadic, "max(a, b, ...) / max(list)",
                "largest number"},
    BuiltinInfo{kSqrt, "sqrt", 1, 1, "sqrt(x)", "square root"},
    BuiltinInfo{kSin, "sin", 1, 1, "sin(x)", "sine (radians)"},
    BuiltinInfo{kCos, "cos", 1, 1, "cos(x)", "cosine (radians)"},
    BuiltinInfo{kAtan2, "atan2", 2, 2, "atan2(y, x)", "angle of (x, y) in radians"},
    BuiltinInfo{kFloor, "floor", 1, 1, "floor(x)", "round down to an integer"},
    BuiltinInfo{kRound, "round", 1, 1, "round(x)",
                "round to the nearest integer (ties to even)"},
    BuiltinInfo{kInt, "int", 1, 1, "int(x)", "truncate toward zero"},
    BuiltinInfo{kNorm3, "norm3", 1, 1, "norm3(a)", "length of a 3-vector"},
    BuiltinInfo{kDist3, "dist3", 2, 2, "dist3(a, b)",
                "Euclidean distance between two points (uses the first three "
                "components)"},
    BuiltinInfo{kLerp, "lerp", 3, 3, "lerp(a, b, t)",
                "a + t * (b - a) component-wise on 3-vectors"},
    BuiltinInfo{kArcLengthParams, "arc_length_params", 1, 1,
                "arc_length_params(traj)",
                "normalized cumulative path length per waypoint, 0 at the "
                "start and 1 at the goal"},
    BuiltinInfo{kNearestIndex, "nearest_index", 2, 2, "nearest_index(traj, point)",
                "index of the waypoint closest to point (smallest index on ties)"},
    BuiltinInfo{kSmoothTrajectory, "smooth_trajectory", 2, 2,
                "smooth_trajectory(traj, window)",
                "centered moving average of positions and velocities with an "
                "odd window; start and goal unchanged"},
    BuiltinInfo{kResampleTrajectory, "resample_trajectory", 2, 2,
                "resample_trajectory(traj, n)",
                "n waypoints evenly spaced along the path"},
    BuiltinInfo{kEnforceMinDistance, "enforce_min_distance", 3, 3,
                "enforce_min_distance(traj, center, d)",
                "pushes waypoints out to at least distance d from center and "
                "smooths"},
    BuiltinInfo{kScaleSpeedNear, "scale_speed_near", 5, 5,
                "scale_speed_near(traj, center, radius, factor, absolute)",
                "changes velocity within radius of center, tapering smoothly to "
                "no change at 2*radius; absolute=True sets a target speed, "
                "False multiplies the original speed"},
    BuiltinInfo{kTruncateAtNearest, "truncate_at_nearest", 3, 3,
                "truncate_at_nearest(traj, center, ramp)",
                "stops at the waypoint closest to center, removing later "
                "waypoints and ramping velocity to 0 over the last ramp "
                "waypoints"},
    BuiltinInfo{kAppendSpiral, "append_spiral", 4, 4,
                "append_spiral(traj, max_radius, turns, n_points)",
                "appends a horizontal spiral around the goal, radius growing "
                "to max_radius, at the goal velocity"},
    BuiltinInfo{kTranslateBlend, "translate_blend", 3, 3,
                "translate_blend(traj, offset, mode)",
                "shifts by offset [dx, dy, dz] weighted along the path; mode is "
                "'uniform', 'fix_start', 'fix_goal' or 'fix_both'"},
    BuiltinInfo{kRadialRescale, "radial_rescale", 4, 4,
                "radial_rescale(traj, center, factor, preserve_endpoints)",
                "scales each point's distance from center by factor; with "
                "preserve_endpoints=True start and goal stay fixed"},
};

}  // namespace

std::span<const BuiltinInfo> builtin_table() { return kBuiltins; }

const BuiltinInfo* find_builtin(std::string_view name) {
  for (const auto& b : kBuiltins) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

}  // namespace trajadapt::script
