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

// Geometry metrics and the deterministic reference transforms. These are the
// builtins exposed to adaptation scripts and the oracles the tests compare
// script output against. All functions are pure.

#ifndef TRAJADAPT_TRANSFORMS_HPP_
#define TRAJADAPT_TRANSFORMS_HPP_

#include <cstddef>
#include <vector>

#include "trajadapt/trajectory.hpp"

namespace trajadapt {

/// Normalized cumulative chord length: s[0] = 0, s[N-1] = 1. Falls back to
/// i/(N-1) when the path has zero length.
std::vector<double> arc_length_params(const Trajectory& traj);

double chord_length(const Trajectory& traj);

struct NearestWaypoint {
  std::size_t index = 0;
  double distance = 0.0;
};

/// Closest waypoint to `point`; ties go to the smallest index.
NearestWaypoint nearest_index(const Trajectory& traj, const Vec3& point);

/// Centered moving average of positions and speeds. Near the ends the window
/// shrinks symmetrically so it stays centered; the first and last waypoints
/// are pinned. `window` must be odd and >= 1.
Trajectory smooth(const Trajectory& traj, int window);

/// Max normalized second difference over interior waypoints. Requires N >= 3.
double roughness(const Trajectory& traj);

/// Discrete Fréchet distance over waypoint positions.
double discrete_frechet(const Trajectory& a, const Trajectory& b);

/// `n` waypoints at uniform arc-length spacing, linear interpolation of
/// position and speed, endpoints copied exactly.
Trajectory resample(const Trajectory& traj, int n);

/// p_i + w(s_i) * offset with the blend weight chosen by `mode`.
Trajectory translate_blend(const Trajectory& traj, const Vec3& offset,
                           BlendMode mode);

/// Pushes points away from (factor > 1) or toward (factor < 1) `center`.
/// With `preserve_endpoints` the displacement is tapered by 4s(1-s).
Trajectory radial_rescale(const Trajectory& traj, const Vec3& center,
                          double factor, bool preserve_endpoints);

/// Project-then-smooth until every waypoint is at least `min_distance` from
/// `center`. Capped at 5 rounds followed by an unsmoothed projection pass.
Trajectory enforce_min_distance(const Trajectory& traj, const Vec3& center,
                                double min_distance);

/// Radial speed falloff: 1 inside `radius`, cosine taper out to 2*radius,
/// 0 beyond.
double speed_falloff(double rho);

/// Scales speeds near `center`. In absolute mode `factor` is a target speed;
/// otherwise it multiplies the original speed.
Trajectory scale_speed_near(const Trajectory& traj, const Vec3& center,
                            double radius, double factor, bool absolute);

/// Drops everything after the waypoint nearest to `center` and ramps the
/// speed to zero over the last `ramp` kept waypoints.
Trajectory truncate_at_nearest(const Trajectory& traj, const Vec3& center,
                               int ramp);

/// Appends an Archimedean spiral in the goal's horizontal plane.
Trajectory append_spiral(const Trajectory& traj, double max_radius,
                         double turns, int n_points);

}  // namespace trajadapt

#endif  // TRAJADAPT_TRANSFORMS_HPP_
