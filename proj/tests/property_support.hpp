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

// Random inputs and per-case invariant checks for the transform property
// suites. Each check returns an empty string on success, else a description
// of the violation.

#ifndef TRAJADAPT_TESTS_PROPERTY_SUPPORT_HPP_
#define TRAJADAPT_TESTS_PROPERTY_SUPPORT_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "trajadapt/transforms.hpp"
#include "trajadapt/trajectory.hpp"

namespace trajadapt::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Vec3 random_point(Rng& rng, double extent = 10.0) {
  return {uniform(rng, -extent, extent), uniform(rng, -extent, extent),
          uniform(rng, -extent, extent)};
}

inline Trajectory random_trajectory(Rng& rng, int min_n = 2, int max_n = 30) {
  const int n = uniform_int(rng, min_n, max_n);
  std::vector<Waypoint> wps;
  for (int i = 0; i < n; ++i) {
    const Vec3 p = random_point(rng);
    wps.push_back({p.x, p.y, p.z, uniform(rng, 0.0, 3.0)});
  }
  return Trajectory(std::move(wps));
}

inline bool same_waypoint(const Waypoint& a, const Waypoint& b) {
  return a.x == b.x && a.y == b.y && a.z == b.z && a.v == b.v;
}

/// Recursive coupling cost over all monotone couplings, no memoization.
inline double brute_force_frechet(const Trajectory& a, const Trajectory& b,
                                  std::size_t i, std::size_t j) {
  const double d = distance(a[i].position(), b[j].position());
  if (i == 0 && j == 0) return d;
  if (i == 0) return std::max(d, brute_force_frechet(a, b, 0, j - 1));
  if (j == 0) return std::max(d, brute_force_frechet(a, b, i - 1, 0));
  const double best = std::min({brute_force_frechet(a, b, i - 1, j),
                                brute_force_frechet(a, b, i - 1, j - 1),
                                brute_force_frechet(a, b, i, j - 1)});
  return std::max(d, best);
}

inline double brute_force_frechet(const Trajectory& a, const Trajectory& b) {
  return brute_force_frechet(a, b, a.size() - 1, b.size() - 1);
}

inline std::string check_frechet_case(Rng& rng) {
  const Trajectory a = random_trajectory(rng, 2, 6);
  const Trajectory b = random_trajectory(rng, 2, 6);
  const double got = discrete_frechet(a, b);
  const double want = brute_force_frechet(a, b);
  if (got != want) {
    std::ostringstream os;
    os.precision(17);
    os << "frechet " << got << " != brute force " << want;
    return os.str();
  }
  return {};
}

inline std::string check_blend_case(Rng& rng, BlendMode mode) {
  const Trajectory t = random_trajectory(rng);
  const Vec3 off = random_point(rng, 50.0);
  const Trajectory out = translate_blend(t, off, mode);
  if (out.size() != t.size()) return "size changed";
  const bool pin_start = mode == BlendMode::kFixStart || mode == BlendMode::kFixBoth;
  const bool pin_goal = mode == BlendMode::kFixGoal || mode == BlendMode::kFixBoth;
  if (pin_start && !same_waypoint(out.front(), t.front())) return "start moved";
  if (pin_goal && !same_waypoint(out.back(), t.back())) return "goal moved";
  if (mode == BlendMode::kFixStart &&
      distance(out.back().position(), t.back().position() + off) > 1e-9) {
    return "goal not shifted by the full offset";
  }
  if (mode == BlendMode::kFixGoal &&
      distance(out.front().position(), t.front().position() + off) > 1e-9) {
    return "start not shifted by the full offset";
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (out[i].v != t[i].v) return "velocity changed";
    if (mode == BlendMode::kUniform &&
        distance(out[i].position(), t[i].position() + off) > 1e-9) {
      return "uniform shift differs at waypoint " + std::to_string(i);
    }
  }
  return {};
}

inline std::string check_clearance_case(Rng& rng) {
  const Trajectory t = random_trajectory(rng, 2, 30);
  const Vec3 c = random_point(rng, 5.0);
  const double d = uniform(rng, 0.0, 8.0);
  const Trajectory out = enforce_min_distance(t, c, d);
  if (out.size() != t.size()) return "size changed";
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double got = distance(out[i].position(), c);
    if (got < d - 1e-6) {
      return "waypoint " + std::to_string(i) + " at " + std::to_string(got) +
             " < " + std::to_string(d);
    }
  }
  return {};
}

inline std::string check_speed_far_case(Rng& rng) {
  const Trajectory t = random_trajectory(rng);
  const Vec3 c = random_point(rng, 5.0);
  const double radius = uniform(rng, 0.5, 6.0);
  const double factor = uniform(rng, 0.0, 4.0);
  const bool absolute = uniform_int(rng, 0, 1) == 1;
  const Trajectory out = scale_speed_near(t, c, radius, factor, absolute);
  if (out.size() != t.size()) return "size changed";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (out[i].position() != t[i].position()) return "position changed";
    if (out[i].v < 0) return "negative velocity";
    const double rho = distance(t[i].position(), c) / radius;
    if (rho >= 2.0 && out[i].v != t[i].v) {
      return "velocity changed at rho " + std::to_string(rho);
    }
  }
  return {};
}

inline std::string check_smooth_case(Rng& rng) {
  const Trajectory t = random_trajectory(rng, 2, 30);
  const int window = 2 * uniform_int(rng, 0, 5) + 1;
  const Trajectory out = smooth(t, window);
  if (out.size() != t.size()) return "size changed";
  if (!same_waypoint(out.front(), t.front()) || !same_waypoint(out.back(), t.back())) {
    return "endpoint changed";
  }
  // Every output waypoint is an average of input waypoints within half a
  // window, so it lies in their bounding box.
  const std::size_t half = static_cast<std::size_t>(window / 2);
  constexpr double kSlack = 1e-9;
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    const std::size_t lo = i >= half ? i - half : 0;
    const std::size_t hi = std::min(t.size() - 1, i + half);
    Vec3 mn = t[lo].position();
    Vec3 mx = mn;
    for (std::size_t j = lo; j <= hi; ++j) {
      const Vec3 p = t[j].position();
      mn = {std::min(mn.x, p.x), std::min(mn.y, p.y), std::min(mn.z, p.z)};
      mx = {std::max(mx.x, p.x), std::max(mx.y, p.y), std::max(mx.z, p.z)};
    }
    const Vec3 p = out[i].position();
    if (p.x < mn.x - kSlack || p.y < mn.y - kSlack || p.z < mn.z - kSlack ||
        p.x > mx.x + kSlack || p.y > mx.y + kSlack || p.z > mx.z + kSlack) {
      return "waypoint " + std::to_string(i) + " outside its window hull";
    }
    if (out[i].v < 0) return "negative velocity";
  }
  return {};
}

inline std::string check_truncate_case(Rng& rng) {
  const Trajectory t = random_trajectory(rng, 2, 30);
  const Vec3 c = random_point(rng);
  const int ramp = uniform_int(rng, 1, 8);
  const Trajectory out = truncate_at_nearest(t, c, ramp);
  if (out.size() < 2) return "fewer than 2 waypoints";
  if (out.back().v != 0.0) return "final velocity not zero";
  const std::size_t k = nearest_index(t, c).index;
  const std::size_t last = k == 0 ? 0 : out.size() - 1;
  if (out[last].position() != t[k].position()) {
    return "stop point is not the nearest waypoint";
  }
  return {};
}

/// Runs `cases` seeded instances; returns the first failure with its case
/// number, or an empty string.
inline std::string run_cases(std::uint64_t seed, int cases,
                             const std::function<std::string(Rng&)>& check) {
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    std::string err = check(rng);
    if (!err.empty()) return "case " + std::to_string(i) + ": " + err;
  }
  return {};
}

}  // namespace trajadapt::testing

#endif  // TRAJADAPT_TESTS_PROPERTY_SUPPORT_HPP_
